#ifndef SKEWPF_IO_HPP
#define SKEWPF_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "skewpf/connection.hpp"
#include "skewpf/multigraph.hpp"
#include "skewpf/skew_tensor.hpp"

namespace skewpf {

/*
 * Text formats. '#' starts a comment anywhere on a line.
 *
 * Graph:      graph <vertex_count> <circle_count>
 *             edge <u> <v>            (0-indexed; loop when u == v;
 *                                      file order fixes dart numbering)
 *
 * Fragment:   graph format plus       label <vertex> <index>   (1-based index)
 *
 * Tensor:     skewtensor <ell>
 *             <comma-separated sorted subset> <numerator>[/<denominator>]
 *             with '-' for the empty subset.
 */
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph_file(const std::string& path);

Fragment parse_fragment(std::istream& in);
// One fragment per 'graph' header line.
std::vector<Fragment> parse_fragments_file(const std::string& path);

SkewTensor parse_skew_tensor(std::istream& in);
SkewTensor parse_skew_tensor_file(const std::string& path);

std::string format_graph(const Multigraph& g);
std::string format_skew_tensor(const SkewTensor& h);

// Named inputs for quick CLI use: "C<n>", "P<n>", "bowtie", "fig8",
// "bouquet<n>", "circle", "empty"; anything else is read as a file path.
Multigraph graph_from_name_or_file(const std::string& arg);

}  // namespace skewpf

#endif
