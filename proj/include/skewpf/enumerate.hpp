#ifndef SKEWPF_ENUMERATE_HPP
#define SKEWPF_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "skewpf/connection.hpp"
#include "skewpf/multigraph.hpp"

namespace skewpf {

/*
 * Bounded families for the property and acceptance suites. Graphs are
 * generated as sorted edge lists in a first-occurrence-canonical vertex
 * labeling, which removes relabeled duplicates cheaply (not up to full
 * isomorphism). No isolated vertices, no circles; callers add circles
 * where a case needs them.
 */
struct GraphEnumOptions {
    int max_edges = 4;
    int max_vertices = -1;  // default: max_edges (every vertex needs degree >= 1)
    bool require_even_degrees = false;
    int max_degree = -1;  // unrestricted when < 0
    bool include_empty = true;
};

void enumerate_multigraphs(const GraphEnumOptions& opt,
                           const std::function<void(const Multigraph&)>& cb);

std::vector<Multigraph> eulerian_family(int max_edges);
std::vector<Multigraph> two_regular_family(int max_edges);

void enumerate_eulerian_orientations(const Multigraph& g,
                                     const std::function<void(const Orientation&)>& cb);

// Number of local orders compatible with a fixed Eulerian orientation.
Int count_compatible_orders(const Multigraph& g, const Orientation& w);

// Enumerate them; return false from the callback to stop early.
void enumerate_compatible_orders(const Multigraph& g, const Orientation& w,
                                 const std::function<bool(const LocalOrder&)>& cb);

// Fragments with `ends` labeled degree-one vertices, unlabeled vertices of
// even degree, no circles, at most max_edges edges (open ends included),
// deduplicated by canonical key; deterministic order, truncated at cap.
std::vector<Fragment> fragment_family(int ends, int max_edges, int cap = 10000);

}  // namespace skewpf

#endif
