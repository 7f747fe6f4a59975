#ifndef SKEWPF_PARTITION_FN_HPP
#define SKEWPF_PARTITION_FN_HPP

#include <span>
#include <vector>

#include "skewpf/multigraph.hpp"
#include "skewpf/rational.hpp"
#include "skewpf/skew_tensor.hpp"

namespace skewpf {

inline constexpr unsigned long long kDefaultBound = 100000000ULL;

/*
 * Directed multigraph with a total order of the incident darts at each
 * vertex. Arc a owns darts 2a (tail side) and 2a+1 (head side); a directed
 * loop therefore occurs twice in its vertex's order.
 */
struct LocallyOrderedDigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arcs;   // (tail vertex, head vertex)
    std::vector<std::vector<int>> kappa;     // kappa[v][p] = dart in position p+1

    int arc_count() const { return static_cast<int>(arcs.size()); }
    int dart_vertex(int dart) const {
        const auto& a = arcs[dart / 2];
        return (dart % 2 == 0) ? a.first : a.second;
    }
    void validate() const;  // every dart listed exactly once at its vertex
};

// View an oriented, locally ordered multigraph as a digraph. The graph must
// be circle-free; circles are handled by the graph-level functions.
LocallyOrderedDigraph to_digraph(const Multigraph& g, const Orientation& w, const LocalOrder& k);

// Exact sum over all k^|E| edge colorings of per-vertex model values.
// Circles are out of scope here (PreconditionError).
Rat partition_function(const SymModel& h, const Multigraph& g,
                       unsigned long long bound = kDefaultBound);

// Word read off at v: incoming positions copy the arc color, outgoing
// positions shift it by ell modulo 2*ell (representatives in [2*ell]).
std::vector<int> phi_v(const LocallyOrderedDigraph& d, int v, std::span<const int> arc_colors,
                       int ell);

// Signed sum over all (2*ell)^|A| arc colorings; the sign is the parity of
// the number of arcs colored in [ell].
Rat skew_partition_digraph(const SkewTensor& h, const LocallyOrderedDigraph& d,
                           unsigned long long bound = kDefaultBound);

// The signed vertex-model sum for a fixed Eulerian orientation and
// compatible local order, evaluated directly with the dual-basis letters at
// even positions. Equals (-1)^circuits times the digraph sum.
Rat skew_partition_triple(const SkewTensor& h, const Multigraph& g, const Orientation& w,
                          const LocalOrder& k, unsigned long long bound = kDefaultBound);

// Graph invariant: zero for non-Eulerian graphs, otherwise the value of any
// (and by invariance every) orientation/order pair, times (-2*ell) per
// circle.
Rat skew_partition(const SkewTensor& h, const Multigraph& g,
                   unsigned long long bound = kDefaultBound);

// Partial sum over the 2^|E| shift patterns on top of a base coloring
// phi : E -> [ell]. Summing over all base colorings recovers
// skew_partition_triple.
Rat skew_partition_fixed_phi(const SkewTensor& h, const Multigraph& g, const Orientation& w,
                             const LocalOrder& k, const std::vector<int>& base_coloring);

struct InvarianceReport {
    bool consistent = true;
    Rat value;
    long pairs_checked = 0;
    bool exhaustive = true;
};

// Recomputes the skew partition value over enumerated (orientation, order)
// pairs (sampled once past the budget) and checks they all agree, including
// the per-base-coloring partial sums.
InvarianceReport verify_invariance(const SkewTensor& h, const Multigraph& g, long budget = 20000,
                                   unsigned seed = 1);

}  // namespace skewpf

#endif
