#ifndef SKEWPF_CONNECTION_HPP
#define SKEWPF_CONNECTION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "skewpf/matchdir.hpp"
#include "skewpf/multigraph.hpp"
#include "skewpf/partition_fn.hpp"
#include "skewpf/rational.hpp"
#include "skewpf/rational_matrix.hpp"
#include "skewpf/skew_tensor.hpp"

namespace skewpf {

/*
 * Multigraph with k distinct degree-one vertices labeled 1..k; gluing joins
 * equally labeled open ends. labels[i] is the vertex carrying label i+1.
 */
struct Fragment {
    Multigraph graph;
    std::vector<int> labels;

    int k() const { return static_cast<int>(labels.size()); }
    void validate() const;
    // The unique edge incident with the vertex labeled `label` (1-based).
    int open_end_edge(int label) const;
};

// Remove the labeled vertices and splice equally labeled open ends. Chains
// of spliced edges with no internal vertex close up into circles.
// Throws LabelMismatchError when the fragments disagree on k.
Multigraph glue(const Fragment& f1, const Fragment& f2);

using GraphEvaluator = std::function<Rat(const Multigraph&)>;

// Principal submatrix of the (infinite) connection matrix on the given
// fragment list: entry (i,j) = f(F_i * F_j).
RationalMatrix connection_submatrix(const GraphEvaluator& f,
                                    const std::vector<Fragment>& fragments);

// Undirected perfect matchings of [n] (1-based, pairs sorted), in a
// deterministic order.
std::vector<std::vector<std::pair<int, int>>> all_perfect_matchings(int n);

// (2k-1)!! square matrix with entry b^(cycles of M union N) over undirected
// perfect matchings of [2k].
RationalMatrix matching_matrix(const Int& b, int k, unsigned long long bound = kDefaultBound);

// (2k)! / ((k+1)! k!)
Int catalan_rank(int k);

// Standard Young tableaux count: n! over the product of hook lengths.
Int hook_length_dimension(const std::vector<int>& partition);

/*
 * Replace an oriented edge subset U (|U| = ell+1) by the rewired edges
 * {pi(i), pi(ell+1+i)}: tails of U are labeled 1..ell+1 in subset order and
 * heads ell+2..2ell+2; pi is a permutation of [2ell+2] given as a 1-based
 * table. The identity permutation reproduces the graph.
 */
Multigraph build_G_U_pi(const Multigraph& g, const std::vector<int>& u_edges,
                        const std::vector<unsigned char>& orient, const std::vector<int>& pi);

// Sum of f over all (2ell+2)! rewirings for one fixed orientation choice.
Rat skew_relation_sum(const GraphEvaluator& f, const Multigraph& g,
                      const std::vector<int>& u_edges, const std::vector<unsigned char>& orient,
                      int ell);

// True iff the rewiring sum vanishes for the canonical orientation of U
// and for one alternate choice (first edge flipped).
bool verify_skew_relation(const GraphEvaluator& f, const Multigraph& g,
                          const std::vector<int>& u_edges, int ell,
                          unsigned long long bound = kDefaultBound);

/*
 * An Eulerian orientation of a fragment balances every unlabeled vertex and
 * has exactly k labeled vertices with an incoming arc. A compatible local
 * order then decomposes the edges into circuits plus k directed walks
 * between labeled vertices; the walks form a directed matching on [2k].
 */
struct FragmentDecomposition {
    int circuit_count = 0;
    DirectedMatching walk_matching;
    std::vector<std::vector<int>> walk_edges;  // walk_edges[i]: edges of arc i, start to end
    std::vector<std::vector<int>> circuits;
};

Orientation fragment_eulerian_orientation(const Fragment& f);
LocalOrder fragment_local_order(const Fragment& f, const Orientation& w);
FragmentDecomposition fragment_decomposition(const Fragment& f, const Orientation& w,
                                             const LocalOrder& k);

/*
 * Order-2k tensor whose Gram pairing computes gluings: slot i carries the
 * open-end color at label i, walk-end slots through the dual basis. The
 * sign count covers every edge colored in [ell] except each walk's first
 * edge; together with the dual letters this is exactly what makes
 * the gluing identity hold for walks of any length.
 */
SparseTensor fragment_tensor(const SkewTensor& h, const Fragment& f, const Orientation& w,
                             const LocalOrder& k, unsigned long long bound = kDefaultBound);

// Brute-force sum of sgn(pi) x^(orbits of pi) over the symmetric group on
// m points; equals the falling factorial x(x-1)...(x-m+1).
Int signed_cycle_count_sum(int m, const Int& x, unsigned long long bound = kDefaultBound);

}  // namespace skewpf

#endif
