#ifndef SKEWPF_MATCHDIR_HPP
#define SKEWPF_MATCHDIR_HPP

#include <utility>
#include <vector>

#include "skewpf/partition_fn.hpp"
#include "skewpf/rational.hpp"
#include "skewpf/rational_matrix.hpp"
#include "skewpf/skew_tensor.hpp"

namespace skewpf {

/*
 * Directed perfect matching on [2m] (1-based): m ordered arcs covering
 * every element exactly once. Arcs are stored sorted by their smaller
 * endpoint, so list order is never structure.
 */
struct DirectedMatching {
    int m = 0;
    std::vector<std::pair<int, int>> arcs;

    DirectedMatching() = default;
    explicit DirectedMatching(std::vector<std::pair<int, int>> arcs_);  // validates + normalizes

    bool operator==(const DirectedMatching& other) const { return arcs == other.arcs; }
    bool operator<(const DirectedMatching& other) const { return arcs < other.arcs; }

    static DirectedMatching canonical(int m);  // arcs (1,2),(3,4),...
};

// All 2^m (2m-1)!! directed matchings in a deterministic order.
std::vector<DirectedMatching> all_directed_matchings(int m,
                                                     unsigned long long bound = kDefaultBound);

// Relabel by a permutation of [2m] (1-based table).
DirectedMatching permute_matching(const DirectedMatching& mm, const std::vector<int>& perm);

DirectedMatching flip_arc(const DirectedMatching& mm, int arc_index);

// Cycle count of the union multigraph (coinciding arcs form a 2-cycle) and
// the parity of arcs traversed against the lowest-label-first traversal.
std::pair<int, int> union_stats(const DirectedMatching& m1, const DirectedMatching& m2);

// Sign of any relabeling carrying the matching arcwise onto the canonical
// one; well defined because the canonical stabilizer is even.
int matching_sign(const DirectedMatching& mm);

SparseTensor tau(const DirectedMatching& mm, int ell);

// A = (-2*ell)^cycles and B = (2*ell)^cycles * (-1)^(odd parity + m) over
// all directed matchings, consistent row/column registry.
std::pair<RationalMatrix, RationalMatrix> build_A_B(int ell, int m,
                                                    unsigned long long bound = kDefaultBound);

// (-1)^odd == sign(M) sign(N) (-1)^cycles, exhaustively over ordered pairs.
bool verify_sign_identity(int m, unsigned long long bound = kDefaultBound);

// tau annihilates the alternating sum over S_{2ell+2} of relabelings of the
// canonical matching, and every single-arc flip sum M + M'.
bool v0_annihilation(int ell, int m, unsigned long long bound = kDefaultBound);

// <tau(M), tau(N)> equals the B matrix entry for all pairs.
bool gram_check(int ell, int m, unsigned long long bound = kDefaultBound);

}  // namespace skewpf

#endif
