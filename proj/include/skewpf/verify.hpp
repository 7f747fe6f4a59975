#ifndef SKEWPF_VERIFY_HPP
#define SKEWPF_VERIFY_HPP

#include <string>
#include <vector>

#include "skewpf/multigraph.hpp"
#include "skewpf/partition_fn.hpp"
#include "skewpf/rational.hpp"
#include "skewpf/skew_tensor.hpp"

namespace skewpf {

// Shared result shape for the verification suites surfaced by the CLI and
// the acceptance runner. A check passes iff failures is empty.
struct CheckReport {
    std::string check;
    long instances = 0;
    std::vector<std::string> failures;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

// Orientation/order independence of the skew partition value on one graph.
CheckReport check_invariance(const SkewTensor& h, const Multigraph& g, long budget = 20000,
                             unsigned seed = 1);

// Rewiring relation for a single graph and edge subset.
CheckReport check_relation_single(const SkewTensor& h, const Multigraph& g,
                                  const std::vector<int>& u_edges, int ell,
                                  unsigned long long bound = kDefaultBound);

// Rewiring relation swept over every Eulerian graph up to max_edges and
// every edge subset of size ell+1.
CheckReport check_relation_family(int ell, int max_edges,
                                  unsigned long long bound = kDefaultBound);

// Gram identity between tau images and the B matrix.
CheckReport check_gram_matchings(int ell, int m, unsigned long long bound = kDefaultBound);

// Gram identity for gluings of Eulerian 2-fragment pairs.
CheckReport check_gram_fragments(int max_edges, int ell,
                                 unsigned long long bound = kDefaultBound);

CheckReport check_v0(int ell, int m, unsigned long long bound = kDefaultBound);

CheckReport check_sign_identity(int m, unsigned long long bound = kDefaultBound);

// Three-way agreement of the circuit partition polynomial with both
// closed-form evaluation routes and with the two partition functions, over
// every Eulerian graph up to max_edges.
CheckReport check_agree(int max_edges, int k_max = 3, int ell_max = 2,
                        unsigned long long bound = kDefaultBound);

}  // namespace skewpf

#endif
