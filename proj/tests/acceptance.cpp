/*
 * Acceptance suite: one line per criterion, exact arithmetic throughout.
 * Every comparison below is an equality of rationals or integers; there are
 * no tolerances anywhere.
 */
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "skewpf/connection.hpp"
#include "skewpf/enumerate.hpp"
#include "skewpf/errors.hpp"
#include "skewpf/martin.hpp"
#include "skewpf/matchdir.hpp"
#include "skewpf/partition_fn.hpp"
#include "skewpf/rational_matrix.hpp"
#include "skewpf/skew_tensor.hpp"
#include "skewpf/verify.hpp"

using namespace skewpf;

namespace {

struct Criterion {
    bool passed = true;
    long instances = 0;
    std::string detail;

    void fail(const std::string& what) {
        passed = false;
        if (detail.empty()) detail = what;
    }
};

// 1. The skew partition of the two-color model is (-2)^components on
//    2-regular graphs and zero on everything else.
Criterion criterion_two_regular_values() {
    Criterion c;
    const SkewTensor h = build_martin_model(1);
    for (const Multigraph& g : two_regular_family(8)) {
        ++c.instances;
        const Rat expected = rat_pow(Rat(-2), component_count(g));
        if (skew_partition(h, g) != expected) c.fail("2-regular value wrong on " + canonical_edge_key(g));
    }
    // Circles are 2-regular components too.
    for (int circles = 1; circles <= 3; ++circles) {
        ++c.instances;
        const auto g = disjoint_union(Multigraph::cycle(3), Multigraph::circles(circles));
        if (skew_partition(h, g) != rat_pow(Rat(-2), 1 + circles)) c.fail("circle component value");
    }
    // Eulerian but not 2-regular.
    for (const Multigraph& g : eulerian_family(6)) {
        if (is_two_regular(g) || g.empty()) continue;
        ++c.instances;
        if (skew_partition(h, g) != 0) c.fail("nonzero on " + canonical_edge_key(g));
    }
    // Not Eulerian at all.
    for (const Multigraph& g : {Multigraph::path(1), Multigraph::path(3), Multigraph::cycle(3).add_edge(0, 1)}) {
        ++c.instances;
        if (skew_partition(h, g) != 0) c.fail("nonzero on a non-Eulerian graph");
    }
    return c;
}

// 2. Skew partition of the sign models equals both independent evaluations
//    of the circuit partition polynomial at negative even integers.
Criterion criterion_negative_even_bridge() {
    Criterion c;
    for (int ell = 1; ell <= 2; ++ell) {
        const SkewTensor h = build_martin_model(ell);
        for (const Multigraph& g : eulerian_family(6)) {
            ++c.instances;
            const Int by_transitions = circuit_partition_polynomial(g).eval(Int(-2 * ell));
            const Int by_partitions = eval_negative_even(g, ell);
            const Rat by_skew = skew_partition(h, g);
            if (by_transitions != by_partitions || Rat(by_transitions) != by_skew) {
                c.fail("disagreement at ell=" + std::to_string(ell) + " on " +
                       canonical_edge_key(g));
            }
        }
    }
    return c;
}

// 3. The ordinary partition function of the double-factorial model equals
//    the circuit partition polynomial at positive integers.
Criterion criterion_positive_bridge() {
    Criterion c;
    for (int k = 1; k <= 3; ++k) {
        const SymModel model = build_double_factorial_model(k);
        for (const Multigraph& g : eulerian_family(6)) {
            ++c.instances;
            const Int by_transitions = circuit_partition_polynomial(g).eval(Int(k));
            const Int by_subsets = eval_positive(g, k);
            const Rat by_model = partition_function(model, g);
            if (by_transitions != by_subsets || Rat(by_transitions) != by_model) {
                c.fail("disagreement at k=" + std::to_string(k) + " on " + canonical_edge_key(g));
            }
        }
    }
    return c;
}

// 4. One value per graph across every orientation/order pair.
Criterion criterion_invariance() {
    Criterion c;
    for (int ell = 1; ell <= 2; ++ell) {
        const SkewTensor h = build_martin_model(ell);
        for (const Multigraph& g : eulerian_family(4)) {
            const auto report = verify_invariance(h, g, 1000000);
            c.instances += report.pairs_checked;
            if (!report.consistent || !report.exhaustive) {
                c.fail("invariance failed on " + canonical_edge_key(g));
            }
        }
    }
    return c;
}

// 5. The rewiring sums vanish for every Eulerian graph and 2-edge subset.
Criterion criterion_rewiring_relation() {
    Criterion c;
    const auto report = check_relation_family(1, 6);
    c.instances = report.instances;
    if (!report.passed()) c.fail(report.failures.front());
    return c;
}

// 6. Connection submatrices on generated fragment families obey the rank
//    bound with a pivot certificate.
Criterion criterion_connection_rank() {
    Criterion c;
    const SkewTensor h = build_martin_model(1);
    GraphEvaluator f = [&](const Multigraph& g) { return skew_partition(h, g); };
    for (int k = 1; k <= 2; ++k) {
        const auto family = fragment_family(2 * k, 5);
        const RationalMatrix m = connection_submatrix(f, family);
        const RankCertificate cert = exact_rank(m);
        ++c.instances;
        const Int bound = int_pow(2, 2ul * k);
        if (Int(cert.rank) > bound) {
            c.fail("rank " + std::to_string(cert.rank) + " above bound " + bound.get_str() +
                   " for 2k=" + std::to_string(2 * k));
        }
        if (static_cast<int>(cert.pivot_rows.size()) != cert.rank) c.fail("certificate broken");
        std::ostringstream note;
        note << "2k=" << 2 * k << ": " << family.size() << " fragments, rank " << cert.rank
             << " <= " << bound.get_str();
        c.detail += (c.detail.empty() ? "" : "; ") + note.str();
    }
    return c;
}

// 7. Matching matrix ranks: the Catalan numbers at base -2, and the square
//    bound at base -4.
Criterion criterion_matching_ranks() {
    Criterion c;
    for (int k = 1; k <= 4; ++k) {
        ++c.instances;
        const auto cert = exact_rank(matching_matrix(-2, k));
        const Int expected = catalan_rank(k);
        const Int size = double_factorial(2 * k - 1);
        if (Int(cert.rows) != size) c.fail("matching matrix size wrong");
        if (Int(cert.rank) != expected) {
            c.fail("rank of the base -2 matrix at k=" + std::to_string(k) + " is " +
                   std::to_string(cert.rank) + ", expected " + expected.get_str());
        }
    }
    for (int k = 1; k <= 3; ++k) {
        ++c.instances;
        const auto cert = exact_rank(matching_matrix(-4, k));
        if (Int(cert.rank) > int_pow(4, 2ul * k)) {
            c.fail("rank of the base -4 matrix exceeds the bound at k=" + std::to_string(k));
        }
    }
    return c;
}

// 8. Gram identities: tau pairings against B, and fragment tensors against
//    glued evaluations.
Criterion criterion_gram() {
    Criterion c;
    for (const auto& [m, ell] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
        const auto report = check_gram_matchings(ell, m);
        c.instances += report.instances;
        if (!report.passed()) c.fail(report.failures.front());
    }
    const auto fragments = check_gram_fragments(4, 1);
    c.instances += fragments.instances;
    if (!fragments.passed()) c.fail(fragments.failures.front());
    return c;
}

// 9. The sign identity, and annihilation of the kernel generators.
Criterion criterion_signs_and_kernel() {
    Criterion c;
    for (int m = 1; m <= 3; ++m) {
        const auto report = check_sign_identity(m);
        c.instances += report.instances;
        if (!report.passed()) c.fail(report.failures.front());
    }
    for (const auto& [ell, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}) {
        ++c.instances;
        if (!v0_annihilation(ell, m)) {
            c.fail("kernel generator not annihilated at ell=" + std::to_string(ell) +
                   " m=" + std::to_string(m));
        }
    }
    return c;
}

// 10. Signed orbit-count sums are falling factorials, vanishing at the
//     positive integers below m.
Criterion criterion_falling_factorial() {
    Criterion c;
    for (int m = 0; m <= 6; ++m) {
        for (long x = -4; x <= 4; ++x) {
            ++c.instances;
            const Int brute = signed_cycle_count_sum(m, Int(x));
            if (brute != falling_factorial(Int(x), m)) {
                c.fail("mismatch at m=" + std::to_string(m) + " x=" + std::to_string(x));
            }
            if (x >= 0 && x < m && brute != 0) {
                c.fail("expected vanishing at m=" + std::to_string(m) + " x=" + std::to_string(x));
            }
        }
    }
    return c;
}

}  // namespace

int main() {
    using Runner = std::function<Criterion()>;
    const std::vector<std::pair<std::string, Runner>> criteria = {
        {"1 two-color values on (non-)2-regular graphs", criterion_two_regular_values},
        {"2 negative-even bridge, three routes", criterion_negative_even_bridge},
        {"3 positive bridge, three routes", criterion_positive_bridge},
        {"4 orientation/order invariance", criterion_invariance},
        {"5 rewiring relation", criterion_rewiring_relation},
        {"6 connection submatrix ranks", criterion_connection_rank},
        {"7 matching matrix ranks", criterion_matching_ranks},
        {"8 gram identities", criterion_gram},
        {"9 sign identity and kernel generators", criterion_signs_and_kernel},
        {"10 falling factorial identity", criterion_falling_factorial},
    };
    bool all_passed = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, runner] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Criterion result;
        try {
            result = runner();
        } catch (const std::exception& e) {
            result.fail(std::string("exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        all_passed = all_passed && result.passed;
        std::ostringstream line;
        line << (result.passed ? "PASS" : "FAIL") << " criterion " << name << " ("
             << result.instances << " instances, " << static_cast<long>(ms) << " ms)";
        if (!result.detail.empty()) line << " -- " << result.detail;
        std::cout << line.str() << '\n';
    }
    const double total =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (all_passed ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << " ("
              << static_cast<long>(total) << " ms total)\n";
    return all_passed ? 0 : 1;
}
