#include "skewpf/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "skewpf/connection.hpp"
#include "skewpf/enumerate.hpp"
#include "skewpf/errors.hpp"
#include "skewpf/martin.hpp"
#include "skewpf/matchdir.hpp"

namespace skewpf {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string describe(const Multigraph& g) { return canonical_edge_key(g); }

}  // namespace

CheckReport check_invariance(const SkewTensor& h, const Multigraph& g, long budget,
                             unsigned seed) {
    Stopwatch timer;
    CheckReport report;
    report.check = "invariance";
    const auto result = verify_invariance(h, g, budget, seed);
    report.instances = result.pairs_checked;
    if (!result.consistent) {
        report.failures.push_back("value depends on the orientation/order pair for " +
                                  describe(g));
    }
    report.elapsed_ms = timer.ms();
    return report;
}

CheckReport check_relation_single(const SkewTensor& h, const Multigraph& g,
                                  const std::vector<int>& u_edges, int ell,
                                  unsigned long long bound) {
    Stopwatch timer;
    CheckReport report;
    report.check = "relation";
    GraphEvaluator f = [&](const Multigraph& glued) { return skew_partition(h, glued, bound); };
    report.instances = 1;
    if (!verify_skew_relation(f, g, u_edges, ell, bound)) {
        std::ostringstream what;
        what << "rewiring sum nonzero for " << describe(g) << " U={";
        for (size_t i = 0; i < u_edges.size(); ++i) what << (i ? "," : "") << u_edges[i];
        what << "}";
        report.failures.push_back(what.str());
    }
    report.elapsed_ms = timer.ms();
    return report;
}

CheckReport check_relation_family(int ell, int max_edges, unsigned long long bound) {
    Stopwatch timer;
    CheckReport report;
    report.check = "relation";
    const SkewTensor h = build_martin_model(ell);

    // Rewired graphs repeat heavily across permutations; cache values.
    std::map<std::string, Rat> cache;
    GraphEvaluator f = [&](const Multigraph& glued) {
        const std::string key = canonical_edge_key(glued);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const Rat value = skew_partition(h, glued, bound);
        cache.emplace(key, value);
        return value;
    };

    for (const Multigraph& g : eulerian_family(max_edges)) {
        if (g.edge_count() < ell + 1) continue;
        std::vector<int> u_edges(ell + 1);
        // All subsets of size ell+1 in lexicographic order.
        std::function<void(int, int)> choose = [&](int from, int need) {
            if (need == 0) {
                ++report.instances;
                if (!verify_skew_relation(f, g, u_edges, ell, bound)) {
                    std::ostringstream what;
                    what << "rewiring sum nonzero for " << describe(g) << " U={";
                    for (size_t i = 0; i < u_edges.size(); ++i) {
                        what << (i ? "," : "") << u_edges[i];
                    }
                    what << "}";
                    report.failures.push_back(what.str());
                }
                return;
            }
            for (int e = from; e <= g.edge_count() - need; ++e) {
                u_edges[u_edges.size() - need] = e;
                choose(e + 1, need - 1);
            }
        };
        choose(0, ell + 1);
    }
    report.elapsed_ms = timer.ms();
    return report;
}

CheckReport check_gram_matchings(int ell, int m, unsigned long long bound) {
    Stopwatch timer;
    CheckReport report;
    report.check = "gram";
    const auto matchings = all_directed_matchings(m, bound);
    report.instances = static_cast<long>(matchings.size()) * static_cast<long>(matchings.size());
    if (!gram_check(ell, m, bound)) {
        report.failures.push_back("tau Gram product disagrees with the B matrix for m=" +
                                  std::to_string(m) + " ell=" + std::to_string(ell));
    }
    report.elapsed_ms = timer.ms();
    return report;
}

CheckReport check_gram_fragments(int max_edges, int ell, unsigned long long bound) {
    Stopwatch timer;
    CheckReport report;
    report.check = "gram";
    const SkewTensor h = build_martin_model(ell);
    const auto family = fragment_family(2, max_edges);

    struct Prepared {
        Fragment fragment;
        SparseTensor tensor;
        int sign;
    };
    std::vector<Prepared> prepared;
    for (const Fragment& f : family) {
        Orientation w;
        try {
            w = fragment_eulerian_orientation(f);
        } catch (const NotEulerianFragmentError&) {
            continue;
        }
        const LocalOrder k = fragment_local_order(f, w);
        const auto dec = fragment_decomposition(f, w, k);
        prepared.push_back(
            {f, fragment_tensor(h, f, w, k, bound), matching_sign(dec.walk_matching)});
    }
    for (const auto& p1 : prepared) {
        for (const auto& p2 : prepared) {
            ++report.instances;
            const Rat direct = skew_partition(h, glue(p1.fragment, p2.fragment), bound);
            Rat via_gram = bilinear_form(p1.tensor, p2.tensor) * Rat(p1.sign * p2.sign);
            via_gram = -via_gram;  // one pair of open ends glued: k = 1
            if (direct != via_gram) {
                report.failures.push_back("Gram factorization mismatch: " +
                                          describe(p1.fragment.graph) + " * " +
                                          describe(p2.fragment.graph) + " direct=" +
                                          to_string(direct) + " gram=" + to_string(via_gram));
            }
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

CheckReport check_v0(int ell, int m, unsigned long long bound) {
    Stopwatch timer;
    CheckReport report;
    report.check = "v0";
    report.instances = 1;
    if (!v0_annihilation(ell, m, bound)) {
        report.failures.push_back("tau does not annihilate the kernel generators for ell=" +
                                  std::to_string(ell) + " m=" + std::to_string(m));
    }
    report.elapsed_ms = timer.ms();
    return report;
}

CheckReport check_sign_identity(int m, unsigned long long bound) {
    Stopwatch timer;
    CheckReport report;
    report.check = "signid";
    const auto matchings = all_directed_matchings(m, bound);
    report.instances = static_cast<long>(matchings.size()) * static_cast<long>(matchings.size());
    if (!verify_sign_identity(m, bound)) {
        report.failures.push_back("sign identity fails for m=" + std::to_string(m));
    }
    report.elapsed_ms = timer.ms();
    return report;
}

CheckReport check_agree(int max_edges, int k_max, int ell_max, unsigned long long bound) {
    Stopwatch timer;
    CheckReport report;
    report.check = "agree";
    std::vector<SymModel> models;
    for (int k = 1; k <= k_max; ++k) models.push_back(build_double_factorial_model(k));
    std::vector<SkewTensor> martin;
    for (int ell = 1; ell <= ell_max; ++ell) martin.push_back(build_martin_model(ell));

    for (const Multigraph& g : eulerian_family(max_edges)) {
        const IntPolynomial j = circuit_partition_polynomial(g, bound);
        for (int k = 1; k <= k_max; ++k) {
            ++report.instances;
            const Int via_poly = j.eval(k);
            const Int via_subsets = eval_positive(g, k, bound);
            const Rat via_model = partition_function(models[k - 1], g, bound);
            if (via_poly != via_subsets || Rat(via_poly) != via_model) {
                report.failures.push_back("positive evaluation disagrees at k=" +
                                          std::to_string(k) + " on " + describe(g));
            }
        }
        for (int ell = 1; ell <= ell_max; ++ell) {
            ++report.instances;
            const Int via_poly = j.eval(-2 * ell);
            const Int via_subsets = eval_negative_even(g, ell, bound);
            const Rat via_skew = skew_partition(martin[ell - 1], g, bound);
            if (via_poly != via_subsets || Rat(via_poly) != via_skew) {
                report.failures.push_back("negative even evaluation disagrees at ell=" +
                                          std::to_string(ell) + " on " + describe(g));
            }
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

}  // namespace skewpf
