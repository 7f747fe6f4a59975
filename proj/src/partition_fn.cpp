#include "skewpf/partition_fn.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "skewpf/errors.hpp"

namespace skewpf {

void LocallyOrderedDigraph::validate() const {
    std::vector<std::vector<int>> expected(vertex_count);
    for (int d = 0; d < 2 * arc_count(); ++d) {
        const int v = dart_vertex(d);
        if (v < 0 || v >= vertex_count) throw IndexOutOfRangeError("arc endpoint out of range");
        expected[v].push_back(d);
    }
    if (static_cast<int>(kappa.size()) != vertex_count) {
        throw SizeMismatchError("kappa must list every vertex");
    }
    for (int v = 0; v < vertex_count; ++v) {
        std::vector<int> sorted = kappa[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expected[v]) {
            throw SizeMismatchError("kappa must list each dart at its vertex exactly once");
        }
    }
}

LocallyOrderedDigraph to_digraph(const Multigraph& g, const Orientation& w, const LocalOrder& k) {
    if (g.circle_count != 0) throw PreconditionError("circles cannot be viewed as a digraph");
    if (!local_order_is_compatible(g, w, k)) {
        throw NotCompatibleError("local order is not compatible with the orientation");
    }
    LocallyOrderedDigraph d;
    d.vertex_count = g.vertex_count;
    d.arcs.reserve(g.edges.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        d.arcs.emplace_back(g.dart_vertex(w.tail_dart(e)), g.dart_vertex(w.head_dart(e)));
    }
    d.kappa.assign(g.vertex_count, {});
    for (int v = 0; v < g.vertex_count; ++v) {
        for (int dart : k.at[v]) {
            const int e = dart / 2;
            d.kappa[v].push_back(dart == w.tail_dart(e) ? 2 * e : 2 * e + 1);
        }
    }
    return d;
}

namespace {

void check_enumeration_bound(const Int& base, unsigned long exp, unsigned long long bound) {
    const Int count = int_pow(base, exp);
    if (count > Int(static_cast<unsigned long>(bound))) throw TooLargeError(count, bound);
}

// Mixed-radix odometer over `digits` positions with values 1..radix.
bool advance_coloring(std::vector<int>& coloring, int radix) {
    size_t i = 0;
    while (i < coloring.size() && coloring[i] == radix) coloring[i++] = 1;
    if (i == coloring.size()) return false;
    ++coloring[i];
    return true;
}

}  // namespace

Rat partition_function(const SymModel& h, const Multigraph& g, unsigned long long bound) {
    if (g.circle_count != 0) {
        throw PreconditionError("the ordinary partition function is defined for circle-free graphs");
    }
    const auto deg = g.degrees();
    for (int d : deg) {
        if (d > h.max_arity) throw PreconditionError("model not tabulated at this arity");
    }
    check_enumeration_bound(h.color_count, g.edge_count(), bound);

    // Incident edge lists (loops twice).
    std::vector<std::vector<int>> incident(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        incident[g.edges[e].first].push_back(e);
        incident[g.edges[e].second].push_back(e);
    }
    Rat total(0);
    std::vector<int> coloring(g.edge_count(), 1);
    std::vector<int> word;
    do {
        Rat prod(1);
        for (int v = 0; v < g.vertex_count && prod != 0; ++v) {
            word.clear();
            for (int e : incident[v]) word.push_back(coloring[e]);
            std::sort(word.begin(), word.end());
            prod *= h.value(word);
        }
        total += prod;
    } while (advance_coloring(coloring, h.color_count));
    return total;
}

std::vector<int> phi_v(const LocallyOrderedDigraph& d, int v, std::span<const int> arc_colors,
                       int ell) {
    std::vector<int> word;
    word.reserve(d.kappa[v].size());
    for (int dart : d.kappa[v]) {
        const int c = arc_colors[dart / 2];
        if (dart % 2 == 1) {
            word.push_back(c);  // incoming
        } else {
            word.push_back((c + ell - 1) % (2 * ell) + 1);  // outgoing: shift by ell mod 2*ell
        }
    }
    return word;
}

Rat skew_partition_digraph(const SkewTensor& h, const LocallyOrderedDigraph& d,
                           unsigned long long bound) {
    d.validate();
    const int ell = h.ell;
    check_enumeration_bound(2 * ell, d.arc_count(), bound);

    // Per-vertex (arc, incoming) lists in kappa order.
    struct Slot {
        int arc;
        bool incoming;
    };
    std::vector<std::vector<Slot>> slots(d.vertex_count);
    for (int v = 0; v < d.vertex_count; ++v) {
        for (int dart : d.kappa[v]) slots[v].push_back({dart / 2, dart % 2 == 1});
    }

    Rat total(0);
    std::vector<int> coloring(d.arc_count(), 1);
    std::vector<int> word;
    do {
        Rat prod(1);
        for (int v = 0; v < d.vertex_count && prod != 0; ++v) {
            word.clear();
            for (const Slot& s : slots[v]) {
                const int c = coloring[s.arc];
                word.push_back(s.incoming ? c : (c + ell - 1) % (2 * ell) + 1);
            }
            prod *= eval_skew(h, word);
        }
        if (prod != 0) {
            int low = 0;
            for (int c : coloring)
                if (c <= ell) ++low;
            if (low % 2 != 0) prod = -prod;
            total += prod;
        }
    } while (advance_coloring(coloring, 2 * ell));
    return total;
}

namespace {

// Shared core of the two direct evaluations: sum over colorings with the
// dual-basis letters expanded at even positions, times (-1)^circuits.
Rat triple_sum(const SkewTensor& h, const Multigraph& g, const Orientation& w, const LocalOrder& k,
               const std::function<bool(std::vector<int>&)>& next_coloring,
               std::vector<int>& coloring) {
    const int ell = h.ell;
    const auto dec = circuit_decomposition(g, w, k);
    Rat total(0);
    std::vector<int> word;
    do {
        Rat prod(1);
        int sign = 1;
        for (int v = 0; v < g.vertex_count && prod != 0; ++v) {
            word.clear();
            const auto& order = k.at[v];
            for (size_t p = 0; p < order.size(); p += 2) {
                word.push_back(coloring[order[p] / 2]);
                const auto [s, idx] = dual_vector(coloring[order[p + 1] / 2], ell);
                word.push_back(idx);
                sign *= s;
            }
            prod *= eval_skew(h, word);
        }
        if (prod != 0) {
            if (sign < 0) prod = -prod;
            total += prod;
        }
    } while (next_coloring(coloring));
    if (dec.circuit_count % 2 != 0) total = -total;
    return total;
}

}  // namespace

Rat skew_partition_triple(const SkewTensor& h, const Multigraph& g, const Orientation& w,
                          const LocalOrder& k, unsigned long long bound) {
    if (g.circle_count != 0) {
        throw PreconditionError("triples are circle-free; circles are handled at the graph level");
    }
    check_enumeration_bound(2 * h.ell, g.edge_count(), bound);
    std::vector<int> coloring(g.edge_count(), 1);
    const int radix = 2 * h.ell;
    return triple_sum(
        h, g, w, k, [radix](std::vector<int>& c) { return advance_coloring(c, radix); }, coloring);
}

Rat skew_partition(const SkewTensor& h, const Multigraph& g, unsigned long long bound) {
    if (!is_eulerian(g)) return Rat(0);
    Rat circles = rat_pow(Rat(-2 * h.ell), static_cast<unsigned long>(g.circle_count));
    if (g.edges.empty() && g.vertex_count == 0) return circles;

    Multigraph core = g;
    core.circle_count = 0;
    const Orientation w = eulerian_orientation(core);
    const LocalOrder k = compatible_local_order(core, w);
    const auto dec = circuit_decomposition(core, w, k);
    Rat value = skew_partition_digraph(h, to_digraph(core, w, k), bound);
    if (dec.circuit_count % 2 != 0) value = -value;
    return value * circles;
}

Rat skew_partition_fixed_phi(const SkewTensor& h, const Multigraph& g, const Orientation& w,
                             const LocalOrder& k, const std::vector<int>& base_coloring) {
    if (g.circle_count != 0) {
        throw PreconditionError("triples are circle-free; circles are handled at the graph level");
    }
    const int ell = h.ell;
    if (static_cast<int>(base_coloring.size()) != g.edge_count()) {
        throw SizeMismatchError("base coloring must assign every edge");
    }
    for (int c : base_coloring) {
        if (c < 1 || c > ell) throw IndexOutOfRangeError("base coloring letter out of range");
    }
    // Iterate over shift patterns psi : E -> {0, ell} layered on the base.
    std::vector<unsigned char> shift(g.edge_count(), 0);
    std::vector<int> coloring(base_coloring);
    auto next = [&](std::vector<int>& c) {
        size_t i = 0;
        while (i < shift.size() && shift[i] == 1) shift[i++] = 0;
        if (i == shift.size()) return false;
        shift[i] = 1;
        for (size_t e = 0; e < shift.size(); ++e) c[e] = base_coloring[e] + (shift[e] ? ell : 0);
        return true;
    };
    return triple_sum(h, g, w, k, next, coloring);
}

namespace {

struct OrderChoice {
    // Per vertex: permutation indices for the incoming and outgoing class.
    std::vector<std::vector<int>> in_perm;
    std::vector<std::vector<int>> out_perm;
};

LocalOrder order_from_choice(const Multigraph& g, const Orientation& w, const OrderChoice& c) {
    auto darts = g.darts_at();
    LocalOrder k;
    k.at.assign(g.vertex_count, {});
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> in, out;
        for (int d : darts[v]) (d == w.head_dart(d / 2) ? in : out).push_back(d);
        auto& order = k.at[v];
        order.resize(in.size() + out.size());
        for (size_t i = 0; i < in.size(); ++i) {
            order[2 * i] = in[c.in_perm[v][i]];
            order[2 * i + 1] = out[c.out_perm[v][i]];
        }
    }
    return k;
}

}  // namespace

InvarianceReport verify_invariance(const SkewTensor& h, const Multigraph& g, long budget,
                                   unsigned seed) {
    if (!is_eulerian(g)) throw NotEulerianError();
    Multigraph core = g;
    core.circle_count = 0;

    InvarianceReport report;
    const int ell = h.ell;
    const int E = core.edge_count();

    // Reference value plus per-base-coloring partial sums with the
    // canonical pair; every other pair must reproduce all of them.
    const Orientation w0 = eulerian_orientation(core);
    const LocalOrder k0 = compatible_local_order(core, w0);
    auto fixed_phi_profile = [&](const Orientation& w, const LocalOrder& k) {
        std::vector<Rat> profile;
        std::vector<int> base(E, 1);
        while (true) {
            profile.push_back(skew_partition_fixed_phi(h, core, w, k, base));
            size_t i = 0;
            while (i < base.size() && base[i] == ell) base[i++] = 1;
            if (i == base.size()) break;
            ++base[i];
        }
        return profile;
    };
    const std::vector<Rat> profile0 = fixed_phi_profile(w0, k0);
    report.value = skew_partition_triple(h, core, w0, k0);

    std::mt19937 rng(seed);
    long checked = 0;
    bool truncated = false;

    // All Eulerian orientations by mask when feasible, otherwise a seeded
    // random sample of masks.
    std::vector<Orientation> orientations;
    if (E <= 20) {
        for (unsigned long mask = 0; mask < (1ul << E); ++mask) {
            Orientation w;
            w.flip.resize(E);
            for (int e = 0; e < E; ++e) w.flip[e] = (mask >> e) & 1u;
            if (orientation_is_eulerian(core, w)) orientations.push_back(w);
        }
    } else {
        for (long tries = 0; tries < 4 * budget && static_cast<long>(orientations.size()) < budget;
             ++tries) {
            Orientation w;
            w.flip.resize(E);
            for (int e = 0; e < E; ++e) w.flip[e] = rng() & 1u;
            if (orientation_is_eulerian(core, w)) orientations.push_back(w);
        }
        truncated = true;
    }

    auto darts = core.darts_at();
    for (const Orientation& w : orientations) {
        if (checked >= budget) {
            truncated = true;
            break;
        }
        // Class sizes per vertex.
        std::vector<int> half(core.vertex_count);
        for (int v = 0; v < core.vertex_count; ++v) {
            half[v] = static_cast<int>(darts[v].size()) / 2;
        }
        Int total_orders = 1;
        for (int v = 0; v < core.vertex_count; ++v) {
            total_orders *= factorial(half[v]) * factorial(half[v]);
        }
        const bool enumerate_all = total_orders <= Int(budget - checked);
        if (!enumerate_all) truncated = true;

        OrderChoice choice;
        choice.in_perm.resize(core.vertex_count);
        choice.out_perm.resize(core.vertex_count);
        auto reset_identity = [&]() {
            for (int v = 0; v < core.vertex_count; ++v) {
                choice.in_perm[v].resize(half[v]);
                choice.out_perm[v].resize(half[v]);
                for (int i = 0; i < half[v]; ++i) {
                    choice.in_perm[v][i] = i;
                    choice.out_perm[v][i] = i;
                }
            }
        };
        auto advance = [&]() -> bool {
            for (int v = 0; v < core.vertex_count; ++v) {
                if (std::next_permutation(choice.in_perm[v].begin(), choice.in_perm[v].end()))
                    return true;
                if (std::next_permutation(choice.out_perm[v].begin(), choice.out_perm[v].end()))
                    return true;
            }
            return false;
        };
        auto run_one = [&](const LocalOrder& k) {
            ++checked;
            const Rat value = skew_partition_triple(h, core, w, k);
            if (value != report.value) {
                report.consistent = false;
                return;
            }
            if (fixed_phi_profile(w, k) != profile0) report.consistent = false;
        };

        reset_identity();
        if (enumerate_all) {
            do {
                run_one(order_from_choice(core, w, choice));
                if (!report.consistent) break;
            } while (advance() && checked < budget);
        } else {
            while (checked < budget && report.consistent) {
                for (int v = 0; v < core.vertex_count; ++v) {
                    std::shuffle(choice.in_perm[v].begin(), choice.in_perm[v].end(), rng);
                    std::shuffle(choice.out_perm[v].begin(), choice.out_perm[v].end(), rng);
                }
                run_one(order_from_choice(core, w, choice));
            }
        }
        if (!report.consistent) break;
    }
    report.pairs_checked = checked;
    report.exhaustive = !truncated;
    return report;
}

}  // namespace skewpf
