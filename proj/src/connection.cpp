#include "skewpf/connection.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "skewpf/errors.hpp"

namespace skewpf {

void Fragment::validate() const {
    const auto deg = graph.degrees();
    std::vector<bool> seen(graph.vertex_count, false);
    for (int v : labels) {
        if (v < 0 || v >= graph.vertex_count) throw IndexOutOfRangeError("label vertex out of range");
        if (seen[v]) throw LabelMismatchError("labels must sit on distinct vertices");
        seen[v] = true;
        if (deg[v] != 1) throw LabelMismatchError("labeled vertices must have degree one");
    }
}

int Fragment::open_end_edge(int label) const {
    const int v = labels[label - 1];
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (graph.edges[e].first == v || graph.edges[e].second == v) return e;
    }
    throw LabelMismatchError("labeled vertex has no incident edge");
}

/*
 * Gluing removes the labeled vertices and splices equally labeled open ends
 * together. Each spliced run of edges either ends in two anchored (internal)
 * endpoints and becomes a single edge, or closes up with no internal vertex
 * and becomes a circle.
 */
Multigraph glue(const Fragment& f1, const Fragment& f2) {
    f1.validate();
    f2.validate();
    const int k = f1.k();
    if (k != f2.k()) throw LabelMismatchError("fragments must have the same number of labels");

    const Fragment* frag[2] = {&f1, &f2};

    // Remap internal (unlabeled) vertices into the glued graph.
    int next_vertex = 0;
    std::vector<std::vector<int>> vertex_map(2);
    for (int s = 0; s < 2; ++s) {
        std::vector<bool> labeled(frag[s]->graph.vertex_count, false);
        for (int v : frag[s]->labels) labeled[v] = true;
        vertex_map[s].assign(frag[s]->graph.vertex_count, -1);
        for (int v = 0; v < frag[s]->graph.vertex_count; ++v) {
            if (!labeled[v]) vertex_map[s][v] = next_vertex++;
        }
    }

    // label_of[s][v]: 1-based label when the vertex is labeled, else 0.
    std::vector<std::vector<int>> label_of(2);
    for (int s = 0; s < 2; ++s) {
        label_of[s].assign(frag[s]->graph.vertex_count, 0);
        for (int i = 0; i < k; ++i) label_of[s][frag[s]->labels[i]] = i + 1;
    }
    // The open-end edge of every label on each side, with the dart that
    // touches the labeled vertex.
    std::vector<std::array<int, 2>> end_dart(k + 1, {-1, -1});
    for (int s = 0; s < 2; ++s) {
        const auto& g = frag[s]->graph;
        for (int d = 0; d < g.dart_count(); ++d) {
            const int lab = label_of[s][g.dart_vertex(d)];
            if (lab > 0) end_dart[lab][s] = d;
        }
    }

    Multigraph out;
    out.circle_count = f1.graph.circle_count + f2.graph.circle_count;
    out.vertex_count = next_vertex;

    auto partner = [](int dart) { return dart % 2 == 0 ? dart + 1 : dart - 1; };
    std::vector<std::array<bool, 2>> edge_used(
        std::max(f1.graph.edge_count(), f2.graph.edge_count()), {false, false});

    // Walk a chain starting from an anchored dart until the far end anchors.
    auto walk_chain = [&](int side, int dart) -> std::pair<int, int> {
        int s = side;
        int d = dart;
        while (true) {
            edge_used[d / 2][s] = true;
            const int far = partner(d);
            const int v = frag[s]->graph.dart_vertex(far);
            const int lab = label_of[s][v];
            if (lab == 0) return {s, far};
            s = 1 - s;
            d = end_dart[lab][s];
        }
    };

    // Anchored chains, in a deterministic order.
    for (int s = 0; s < 2; ++s) {
        const auto& g = frag[s]->graph;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (edge_used[e][s]) continue;
            const int u = g.edges[e].first;
            const int v = g.edges[e].second;
            const bool u_labeled = label_of[s][u] > 0;
            const bool v_labeled = label_of[s][v] > 0;
            if (u_labeled && v_labeled) continue;  // interior of a possible circle chain
            const int start_dart = u_labeled ? 2 * e + 1 : 2 * e;
            const int anchor = frag[s]->graph.dart_vertex(start_dart);
            const auto [far_side, far_dart] = walk_chain(s, start_dart);
            out.add_edge(vertex_map[s][anchor],
                         vertex_map[far_side][frag[far_side]->graph.dart_vertex(far_dart)]);
        }
    }
    // Leftover label-label chains close into circles.
    for (int s = 0; s < 2; ++s) {
        const auto& g = frag[s]->graph;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (edge_used[e][s]) continue;
            // Trace the cycle, marking every edge on it.
            int side = s;
            int d = 2 * e;
            do {
                edge_used[d / 2][side] = true;
                const int far = partner(d);
                const int lab = label_of[side][frag[side]->graph.dart_vertex(far)];
                side = 1 - side;
                d = end_dart[lab][side];
            } while (!edge_used[d / 2][side]);
            ++out.circle_count;
        }
    }
    return out;
}

RationalMatrix connection_submatrix(const GraphEvaluator& f,
                                    const std::vector<Fragment>& fragments) {
    const int n = static_cast<int>(fragments.size());
    if (n > 0) {
        const int k = fragments.front().k();
        for (const auto& frag : fragments) {
            if (frag.k() != k) throw LabelMismatchError("all fragments must share k");
        }
    }
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = f(glue(fragments[i], fragments[j]));
    }
    return m;
}

std::vector<std::vector<std::pair<int, int>>> all_perfect_matchings(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<int> points(n);
    std::iota(points.begin(), points.end(), 1);
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& free_points) {
        if (free_points.empty()) {
            out.push_back(cur);
            return;
        }
        const int first = free_points.front();
        for (size_t j = 1; j < free_points.size(); ++j) {
            std::vector<int> rest;
            rest.reserve(free_points.size() - 2);
            for (size_t t = 1; t < free_points.size(); ++t)
                if (t != j) rest.push_back(free_points[t]);
            cur.emplace_back(first, free_points[j]);
            rec(rest);
            cur.pop_back();
        }
    };
    rec(points);
    return out;
}

namespace {

// Cycle count of the union of two undirected perfect matchings of [2k].
int union_cycles(const std::vector<std::pair<int, int>>& m1,
                 const std::vector<std::pair<int, int>>& m2, int n) {
    std::vector<int> p1(n + 1), p2(n + 1);
    for (const auto& [a, b] : m1) {
        p1[a] = b;
        p1[b] = a;
    }
    for (const auto& [a, b] : m2) {
        p2[a] = b;
        p2[b] = a;
    }
    std::vector<bool> visited(n + 1, false);
    int cycles = 0;
    for (int start = 1; start <= n; ++start) {
        if (visited[start]) continue;
        ++cycles;
        int x = start;
        bool use_first = true;
        do {
            visited[x] = true;
            x = use_first ? p1[x] : p2[x];
            use_first = !use_first;
        } while (!(x == start && use_first));
    }
    return cycles;
}

}  // namespace

RationalMatrix matching_matrix(const Int& b, int k, unsigned long long bound) {
    if (k < 1) throw PreconditionError("k must be positive");
    const Int size = double_factorial(2 * k - 1);
    if (size * size > Int(static_cast<unsigned long>(bound))) {
        throw TooLargeError(size * size, bound);
    }
    const auto matchings = all_perfect_matchings(2 * k);
    const int n = static_cast<int>(matchings.size());
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = Rat(int_pow(b, union_cycles(matchings[i], matchings[j], 2 * k)));
        }
    }
    return m;
}

Int catalan_rank(int k) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    return factorial(2 * k) / (factorial(k + 1) * factorial(k));
}

Int hook_length_dimension(const std::vector<int>& partition) {
    long n = 0;
    for (size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] <= 0) throw InvalidPartitionError();
        if (i > 0 && partition[i] > partition[i - 1]) throw InvalidPartitionError();
        n += partition[i];
    }
    if (n == 0) return 1;
    // Conjugate partition gives column heights.
    std::vector<int> conj(partition[0], 0);
    for (int part : partition) {
        for (int j = 0; j < part; ++j) ++conj[j];
    }
    Int hooks = 1;
    for (size_t i = 0; i < partition.size(); ++i) {
        for (int j = 0; j < partition[i]; ++j) {
            const long hook = (partition[i] - j) + (conj[j] - static_cast<long>(i)) - 1;
            hooks *= hook;
        }
    }
    Int dim = factorial(static_cast<unsigned long>(n));
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), dim.get_mpz_t(), hooks.get_mpz_t());
    if (rem != 0) throw std::logic_error("hook product must divide n!");
    return q;
}

Multigraph build_G_U_pi(const Multigraph& g, const std::vector<int>& u_edges,
                        const std::vector<unsigned char>& orient, const std::vector<int>& pi) {
    const int ell_plus_1 = static_cast<int>(u_edges.size());
    if (static_cast<int>(orient.size()) != ell_plus_1) {
        throw SizeMismatchError("one orientation flag per removed edge");
    }
    if (static_cast<int>(pi.size()) != 2 * ell_plus_1) {
        throw SizeMismatchError("permutation must act on twice the removed edges");
    }
    std::vector<bool> in_u(g.edge_count(), false);
    for (int e : u_edges) {
        if (e < 0 || e >= g.edge_count()) throw IndexOutOfRangeError("edge id out of range");
        if (in_u[e]) throw SizeMismatchError("repeated edge in subset");
        in_u[e] = true;
    }
    // Tails get labels 1..ell+1 in subset order, heads the rest.
    std::vector<int> label_vertex(2 * ell_plus_1 + 1, -1);
    for (int i = 0; i < ell_plus_1; ++i) {
        const auto& [u, v] = g.edges[u_edges[i]];
        label_vertex[i + 1] = orient[i] ? v : u;
        label_vertex[ell_plus_1 + i + 1] = orient[i] ? u : v;
    }
    Multigraph out;
    out.vertex_count = g.vertex_count;
    out.circle_count = g.circle_count;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_u[e]) out.edges.push_back(g.edges[e]);
    }
    for (int i = 1; i <= ell_plus_1; ++i) {
        out.add_edge(label_vertex[pi[i - 1]], label_vertex[pi[ell_plus_1 + i - 1]]);
    }
    return out;
}

Rat skew_relation_sum(const GraphEvaluator& f, const Multigraph& g,
                      const std::vector<int>& u_edges, const std::vector<unsigned char>& orient,
                      int ell) {
    if (static_cast<int>(u_edges.size()) != ell + 1) {
        throw SizeMismatchError("subset size must be ell + 1");
    }
    std::vector<int> pi(2 * (ell + 1));
    std::iota(pi.begin(), pi.end(), 1);
    Rat total(0);
    do {
        total += f(build_G_U_pi(g, u_edges, orient, pi));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return total;
}

bool verify_skew_relation(const GraphEvaluator& f, const Multigraph& g,
                          const std::vector<int>& u_edges, int ell, unsigned long long bound) {
    const Int terms = factorial(2 * (ell + 1)) * int_pow(2 * ell, g.edge_count());
    if (terms > Int(static_cast<unsigned long>(bound))) throw TooLargeError(terms, bound);
    std::vector<unsigned char> orient(u_edges.size(), 0);
    if (skew_relation_sum(f, g, u_edges, orient, ell) != 0) return false;
    // The relation is independent of the orientation choice; spot-check one
    // alternate labeling.
    orient[0] = 1;
    return skew_relation_sum(f, g, u_edges, orient, ell) == 0;
}

Orientation fragment_eulerian_orientation(const Fragment& f) {
    f.validate();
    const int k2 = f.k();
    if (k2 % 2 != 0) {
        throw NotEulerianFragmentError("an Eulerian fragment needs an even number of open ends");
    }
    if (f.graph.circle_count != 0) {
        throw NotEulerianFragmentError("fragment components must not be circles");
    }
    const int k = k2 / 2;
    Multigraph closed = f.graph;
    for (int i = 1; i <= k; ++i) {
        closed.add_edge(f.labels[i - 1], f.labels[k + i - 1]);
    }
    if (!is_eulerian(closed)) {
        throw NotEulerianFragmentError("unlabeled vertices must have even degree");
    }
    Orientation w = eulerian_orientation(closed);
    w.flip.resize(f.graph.edge_count());
    return w;
}

LocalOrder fragment_local_order(const Fragment& f, const Orientation& w) {
    // Compatible order at unlabeled vertices; a labeled vertex has a single
    // dart and needs no choice.
    LocalOrder k;
    k.at.assign(f.graph.vertex_count, {});
    std::vector<bool> labeled(f.graph.vertex_count, false);
    for (int v : f.labels) labeled[v] = true;
    auto darts = f.graph.darts_at();
    for (int v = 0; v < f.graph.vertex_count; ++v) {
        if (labeled[v]) {
            k.at[v] = darts[v];
            continue;
        }
        std::vector<int> in, out;
        for (int d : darts[v]) {
            (d == w.head_dart(d / 2) ? in : out).push_back(d);
        }
        if (in.size() != out.size()) {
            throw NotEulerianFragmentError("orientation does not balance an unlabeled vertex");
        }
        auto& order = k.at[v];
        order.resize(darts[v].size());
        for (size_t i = 0; i < in.size(); ++i) {
            order[2 * i] = in[i];
            order[2 * i + 1] = out[i];
        }
    }
    return k;
}

FragmentDecomposition fragment_decomposition(const Fragment& f, const Orientation& w,
                                             const LocalOrder& k) {
    f.validate();
    const int k2 = f.k();
    std::vector<bool> labeled(f.graph.vertex_count, false);
    std::vector<int> label_of(f.graph.vertex_count, 0);
    for (int i = 0; i < k2; ++i) {
        labeled[f.labels[i]] = true;
        label_of[f.labels[i]] = i + 1;
    }
    std::vector<int> pos(f.graph.dart_count(), -1);
    auto darts = f.graph.darts_at();
    if (k.at.size() != static_cast<size_t>(f.graph.vertex_count)) {
        throw NotCompatibleError("local order must list every vertex");
    }
    for (int v = 0; v < f.graph.vertex_count; ++v) {
        std::vector<int> sorted = k.at[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != darts[v]) {
            throw NotCompatibleError("local order must list each dart at its vertex exactly once");
        }
        for (size_t p = 0; p < k.at[v].size(); ++p) {
            const int d = k.at[v][p];
            pos[d] = static_cast<int>(p);
            if (!labeled[v]) {
                const bool incoming = (d == w.head_dart(d / 2));
                if (incoming != (p % 2 == 0)) {
                    throw NotCompatibleError("order at an unlabeled vertex must alternate in/out");
                }
            }
        }
    }

    FragmentDecomposition dec;
    std::vector<bool> used(f.graph.edge_count(), false);
    std::vector<std::pair<int, int>> arcs;

    // Walks leave each labeled vertex whose open end points away from it.
    for (int i = 1; i <= k2; ++i) {
        const int e0 = f.open_end_edge(i);
        if (f.graph.dart_vertex(w.tail_dart(e0)) != f.labels[i - 1]) continue;
        std::vector<int> walk;
        int e = e0;
        while (true) {
            used[e] = true;
            walk.push_back(e);
            const int hd = w.head_dart(e);
            const int v = f.graph.dart_vertex(hd);
            if (labeled[v]) {
                arcs.emplace_back(i, label_of[v]);
                break;
            }
            e = k.at[v][pos[hd] + 1] / 2;
        }
        dec.walk_edges.push_back(std::move(walk));
    }
    if (arcs.size() * 2 != static_cast<size_t>(k2)) {
        throw NotEulerianFragmentError(
            "exactly half the labeled vertices must carry an outgoing open end");
    }
    // Normalizing the matching reorders arcs; keep walk_edges aligned.
    {
        std::vector<size_t> order(arcs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return std::min(arcs[a].first, arcs[a].second) <
                   std::min(arcs[b].first, arcs[b].second);
        });
        std::vector<std::pair<int, int>> sorted_arcs;
        std::vector<std::vector<int>> sorted_walks;
        for (size_t idx : order) {
            sorted_arcs.push_back(arcs[idx]);
            sorted_walks.push_back(std::move(dec.walk_edges[idx]));
        }
        dec.walk_matching = DirectedMatching(std::move(sorted_arcs));
        dec.walk_edges = std::move(sorted_walks);
    }
    // Leftover edges sit on circuits through unlabeled vertices.
    for (int e0 = 0; e0 < f.graph.edge_count(); ++e0) {
        if (used[e0]) continue;
        std::vector<int> circuit;
        int e = e0;
        do {
            used[e] = true;
            circuit.push_back(e);
            const int hd = w.head_dart(e);
            const int v = f.graph.dart_vertex(hd);
            e = k.at[v][pos[hd] + 1] / 2;
        } while (e != e0);
        dec.circuits.push_back(std::move(circuit));
    }
    dec.circuit_count = static_cast<int>(dec.circuits.size());
    return dec;
}

SparseTensor fragment_tensor(const SkewTensor& h, const Fragment& f, const Orientation& w,
                             const LocalOrder& k, unsigned long long bound) {
    const int ell = h.ell;
    const int k2 = f.k();
    const auto dec = fragment_decomposition(f, w, k);
    const Int count = int_pow(2 * ell, f.graph.edge_count());
    if (count > Int(static_cast<unsigned long>(bound))) throw TooLargeError(count, bound);

    std::vector<bool> labeled(f.graph.vertex_count, false);
    for (int v : f.labels) labeled[v] = true;

    // sign_edge[e]: the edge participates in the [ell]-sign count. Every
    // edge does except the first edge of each walk; the walk-end slot letter
    // goes through the dual basis instead, which carries that edge's sign.
    std::vector<bool> sign_edge(f.graph.edge_count(), true);
    for (const auto& walk : dec.walk_edges) sign_edge[walk.front()] = false;

    // Open-end edge per label.
    std::vector<int> end_edge(k2 + 1);
    for (int i = 1; i <= k2; ++i) end_edge[i] = f.open_end_edge(i);

    SparseTensor t;
    t.ell = ell;
    t.order = k2;

    std::vector<int> coloring(f.graph.edge_count(), 1);
    std::vector<int> word;
    while (true) {
        Rat prod(1);
        int sign = 1;
        for (int v = 0; v < f.graph.vertex_count && prod != 0; ++v) {
            if (labeled[v]) continue;
            word.clear();
            for (int dart : k.at[v]) {
                const int c = coloring[dart / 2];
                const bool incoming = (dart == w.head_dart(dart / 2));
                word.push_back(incoming ? c : (c + ell - 1) % (2 * ell) + 1);
            }
            prod *= eval_skew(h, word);
        }
        if (prod != 0) {
            for (int e = 0; e < f.graph.edge_count(); ++e) {
                if (sign_edge[e] && coloring[e] <= ell) sign = -sign;
            }
            if (dec.circuit_count % 2 != 0) sign = -sign;
            // Slot letters: the walk tail keeps its color, the head goes
            // through the dual basis.
            std::vector<int> slots(k2);
            for (const auto& [i, j] : dec.walk_matching.arcs) {
                slots[i - 1] = coloring[end_edge[i]];
                const auto [ds, idx] = dual_vector(coloring[end_edge[j]], ell);
                slots[j - 1] = idx;
                sign *= ds;
            }
            t.add_term(slots, sign > 0 ? prod : -prod);
        }
        size_t i = 0;
        while (i < coloring.size() && coloring[i] == 2 * ell) coloring[i++] = 1;
        if (i == coloring.size()) break;
        ++coloring[i];
    }
    return t;
}

Int signed_cycle_count_sum(int m, const Int& x, unsigned long long bound) {
    if (m < 0 || m > 8) throw TooLargeError(m < 0 ? Int(0) : factorial(m), bound);
    const Int states = factorial(m);
    if (states > Int(static_cast<unsigned long>(bound))) throw TooLargeError(states, bound);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    Int total = 0;
    do {
        int sign = 1;
        int orbits = 0;
        std::vector<bool> seen(m, false);
        for (int i = 0; i < m; ++i) {
            if (seen[i]) continue;
            ++orbits;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        Int term = int_pow(x, orbits);
        total += sign > 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace skewpf
