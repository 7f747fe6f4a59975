#include "skewpf/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewpf/errors.hpp"

namespace skewpf {

Multigraph& Multigraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
        throw IndexOutOfRangeError("edge endpoint out of range");
    }
    edges.emplace_back(u, v);
    return *this;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> Multigraph::darts_at() const {
    std::vector<std::vector<int>> out(vertex_count);
    for (int d = 0; d < dart_count(); ++d) out[dart_vertex(d)].push_back(d);
    return out;
}

Multigraph Multigraph::cycle(int n) {
    Multigraph g;
    g.vertex_count = n;
    if (n == 1) {
        g.add_edge(0, 0);
        return g;
    }
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph Multigraph::path(int n) {
    Multigraph g;
    g.vertex_count = n + 1;
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph Multigraph::bouquet(int loops) {
    Multigraph g;
    g.vertex_count = 1;
    for (int i = 0; i < loops; ++i) g.add_edge(0, 0);
    return g;
}

Multigraph Multigraph::bowtie() {
    Multigraph g;
    g.vertex_count = 5;
    g.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
    g.add_edge(2, 3).add_edge(3, 4).add_edge(2, 4);
    return g;
}

Multigraph Multigraph::circles(int count) {
    Multigraph g;
    g.circle_count = count;
    return g;
}

bool is_eulerian(const Multigraph& g) {
    for (int d : g.degrees())
        if (d % 2 != 0) return false;
    return true;
}

bool is_two_regular(const Multigraph& g) {
    for (int d : g.degrees())
        if (d != 2) return false;
    return true;
}

Orientation eulerian_orientation(const Multigraph& g) {
    if (!is_eulerian(g)) throw NotEulerianError();
    Orientation w;
    w.flip.assign(g.edge_count(), 0);
    std::vector<bool> used(g.edge_count(), false);
    auto darts = g.darts_at();
    std::vector<size_t> cursor(g.vertex_count, 0);

    auto next_unused_dart = [&](int v) -> int {
        auto& c = cursor[v];
        while (c < darts[v].size() && used[darts[v][c] / 2]) ++c;
        return c < darts[v].size() ? darts[v][c] : -1;
    };

    // Trace closed walks in dart order; every edge is oriented along its
    // walk. With all degrees even a walk can only terminate back at its
    // starting vertex.
    for (int d0 = 0; d0 < g.dart_count(); ++d0) {
        if (used[d0 / 2]) continue;
        const int start = g.dart_vertex(d0);
        int d = d0;
        while (true) {
            const int e = d / 2;
            w.flip[e] = static_cast<unsigned char>(d % 2);
            used[e] = true;
            const int head = g.dart_vertex(d % 2 == 0 ? d + 1 : d - 1);
            const int next = next_unused_dart(head);
            if (next < 0) break;
            d = next;
            (void)start;
        }
    }
    return w;
}

bool orientation_is_eulerian(const Multigraph& g, const Orientation& w) {
    if (static_cast<int>(w.flip.size()) != g.edge_count()) return false;
    std::vector<int> balance(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        ++balance[g.dart_vertex(w.tail_dart(e))];
        --balance[g.dart_vertex(w.head_dart(e))];
    }
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

LocalOrder compatible_local_order(const Multigraph& g, const Orientation& w) {
    if (!orientation_is_eulerian(g, w)) {
        throw NotCompatibleError("orientation is not Eulerian");
    }
    LocalOrder k;
    k.at.assign(g.vertex_count, {});
    auto darts = g.darts_at();
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> in, out;
        for (int d : darts[v]) {
            const int e = d / 2;
            (d == w.head_dart(e) ? in : out).push_back(d);
        }
        auto& order = k.at[v];
        order.resize(in.size() + out.size());
        for (size_t i = 0; i < in.size(); ++i) {
            order[2 * i] = in[i];
            order[2 * i + 1] = out[i];
        }
    }
    return k;
}

bool local_order_is_compatible(const Multigraph& g, const Orientation& w, const LocalOrder& k) {
    if (!orientation_is_eulerian(g, w)) return false;
    if (static_cast<int>(k.at.size()) != g.vertex_count) return false;
    auto darts = g.darts_at();
    for (int v = 0; v < g.vertex_count; ++v) {
        if (k.at[v].size() != darts[v].size()) return false;
        std::vector<int> sorted = k.at[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != darts[v]) return false;
        for (size_t p = 0; p < k.at[v].size(); ++p) {
            const int d = k.at[v][p];
            const bool incoming = (d == w.head_dart(d / 2));
            if (incoming != (p % 2 == 0)) return false;
        }
    }
    return true;
}

CircuitDecomposition circuit_decomposition(const Multigraph& g, const Orientation& w,
                                           const LocalOrder& k) {
    if (!local_order_is_compatible(g, w, k)) {
        throw NotCompatibleError("local order is not compatible with the orientation");
    }
    // Position of each dart within its vertex order.
    std::vector<int> pos(g.dart_count(), -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        for (size_t p = 0; p < k.at[v].size(); ++p) pos[k.at[v][p]] = static_cast<int>(p);
    }
    CircuitDecomposition dec;
    std::vector<bool> used(g.edge_count(), false);
    for (int e0 = 0; e0 < g.edge_count(); ++e0) {
        if (used[e0]) continue;
        std::vector<int> circuit;
        int e = e0;
        do {
            used[e] = true;
            circuit.push_back(e);
            const int hd = w.head_dart(e);
            const int v = g.dart_vertex(hd);
            const int p = pos[hd];  // even index (odd position); successor sits one slot later
            const int out_dart = k.at[v][p + 1];
            e = out_dart / 2;
        } while (e != e0);
        dec.circuits.push_back(std::move(circuit));
    }
    dec.circuit_count = static_cast<int>(dec.circuits.size());
    return dec;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph g;
    g.vertex_count = a.vertex_count + b.vertex_count;
    g.circle_count = a.circle_count + b.circle_count;
    g.edges = a.edges;
    for (const auto& [u, v] : b.edges) {
        g.edges.emplace_back(u + a.vertex_count, v + a.vertex_count);
    }
    return g;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

int component_count(const Multigraph& g) {
    Dsu dsu(g.vertex_count);
    for (const auto& [u, v] : g.edges) dsu.unite(u, v);
    int components = g.circle_count;
    for (int v = 0; v < g.vertex_count; ++v)
        if (dsu.find(v) == v) ++components;
    return components;
}

int two_regular_components(const Multigraph& g, const std::vector<int>& edge_subset) {
    std::vector<int> darts_in(g.vertex_count, 0);
    for (int e : edge_subset) {
        if (e < 0 || e >= g.edge_count()) throw IndexOutOfRangeError("edge id out of range");
        ++darts_in[g.edges[e].first];
        ++darts_in[g.edges[e].second];
    }
    for (int v = 0; v < g.vertex_count; ++v) {
        if (darts_in[v] != 0 && darts_in[v] != 2) throw NotTwoRegularError();
    }
    Dsu dsu(g.vertex_count);
    for (int e : edge_subset) dsu.unite(g.edges[e].first, g.edges[e].second);
    int components = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (darts_in[v] == 2 && dsu.find(v) == v) ++components;
    }
    return components;
}

std::string canonical_edge_key(const Multigraph& g) {
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) normalized.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(normalized.begin(), normalized.end());
    std::ostringstream out;
    out << g.vertex_count << '/' << g.circle_count << ':';
    for (const auto& [u, v] : normalized) out << u << '-' << v << ',';
    return out.str();
}

}  // namespace skewpf
