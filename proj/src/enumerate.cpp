#include "skewpf/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "skewpf/errors.hpp"

namespace skewpf {

namespace {

struct GraphGen {
    const GraphEnumOptions& opt;
    const std::function<void(const Multigraph&)>& cb;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;
    int odd_vertices = 0;
    int max_vertices;

    GraphGen(const GraphEnumOptions& o, const std::function<void(const Multigraph&)>& c)
        : opt(o), cb(c), max_vertices(o.max_vertices >= 0 ? o.max_vertices : 2 * o.max_edges) {}

    void emit() {
        if (opt.require_even_degrees && odd_vertices > 0) return;
        Multigraph g;
        g.vertex_count = static_cast<int>(degree.size());
        g.edges = edges;
        cb(g);
    }

    bool push(int u, int v) {
        if (opt.max_degree >= 0) {
            const int du = degree.size() > static_cast<size_t>(u) ? degree[u] : 0;
            const int dv = degree.size() > static_cast<size_t>(v) ? degree[v] : 0;
            if (u == v) {
                if (du + 2 > opt.max_degree) return false;
            } else if (du + 1 > opt.max_degree || dv + 1 > opt.max_degree) {
                return false;
            }
        }
        while (degree.size() <= static_cast<size_t>(std::max(u, v))) degree.push_back(0);
        for (int x : {u, v}) {
            if (degree[x] % 2 != 0) --odd_vertices;
            ++degree[x];
            if (degree[x] % 2 != 0) ++odd_vertices;
        }
        edges.emplace_back(u, v);
        return true;
    }

    void pop() {
        const auto [u, v] = edges.back();
        edges.pop_back();
        for (int x : {u, v}) {
            if (degree[x] % 2 != 0) --odd_vertices;
            --degree[x];
            if (degree[x] % 2 != 0) ++odd_vertices;
        }
        while (!degree.empty() && degree.back() == 0) degree.pop_back();
    }

    /*
     * Sorted edge lists in a first-occurrence-canonical labeling: each new
     * edge is lexicographically >= the previous one and may introduce only
     * the next unused vertex ids. Each relabeling class of multigraphs is
     * produced at least once and usually once.
     */
    void rec() {
        if (static_cast<int>(edges.size()) == opt.max_edges) return;
        // Parity feasibility: one extra edge fixes at most two odd vertices.
        if (opt.require_even_degrees &&
            odd_vertices > 2 * (opt.max_edges - static_cast<int>(edges.size()))) {
            return;
        }
        const int used = static_cast<int>(degree.size());
        const std::pair<int, int> low = edges.empty() ? std::pair<int, int>{0, 0} : edges.back();
        for (int u = low.first; u <= std::min(used, max_vertices - 1); ++u) {
            int v_lo = (u == low.first) ? std::max(low.second, u) : u;
            // u == used may open one or two fresh vertex ids; otherwise the
            // second endpoint may introduce at most id `used`.
            const int v_hi = (u == used) ? std::min(u + 1, max_vertices - 1)
                                         : std::min(used, max_vertices - 1);
            for (int v = v_lo; v <= v_hi; ++v) {
                if (!push(u, v)) continue;
                emit();
                rec();
                pop();
            }
        }
    }
};

}  // namespace

void enumerate_multigraphs(const GraphEnumOptions& opt,
                           const std::function<void(const Multigraph&)>& cb) {
    GraphGen gen(opt, cb);
    if (opt.include_empty) {
        Multigraph g;
        cb(g);
    }
    if (gen.max_vertices > 0) gen.rec();
}

std::vector<Multigraph> eulerian_family(int max_edges) {
    GraphEnumOptions opt;
    opt.max_edges = max_edges;
    // Even positive degrees force at most one vertex per edge; the pruning
    // also applies to canonical prefixes.
    opt.max_vertices = max_edges;
    opt.require_even_degrees = true;
    std::vector<Multigraph> out;
    enumerate_multigraphs(opt, [&](const Multigraph& g) { out.push_back(g); });
    return out;
}

std::vector<Multigraph> two_regular_family(int max_edges) {
    GraphEnumOptions opt;
    opt.max_edges = max_edges;
    opt.max_vertices = max_edges;
    opt.require_even_degrees = true;
    opt.max_degree = 2;
    opt.include_empty = false;
    std::vector<Multigraph> out;
    enumerate_multigraphs(opt, [&](const Multigraph& g) {
        if (!g.edges.empty() && is_two_regular(g)) out.push_back(g);
    });
    return out;
}

void enumerate_eulerian_orientations(const Multigraph& g,
                                     const std::function<void(const Orientation&)>& cb) {
    const int E = g.edge_count();
    if (E > 24) throw TooLargeError(int_pow(2, E), 1u << 24);
    for (unsigned long mask = 0; mask < (1ul << E); ++mask) {
        Orientation w;
        w.flip.resize(E);
        for (int e = 0; e < E; ++e) w.flip[e] = (mask >> e) & 1u;
        if (orientation_is_eulerian(g, w)) cb(w);
    }
}

Int count_compatible_orders(const Multigraph& g, const Orientation& w) {
    if (!orientation_is_eulerian(g, w)) throw NotCompatibleError("orientation is not Eulerian");
    Int count = 1;
    for (int d : g.degrees()) {
        count *= factorial(d / 2) * factorial(d / 2);
    }
    return count;
}

void enumerate_compatible_orders(const Multigraph& g, const Orientation& w,
                                 const std::function<bool(const LocalOrder&)>& cb) {
    auto darts = g.darts_at();
    std::vector<std::vector<int>> in(g.vertex_count), out(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        for (int d : darts[v]) {
            (d == w.head_dart(d / 2) ? in[v] : out[v]).push_back(d);
        }
        if (in[v].size() != out[v].size()) {
            throw NotCompatibleError("orientation is not Eulerian");
        }
    }
    std::vector<std::vector<int>> in_perm(g.vertex_count), out_perm(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        in_perm[v].resize(in[v].size());
        out_perm[v].resize(out[v].size());
        std::iota(in_perm[v].begin(), in_perm[v].end(), 0);
        std::iota(out_perm[v].begin(), out_perm[v].end(), 0);
    }
    while (true) {
        LocalOrder k;
        k.at.assign(g.vertex_count, {});
        for (int v = 0; v < g.vertex_count; ++v) {
            auto& order = k.at[v];
            order.resize(darts[v].size());
            for (size_t i = 0; i < in[v].size(); ++i) {
                order[2 * i] = in[v][in_perm[v][i]];
                order[2 * i + 1] = out[v][out_perm[v][i]];
            }
        }
        if (!cb(k)) return;
        int v = 0;
        bool advanced = false;
        for (; v < g.vertex_count; ++v) {
            if (std::next_permutation(in_perm[v].begin(), in_perm[v].end())) {
                advanced = true;
                break;
            }
            if (std::next_permutation(out_perm[v].begin(), out_perm[v].end())) {
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

namespace {

// Canonical key with labeled vertices named by their label, so relabelings
// that produce the same labeled shape collapse.
std::string fragment_key(const Fragment& f) {
    std::vector<int> name(f.graph.vertex_count, -1);
    for (size_t i = 0; i < f.labels.size(); ++i) {
        name[f.labels[i]] = 1000000 + static_cast<int>(i);
    }
    for (int v = 0; v < f.graph.vertex_count; ++v) {
        if (name[v] < 0) name[v] = v;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : f.graph.edges) {
        edges.emplace_back(std::min(name[u], name[v]), std::max(name[u], name[v]));
    }
    std::sort(edges.begin(), edges.end());
    std::string key = std::to_string(f.graph.vertex_count) + "/";
    for (const auto& [u, v] : edges) {
        key += std::to_string(u) + "-" + std::to_string(v) + ",";
    }
    return key;
}

}  // namespace

std::vector<Fragment> fragment_family(int ends, int max_edges, int cap) {
    std::vector<Fragment> family;
    std::set<std::string> seen;

    // Cores: arbitrary-degree multigraphs on the internal vertices. Each
    // core is decorated with `ends` open-end edges; unlabeled vertices must
    // end up with even degree.
    GraphEnumOptions opt;
    opt.max_edges = max_edges;
    enumerate_multigraphs(opt, [&](const Multigraph& base_core) {
        if (static_cast<int>(family.size()) >= cap) return;
        // d label-label edges use 2d of the open ends; bare internal
        // vertices (degree from the ends alone, as in star and short path
        // fragments) come from extra isolated core vertices, each of which
        // must absorb at least two ends.
        for (int d = 0; d <= ends / 2; ++d) {
            const int attached = ends - 2 * d;
            const int total_edges = base_core.edge_count() + attached + d;
            if (total_edges > max_edges) continue;
            for (int extra = 0; extra <= attached / 2; ++extra) {
                Multigraph core = base_core;
                core.vertex_count += extra;
                // Distribute `attached` ends over core vertices (multisets),
                // respecting the parity of each degree.
                const auto deg = core.degrees();
                std::vector<int> ends_at(core.vertex_count, 0);
                std::function<void(int, int)> place = [&](int v, int remaining) {
                    if (static_cast<int>(family.size()) >= cap) return;
                    if (v == core.vertex_count) {
                        if (remaining != 0) return;
                        for (int x = 0; x < core.vertex_count; ++x) {
                            if ((deg[x] + ends_at[x]) % 2 != 0) return;
                            if (deg[x] + ends_at[x] == 0) return;  // no isolated internals
                        }
                        // Build the fragment: internal vertices keep their
                        // ids, labeled vertices appended; ends attached in
                        // vertex order, then label-label edges.
                        Fragment f;
                        f.graph = core;
                        f.graph.vertex_count += ends;
                        f.labels.resize(ends);
                        int next_label_vertex = core.vertex_count;
                        int next_label = 1;
                        for (int x = 0; x < core.vertex_count; ++x) {
                            for (int t = 0; t < ends_at[x]; ++t) {
                                f.graph.add_edge(x, next_label_vertex);
                                f.labels[next_label - 1] = next_label_vertex;
                                ++next_label_vertex;
                                ++next_label;
                            }
                        }
                        for (int t = 0; t < d; ++t) {
                            f.graph.add_edge(next_label_vertex, next_label_vertex + 1);
                            f.labels[next_label - 1] = next_label_vertex;
                            f.labels[next_label] = next_label_vertex + 1;
                            next_label_vertex += 2;
                            next_label += 2;
                        }
                        // Every distinct assignment of labels to the end
                        // slots; symmetric shapes collapse through the
                        // canonical key.
                        std::vector<int> perm(ends);
                        std::iota(perm.begin(), perm.end(), 0);
                        do {
                            Fragment variant = f;
                            for (int i = 0; i < ends; ++i) variant.labels[i] = f.labels[perm[i]];
                            const std::string key = fragment_key(variant);
                            if (seen.insert(key).second) {
                                family.push_back(std::move(variant));
                                if (static_cast<int>(family.size()) >= cap) return;
                            }
                        } while (std::next_permutation(perm.begin(), perm.end()));
                        return;
                    }
                    for (int take = 0; take <= remaining; ++take) {
                        ends_at[v] = take;
                        place(v + 1, remaining - take);
                    }
                    ends_at[v] = 0;
                };
                if (core.vertex_count == 0) {
                    if (attached == 0) place(0, 0);
                } else {
                    place(0, attached);
                }
            }
        }
    });
    return family;
}

}  // namespace skewpf
