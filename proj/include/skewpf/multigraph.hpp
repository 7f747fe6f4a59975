#ifndef SKEWPF_MULTIGRAPH_HPP
#define SKEWPF_MULTIGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace skewpf {

/*
 * Half-edge (dart) multigraph. Edge e owns darts 2e and 2e+1; dart 2e sits
 * at edges[e].first, dart 2e+1 at edges[e].second. A loop's two darts share
 * a vertex but remain distinct. Vertex-free circle components are a plain
 * counter since they carry no darts.
 *
 * Graphs are immutable by convention once built; every operation below is a
 * pure function of its inputs.
 */
struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    int circle_count = 0;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int dart_count() const { return 2 * edge_count(); }
    int dart_vertex(int dart) const {
        const auto& e = edges[dart / 2];
        return (dart % 2 == 0) ? e.first : e.second;
    }
    bool empty() const { return vertex_count == 0 && edges.empty() && circle_count == 0; }

    Multigraph& add_edge(int u, int v);

    std::vector<int> degrees() const;
    // Per-vertex dart lists in increasing dart id.
    std::vector<std::vector<int>> darts_at() const;

    static Multigraph cycle(int n);
    static Multigraph path(int n);          // n edges, n+1 vertices
    static Multigraph bouquet(int loops);   // one vertex; figure-eight = bouquet(2)
    static Multigraph bowtie();             // two triangles sharing a vertex
    static Multigraph circles(int count);   // vertex-free circles only
};

// Per-edge direction flag: flip[e]==0 orients edges[e].first -> .second.
struct Orientation {
    std::vector<unsigned char> flip;

    int tail_dart(int e) const { return 2 * e + (flip[e] ? 1 : 0); }
    int head_dart(int e) const { return 2 * e + (flip[e] ? 0 : 1); }
};

// Per-vertex total order of the incident darts; at[v][p] is the dart in
// position p+1. Compatibility with an Eulerian orientation means incoming
// darts occupy the odd positions 1,3,... and outgoing darts the even ones.
struct LocalOrder {
    std::vector<std::vector<int>> at;
};

struct CircuitDecomposition {
    std::vector<std::vector<int>> circuits;  // edge ids in traversal order
    int circuit_count = 0;
};

bool is_eulerian(const Multigraph& g);
bool is_two_regular(const Multigraph& g);

// Deterministic walk-tracing orientation with indegree == outdegree
// everywhere. Throws NotEulerianError.
Orientation eulerian_orientation(const Multigraph& g);

bool orientation_is_eulerian(const Multigraph& g, const Orientation& w);

// Canonical compatible ordering: incoming darts in increasing dart id at
// odd positions, outgoing at even. Throws NotCompatibleError when the
// orientation is not Eulerian.
LocalOrder compatible_local_order(const Multigraph& g, const Orientation& w);

bool local_order_is_compatible(const Multigraph& g, const Orientation& w, const LocalOrder& k);

// The unique circuit partition induced by a compatible local order.
// Circles carry no darts and are not part of the decomposition.
CircuitDecomposition circuit_decomposition(const Multigraph& g, const Orientation& w,
                                           const LocalOrder& k);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// Connected components; isolated vertices and circles each count as one.
int component_count(const Multigraph& g);

// Number of components of the subgraph induced by the edge subset, provided
// every vertex meeting the subset has exactly two incident darts in it.
// Throws NotTwoRegularError otherwise.
int two_regular_components(const Multigraph& g, const std::vector<int>& edge_subset);

// Cheap canonical form: normalized sorted edge list plus counters. Detects
// exact relabel-stable duplicates, not isomorphism.
std::string canonical_edge_key(const Multigraph& g);

}  // namespace skewpf

#endif
