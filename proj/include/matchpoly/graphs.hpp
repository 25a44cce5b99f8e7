#pragma once

#include <utility>
#include <vector>

#include "matchpoly/matrix.hpp"

namespace matchpoly {

// Undirected multigraph with loops on vertices 0..n-1. Parallel edges and
// loops are allowed; each list position is a distinct edge identity and the
// list order is canonical.
class Multigraph {
public:
    struct Edge {
        int u, v;  // stored with u <= v
        bool operator==(const Edge&) const = default;
        auto operator<=>(const Edge&) const = default;
    };

    Multigraph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }
    bool is_loop(int id) const { return edges_[id].u == edges_[id].v; }

    int degree(int v) const;  // loops count twice
    bool is_simple() const;   // no loops, no parallel edges
    bool is_connected() const;

    // Neighbor multiset of v (loops contribute v twice), sorted.
    std::vector<int> neighbors(int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Dual oriented view of an undirected edge: every edge id carries a positive
// and a negative orientation; negation swaps head and tail.
struct OrientedEdge {
    int id;
    bool positive = true;
};

inline OrientedEdge negate(OrientedEdge e) { return {e.id, !e.positive}; }
inline int head(const Multigraph& g, OrientedEdge e) { return e.positive ? g.edge(e.id).u : g.edge(e.id).v; }
inline int tail(const Multigraph& g, OrientedEdge e) { return e.positive ? g.edge(e.id).v : g.edge(e.id).u; }

// n x n symmetric; entry (i,j), i != j, counts edges {i,j}; a loop at i
// contributes 2 to entry (i,i) (both orientations).
IntMatrix adjacency_matrix(const Multigraph& g);

// Hypergraph on vertex set 0..n-1; edges are vertex subsets of size >= 1,
// repetitions between edges allowed.
class Hypergraph {
public:
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int id) const { return edges_[id]; }

    int degree(int v) const;
    std::vector<int> incidence(int v) const;  // edge ids containing v
    // Pairwise edge intersections have size <= 1.
    bool is_linear() const;

private:
    int n_;
    std::vector<std::vector<int>> edges_;
};

struct VertexDeletion {
    Hypergraph graph;
    std::vector<int> old_of_new;  // old vertex index for each new index
};

// Removes vertex i, intersects every edge with the remaining vertices, drops
// empty intersections and relabels vertices compactly.
VertexDeletion delete_vertex_weak(const Hypergraph& h, int i);
// Successive weak deletions of all vertices in the set.
VertexDeletion delete_vertices_weak(const Hypergraph& h, std::vector<int> vertices);

Hypergraph delete_edge(const Hypergraph& h, int e);
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

// Graph as a hypergraph of 2-element edges; a loop collapses to a singleton
// edge, which no relaxed matching can use.
Hypergraph hypergraph_from_graph(const Multigraph& g);

}  // namespace matchpoly
