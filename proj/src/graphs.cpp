#include "matchpoly/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace matchpoly {

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0) throw std::invalid_argument("negative vertex index in edge");
        if (a >= n || b >= n)
            throw std::invalid_argument("vertex index " + std::to_string(std::max(a, b)) +
                                        " out of range for n=" + std::to_string(n));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

bool Multigraph::is_simple() const {
    std::set<Edge> seen;
    for (const auto& e : edges_) {
        if (e.u == e.v) return false;
        if (!seen.insert(e).second) return false;
    }
    return true;
}

bool Multigraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<int>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == n_;
}

std::vector<int> Multigraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix adjacency_matrix(const Multigraph& g) {
    IntMatrix a(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (e.u == e.v) {
            a.at(e.u, e.u) += 2;
        } else {
            a.at(e.u, e.v) += 1;
            a.at(e.v, e.u) += 1;
        }
    }
    return a;
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
        if (e.empty()) throw std::invalid_argument("empty hyperedge");
        std::sort(e.begin(), e.end());
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0) throw std::invalid_argument("negative vertex index in hyperedge");
            if (e[k] >= n) throw std::invalid_argument("hyperedge vertex out of range");
            if (k > 0 && e[k] == e[k - 1]) throw std::invalid_argument("repeated vertex in hyperedge");
        }
    }
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

std::vector<int> Hypergraph::incidence(int v) const {
    std::vector<int> ids;
    for (int i = 0; i < edge_count(); ++i)
        if (std::binary_search(edges_[i].begin(), edges_[i].end(), v)) ids.push_back(i);
    return ids;
}

bool Hypergraph::is_linear() const {
    for (size_t i = 0; i < edges_.size(); ++i)
        for (size_t j = i + 1; j < edges_.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(edges_[i].begin(), edges_[i].end(), edges_[j].begin(), edges_[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() > 1) return false;
        }
    return true;
}

VertexDeletion delete_vertex_weak(const Hypergraph& h, int i) {
    if (i < 0 || i >= h.vertex_count()) throw std::invalid_argument("vertex index out of range");
    std::vector<int> old_of_new;
    std::vector<int> new_of_old(h.vertex_count(), -1);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (v == i) continue;
        new_of_old[v] = static_cast<int>(old_of_new.size());
        old_of_new.push_back(v);
    }
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        std::vector<int> cut;
        for (int v : e)
            if (v != i) cut.push_back(new_of_old[v]);
        if (!cut.empty()) edges.push_back(std::move(cut));
    }
    return {Hypergraph(h.vertex_count() - 1, std::move(edges)), std::move(old_of_new)};
}

VertexDeletion delete_vertices_weak(const Hypergraph& h, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Hypergraph cur = h;
    std::vector<int> old_of_new(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) old_of_new[v] = v;
    // Delete from the largest index down so earlier indices stay valid.
    for (auto it = vertices.rbegin(); it != vertices.rend(); ++it) {
        VertexDeletion step = delete_vertex_weak(cur, *it);
        std::vector<int> composed(step.old_of_new.size());
        for (size_t k = 0; k < step.old_of_new.size(); ++k) composed[k] = old_of_new[step.old_of_new[k]];
        cur = std::move(step.graph);
        old_of_new = std::move(composed);
    }
    return {std::move(cur), std::move(old_of_new)};
}

Hypergraph delete_edge(const Hypergraph& h, int e) {
    if (e < 0 || e >= h.edge_count()) throw std::invalid_argument("edge index out of range");
    std::vector<std::vector<int>> edges;
    edges.reserve(h.edge_count() - 1);
    for (int i = 0; i < h.edge_count(); ++i)
        if (i != e) edges.push_back(h.edge(i));
    return Hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    std::vector<std::vector<int>> edges = a.edges();
    for (const auto& e : b.edges()) {
        std::vector<int> shifted;
        shifted.reserve(e.size());
        for (int v : e) shifted.push_back(v + a.vertex_count());
        edges.push_back(std::move(shifted));
    }
    return Hypergraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Hypergraph hypergraph_from_graph(const Multigraph& g) {
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        if (e.u == e.v)
            edges.push_back({e.u});
        else
            edges.push_back({e.u, e.v});
    }
    return Hypergraph(g.vertex_count(), std::move(edges));
}

}  // namespace matchpoly
