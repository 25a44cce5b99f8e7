#include "matchpoly/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace matchpoly {

Multigraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Multigraph(n, edges);
}

Multigraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Multigraph(n, edges);
}

Multigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Multigraph(n, edges);
}

Multigraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Multigraph(leaves + 1, edges);
}

Multigraph bouquet_graph(int loops) {
    std::vector<std::pair<int, int>> edges(loops, {0, 0});
    return Multigraph(1, edges);
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList relabeled_sorted(const EdgeList& edges, const std::vector<int>& perm) {
    EdgeList out;
    out.reserve(edges.size());
    for (const auto& [u, v] : edges)
        out.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::sort(out.begin(), out.end());
    return out;
}

EdgeList canonical_form(const EdgeList& edges, const std::vector<std::vector<int>>& perms) {
    EdgeList best;
    bool first = true;
    for (const auto& perm : perms) {
        EdgeList cand = relabeled_sorted(edges, perm);
        if (first || cand < best) {
            best = std::move(cand);
            first = false;
        }
    }
    return best;
}

}  // namespace

std::vector<Multigraph> connected_simple_graphs_up_to(int max_n) {
    std::vector<Multigraph> corpus;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        const auto perms = all_permutations(n);
        const int m = static_cast<int>(pairs.size());
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
            EdgeList edges;
            for (int k = 0; k < m; ++k)
                if (mask >> k & 1) edges.push_back(pairs[k]);
            if (canonical_form(edges, perms) != edges) continue;  // keep one representative
            Multigraph g(n, edges);
            if (g.is_connected()) corpus.push_back(std::move(g));
        }
    }
    return corpus;
}

std::vector<Multigraph> multigraph_corpus(int max_n, int max_edges) {
    std::vector<Multigraph> corpus;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> types;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) types.emplace_back(i, j);  // loops included
        const auto perms = all_permutations(n);
        std::set<EdgeList> seen;
        // Nondecreasing type-index sequences of every length up to max_edges.
        std::vector<int> pick;
        auto rec = [&](auto&& self, int from) -> void {
            EdgeList edges;
            for (int t : pick) edges.push_back(types[t]);
            EdgeList canon = canonical_form(edges, perms);
            if (seen.insert(canon).second) corpus.emplace_back(n, canon);
            if (static_cast<int>(pick.size()) == max_edges) return;
            for (int t = from; t < static_cast<int>(types.size()); ++t) {
                pick.push_back(t);
                self(self, t);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    return corpus;
}

std::vector<Multigraph> trees_up_to(int max_n) {
    std::vector<Multigraph> trees;
    for (const auto& g : connected_simple_graphs_up_to(max_n))
        if (g.edge_count() == g.vertex_count() - 1) trees.push_back(g);
    return trees;
}

Multigraph random_simple_graph(SeededRng& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin()) edges.emplace_back(i, j);
    return Multigraph(n, edges);
}

Hypergraph random_hypergraph(SeededRng& rng, int max_n, int max_edges, int max_edge_size) {
    const int n = static_cast<int>(rng.uniform_int(1, max_n));
    const int m = static_cast<int>(rng.uniform_int(0, max_edges));
    std::vector<std::vector<int>> edges;
    std::vector<int> pool(n);
    for (int e = 0; e < m; ++e) {
        const int size = static_cast<int>(rng.uniform_int(1, std::min(n, max_edge_size)));
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> edge;
        for (int k = 0; k < size; ++k) {
            const int j = static_cast<int>(rng.uniform_int(k, n - 1));
            std::swap(pool[k], pool[j]);
            edge.push_back(pool[k]);
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

std::vector<Rational> random_probabilities(SeededRng& rng, int n) {
    std::vector<Rational> p;
    p.reserve(n);
    for (int i = 0; i < n; ++i) {
        const long den = rng.uniform_int(1, 10);
        p.push_back(make_rational(rng.uniform_int(0, den), den));
    }
    return p;
}

std::vector<int> random_kappa(SeededRng& rng, int n, int max_kappa) {
    std::vector<int> kappa(n);
    for (int i = 0; i < n; ++i) kappa[i] = static_cast<int>(rng.uniform_int(0, max_kappa));
    return kappa;
}

}  // namespace matchpoly
