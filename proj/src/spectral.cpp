#include "matchpoly/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchpoly/errors.hpp"
#include "matchpoly/realroot.hpp"

namespace matchpoly {

std::vector<int> TreeTruncation::walk(int node) const {
    std::vector<int> w;
    for (int cur = node; cur >= 0; cur = parent[cur]) w.push_back(vertex[cur]);
    std::reverse(w.begin(), w.end());
    return w;
}

TreeTruncation universal_cover_truncation(const Multigraph& g, int root, int depth, int node_cap) {
    if (!g.is_simple()) throw std::invalid_argument("universal cover truncation needs a simple graph");
    if (!g.is_connected()) throw std::invalid_argument("universal cover truncation needs a connected graph");
    if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root vertex out of range");
    if (depth < 0) throw std::invalid_argument("negative truncation depth");

    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    TreeTruncation tree;
    tree.root = root;
    tree.depth = depth;
    tree.parent = {-1};
    tree.vertex = {root};
    // BFS by levels; a node's walk may return everywhere except straight
    // back to the vertex it just came from.
    std::vector<int> frontier{0};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int node : frontier) {
            const int v = tree.vertex[node];
            const int back = tree.parent[node] >= 0 ? tree.vertex[tree.parent[node]] : -1;
            for (int w : adj[v]) {
                if (w == back) continue;
                if (tree.node_count() >= node_cap)
                    throw BudgetExceeded("universal cover truncation exceeds the node cap of " +
                                             std::to_string(node_cap),
                                         Integer(tree.node_count() + 1),
                                         static_cast<std::uint64_t>(node_cap));
                next.push_back(tree.node_count());
                tree.parent.push_back(node);
                tree.vertex.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return tree;
}

namespace {

// xI - A positive definite for the truncation tree, decided exactly via
// leaf-first LDL pivots d_v = x - sum_c 1/d_c; a nonpositive pivot refutes.
bool shifted_tree_positive_definite(const TreeTruncation& tree, const Rational& x) {
    const int n = tree.node_count();
    std::vector<std::vector<int>> children(n);
    for (int v = 1; v < n; ++v) children[tree.parent[v]].push_back(v);
    std::vector<Rational> pivot(n);
    for (int v = n - 1; v >= 0; --v) {  // BFS order guarantees children first
        Rational d = x;
        for (int c : children[v]) d -= 1 / pivot[c];
        if (sign(d) <= 0) return false;
        pivot[v] = d;
    }
    return true;
}

const Rational kBisectTolerance = make_rational(1, 1 << 20);

}  // namespace

RhoEstimate rho_estimate(const Multigraph& g, int depth, int root, int node_cap) {
    const TreeTruncation tree = universal_cover_truncation(g, root, depth, node_cap);
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));

    Rational lo = 0, hi = max_degree;
    while (hi - lo > kBisectTolerance) {
        const Rational mid = (lo + hi) / 2;
        if (shifted_tree_positive_definite(tree, mid))
            hi = mid;
        else
            lo = mid;
    }
    return RhoEstimate{lo, depth, "truncation-ldl-bisection"};
}

bool check_roots_bounded(const UniPoly& p, const Rational& bound, bool two_sided) {
    if (p.is_zero()) throw std::invalid_argument("root bound check on the zero polynomial");
    if (p.degree() == 0) return true;
    if (count_real_roots_above(p, bound) != 0) return false;
    if (two_sided && count_real_roots_below(p, -bound) != 0) return false;
    return true;
}

Rational spectral_radius_upper_bound(const Multigraph& g) {
    const UniPoly cp = charpoly(adjacency_matrix(g));
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    Rational lo = 0, hi = max_degree;
    if (count_real_roots_above(cp, lo) == 0) return lo;
    while (hi - lo > kBisectTolerance) {
        const Rational mid = (lo + hi) / 2;
        if (count_real_roots_above(cp, mid) == 0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Rational complete_graph_rho_upper(int n) {
    if (n < 3) throw std::invalid_argument("closed form 2*sqrt(n-2) needs n >= 3");
    // Smallest k/2^20 with k^2 >= 4(n-2)*2^40.
    const Integer target = Integer(4 * (n - 2)) << 40;
    Integer k;
    mpz_sqrt(k.get_mpz_t(), target.get_mpz_t());
    if (k * k < target) k += 1;
    return make_rational(k, Integer(1) << 20);
}

}  // namespace matchpoly
