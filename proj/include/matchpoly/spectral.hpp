#pragma once

#include <string>
#include <vector>

#include "matchpoly/graphs.hpp"
#include "matchpoly/multipoly.hpp"
#include "matchpoly/rational.hpp"

namespace matchpoly {

// Depth-D ball of the universal covering tree: one node per non-backtracking
// walk of length <= D from the root. Node 0 is the root; every other node
// extends its parent's walk by one vertex.
struct TreeTruncation {
    int root = 0;
    int depth = 0;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> vertex;  // endpoint of each node's walk in the base graph

    int node_count() const { return static_cast<int>(parent.size()); }
    std::vector<int> walk(int node) const;
};

inline constexpr int kDefaultTruncationNodeCap = 200000;

// The base graph must be simple and connected. Refuses (BudgetExceeded) when
// the tree would exceed the node cap.
TreeTruncation universal_cover_truncation(const Multigraph& g, int root, int depth,
                                          int node_cap = kDefaultTruncationNodeCap);

struct RhoEstimate {
    Rational value;  // certified lower bound on the spectral radius of U(G)
    int depth = 0;
    std::string method;
};

// Largest adjacency eigenvalue of the depth-D truncation, bisected over the
// fixed bracket [0, max degree] to width <= 2^-20 using an exact
// positive-definiteness test (leaf-first LDL pivots on the tree). The lower
// endpoint is returned, so the estimate never exceeds rho(G) and is
// monotone nondecreasing in D.
RhoEstimate rho_estimate(const Multigraph& g, int depth, int root = 0,
                         int node_cap = kDefaultTruncationNodeCap);

// Exact Sturm decision: no real root of p exceeds the bound (one-sided), or
// none lies outside [-bound, bound] (two-sided).
bool check_roots_bounded(const UniPoly& p, const Rational& bound, bool two_sided);

// Rational upper bound u >= lambda_max(G) with u - lambda_max <= 2^-20,
// via Sturm-count bisection on charpoly(G). Intended for finite trees where
// rho(G) = r(G), but exact for any graph.
Rational spectral_radius_upper_bound(const Multigraph& g);

// Smallest rational of the form k/2^20 that is >= 2*sqrt(n-2): an upper
// bound for the spectral radius of the universal cover of K_n, n >= 3,
// exceeding it by less than 10^-6.
Rational complete_graph_rho_upper(int n);

}  // namespace matchpoly
