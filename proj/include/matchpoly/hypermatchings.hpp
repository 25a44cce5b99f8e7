#pragma once

#include <functional>
#include <string>
#include <vector>

#include "matchpoly/graphs.hpp"
#include "matchpoly/multipoly.hpp"

namespace matchpoly {

// Labeled family of pairs (edge id, chosen subset S_e of that edge) with
// |S_e| >= 2 and distinct edge ids. As a relaxed matching the subsets are
// pairwise disjoint; as a relaxed kappa-subgraph disjointness is replaced by
// the per-vertex degree caps.
struct RelaxedSelection {
    std::vector<std::pair<int, std::vector<int>>> pairs;

    std::vector<int> vertices() const;  // V(M), sorted
    bool operator==(const RelaxedSelection&) const = default;
};

using RelaxedMatching = RelaxedSelection;
using RelaxedSubgraph = RelaxedSelection;

// W(M) = prod over subsets of (|S_e| - 1).
Integer relaxed_weight(const RelaxedSelection& m);

// Visits every relaxed matching exactly once, the empty one first; edges by
// id, subsets of each edge in colexicographic order.
void for_each_relaxed_matching(const Hypergraph& h,
                               const std::function<void(const RelaxedSelection&)>& fn);

std::vector<RelaxedMatching> enumerate_relaxed_matchings(const Hypergraph& h);

// eta_H(x) = sum_M (-1)^|M| W(M) x^([n] \ V(M)); complement convention.
MultiPoly relaxed_matching_poly(const Hypergraph& h);
UniPoly relaxed_matching_poly_univariate(const Hypergraph& h);

// eta_H^kappa by direct enumeration of relaxed kappa-subgraphs, with
// weights W(K) = prod (|S_e| - 1) * prod_i (kappa_i)_deg(i) and residual
// exponents kappa_i - deg(i) on every vertex.
MultiPoly relaxed_kappa_subgraph_poly(const Hypergraph& h, const std::vector<int>& kappa);

// The per-edge multiaffine operator 1 - sum_{S subset of e, |S|>1} (|S|-1) d^S,
// i.e. MAP[(1 - d_e) prod_{i in e} (1 + d_i)].
DiffOperator edge_map_operator(const Hypergraph& h, int e);

// eta_H^kappa via the operator route: compose the per-edge multiaffine
// operators (they commute) and apply once to x^kappa. Terms whose exponents
// exceed kappa are pruned during composition; they annihilate x^kappa.
MultiPoly relaxed_poly_via_operators(const Hypergraph& h, const std::vector<int>& kappa);

// Separate route for kappa = 1: prod_e (1 - d_e) prod_i (1 + d_i)^deg(i)
// applied to x^(1,...,1), without per-edge MAP.
MultiPoly relaxed_poly_via_corollary(const Hypergraph& h);

struct IdentityReport {
    bool edge_recursion = true;    // eta_H = eta_{H\e} - sum_S (|S|-1) eta_{(H\e)\S}
    bool vertex_recursion = true;  // eta_H = x_i eta_{H\i} - sum_{e,S} (|S|-1) eta_{(H\e)\S}
    bool multiplicativity = true;  // eta_{H (+) H} = eta_H^2
    bool derivative = true;        // d_i eta_H = eta_{H\i}
    std::string counterexample;

    bool all() const { return edge_recursion && vertex_recursion && multiplicativity && derivative; }
};

// Verifies the four structural identities exactly, for all applicable
// vertices and edges of h.
IdentityReport identity_suite(const Hypergraph& h);

}  // namespace matchpoly
