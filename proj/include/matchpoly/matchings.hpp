#pragma once

#include <functional>
#include <vector>

#include "matchpoly/graphs.hpp"
#include "matchpoly/multipoly.hpp"

namespace matchpoly {

// Edge-id set with pairwise disjoint endpoints; never contains loops.
struct Matching {
    std::vector<int> edge_ids;
    bool operator==(const Matching&) const = default;
};

// Visits every matching exactly once, the empty matching first, in
// lexicographic order of edge-id sequences. Backtracking over edge ids with
// a vertex-occupancy bitmask; loops are skipped at generation.
void for_each_matching(const Multigraph& g, const std::function<void(const std::vector<int>&)>& fn);

std::vector<Matching> enumerate_matchings(const Multigraph& g);

// Complement convention: sum over matchings of (-1)^|M| * x^([n] \ V(M)).
MultiPoly matching_poly_multivariate(const Multigraph& g);

// Matched-vertex convention: sum over matchings of (-1)^|M| * x^V(M).
MultiPoly matching_poly_matched(const Multigraph& g);

// sum_i (-1)^i m_i x^(n-2i); the diagonal of the complement convention.
UniPoly matching_poly_univariate(const Multigraph& g);

// prod_{{i,j} in E} (1 - x_i x_j), expanded exactly; a loop at i
// contributes (1 - x_i^2).
MultiPoly subgraph_gen_poly(const Multigraph& g);

}  // namespace matchpoly
