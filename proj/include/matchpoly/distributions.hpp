#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "matchpoly/graphs.hpp"
#include "matchpoly/multipoly.hpp"
#include "matchpoly/stability.hpp"

namespace matchpoly {

// Probability distribution on subsets of {0,...,n-1} with exact rational
// probabilities, stored as an explicit support map (subsets as bitmasks).
// Probabilities are positive and sum to exactly 1.
class SubsetDistribution {
public:
    SubsetDistribution(int n, std::map<std::uint32_t, Rational> support);

    static SubsetDistribution point_mass(int n, std::uint32_t subset);

    int ground_size() const { return n_; }
    const std::map<std::uint32_t, Rational>& support() const { return support_; }

    // All support sets have sizes of equal parity.
    bool constant_parity() const;

private:
    int n_;
    std::map<std::uint32_t, Rational> support_;
};

// Full-support constructions enumerate 2^k subsets; ground sets are capped.
inline constexpr int kMaxEnumeratedGround = 20;

// Product measure selecting vertex i independently with probability p[i].
SubsetDistribution bernoulli_dist(const std::vector<Rational>& p);

// Uniform measure on the size-k subsets of {0,...,n-1}.
SubsetDistribution uniform_k_dist(int n, int k);

// Z_P(x) = sum_S P(S) x^S.
MultiPoly partition_function(const SubsetDistribution& p);

// T_G = prod_{{i,j} in E} (1 - d_i d_j); the graph must be simple.
DiffOperator tg_operator(const Multigraph& g);

// mu_{G[S]} embedded in n variables: matchings of the induced subgraph, with
// monomials over the unmatched vertices of S only.
MultiPoly induced_matching_poly(const Multigraph& g, std::uint32_t subset);

// E_S[mu_{G[S]}], computed both as the direct support sum and as
// T_G(Z_P); the two routes must agree exactly (InternalError otherwise).
MultiPoly expected_induced_matching_poly(const Multigraph& g, const SubsetDistribution& p);

// Evaluates the Rayleigh inequality Z * dZ/didj <= dZ/di * dZ/dj exactly at
// seeded random rational points of R^n for all pairs i < j; a failure
// refutes strong Rayleigh and hence stability of Z_P. Witness carries the
// point and the offending pair.
StabilityVerdict rayleigh_refute(const SubsetDistribution& p, int trials, std::uint64_t seed);

// a*x1*x2 + b*x1 + c*x2 + d with a,b,c,d >= 0 is stable iff bc - ad >= 0.
bool bivariate_multiaffine_stable(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d);

// a*(x1*x2 - 1) + b*x1 + c*x2 + d with a,b,c,d >= 0 is stable iff
// bc - a*(d - a) >= 0.
bool bivariate_expectation_stable(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d);

}  // namespace matchpoly
