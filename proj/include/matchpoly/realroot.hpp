#pragma once

#include <vector>

#include "matchpoly/multipoly.hpp"
#include "matchpoly/rational.hpp"

namespace matchpoly {

// Sturm chain of the square-free part of a rational polynomial. Chain
// members are primitive integer polynomials (positive content stripped at
// every step, which preserves signs and keeps coefficients small).
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);

    // Degree of the square-free part (distinct complex roots).
    int squarefree_degree() const;

    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;

    // Distinct real roots in the open interval (a, b); both endpoints must
    // not be roots of the square-free part.
    int count_in(const Rational& a, const Rational& b) const;
    int count_all() const;

    bool is_root(const Rational& x) const;

private:
    std::vector<std::vector<Integer>> seq_;
};

// Primitive integer polynomial with positive leading coefficient and the
// same distinct roots as p; p must be nonzero.
UniPoly squarefree_part(const UniPoly& p);

// True iff every complex root of p is real, decided exactly (square-free
// decomposition + Sturm count). Constants, degree <= 1 and the zero
// polynomial return true.
bool is_real_rooted(const UniPoly& p);

int count_distinct_real_roots(const UniPoly& p);
// Roots strictly greater (resp. smaller) than the threshold.
int count_real_roots_above(const UniPoly& p, const Rational& threshold);
int count_real_roots_below(const UniPoly& p, const Rational& threshold);

// All real roots of p lie in (-bound, bound) for the returned bound.
Rational cauchy_root_bound(const UniPoly& p);

struct RootInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
};

// One closed interval per distinct real root, each of width <= width,
// pairwise disjoint, exact rational endpoints. p must be nonzero.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width);

}  // namespace matchpoly
