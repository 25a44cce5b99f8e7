#pragma once

#include <map>
#include <string>
#include <vector>

#include "matchpoly/rational.hpp"

namespace matchpoly {

class UniPoly;

using ExponentVec = std::vector<int>;

// Sparse exact multivariate polynomial over the rationals. Terms are kept in
// a map ordered lexicographically by exponent vector; zero coefficients are
// never stored, and every exponent vector has length nvars().
class MultiPoly {
public:
    using TermMap = std::map<ExponentVec, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int i);
    static MultiPoly monomial(int nvars, ExponentVec exp, const Rational& c);
    // Product monomial x^S for a vertex/index subset.
    static MultiPoly subset_monomial(int nvars, const std::vector<int>& subset);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const ExponentVec& exp) const;

    // Adds c * x^exp, erasing the term if the total cancels.
    void add_term(const ExponentVec& exp, const Rational& c);

    bool is_multiaffine() const;
    int total_degree() const;  // -1 for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly& operator/=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }

    bool operator==(const MultiPoly& other) const = default;

    MultiPoly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    UniPoly diagonal() const;  // substitute x_i := x for all i

private:
    int nvars_ = 0;
    TermMap terms_;
};

// Dense exact univariate polynomial, coefficients low degree first; the
// leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly x();  // the monomial t
    static UniPoly from_ints(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of t^k; zero beyond the degree.
    Rational coeff(int k) const;
    Rational leading() const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend UniPoly operator/(UniPoly a, const Rational& c);

    bool operator==(const UniPoly& other) const = default;

    UniPoly pow(unsigned long e) const;
    UniPoly derivative() const;
    Rational evaluate(const Rational& x) const;

    // Polynomial long division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    // Division that must leave no remainder; throws InternalError otherwise.
    UniPoly divide_exact(const UniPoly& divisor) const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Constant-coefficient differential operator sum a(alpha) d^alpha, stored via
// its symbol polynomial sum a(alpha) x^alpha.
class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(MultiPoly symbol) : symbol_(std::move(symbol)) {}

    static DiffOperator identity(int nvars) { return DiffOperator(MultiPoly::constant(nvars, 1)); }
    static DiffOperator partial(int nvars, int i) { return DiffOperator(MultiPoly::variable(nvars, i)); }

    const MultiPoly& symbol() const { return symbol_; }
    int nvars() const { return symbol_.nvars(); }

    // Operator composition; constant-coefficient operators commute, so this
    // is just the symbol product.
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
        return DiffOperator(a.symbol() * b.symbol());
    }
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
        return DiffOperator(a.symbol() + b.symbol());
    }
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
        return DiffOperator(a.symbol() - b.symbol());
    }

    bool operator==(const DiffOperator& other) const = default;

private:
    MultiPoly symbol_;
};

// Drops every term with some exponent >= 2.
MultiPoly map_multiaffine_part(const MultiPoly& f);
DiffOperator map_operator(const DiffOperator& op);

// Exact result of applying sum a(alpha) d^alpha to f termwise.
MultiPoly apply_operator(const DiffOperator& op, const MultiPoly& f);

// t -> f(base + t*dir); every dir entry must be strictly positive.
UniPoly restrict_to_line(const MultiPoly& f, const std::vector<Rational>& base,
                         const std::vector<Rational>& dir);

// (prod_i x_i) * f(-1/x_1, ..., -1/x_n) expanded: c*x^S -> c*(-1)^|S|*x^([n]\S).
// Input must be multiaffine.
MultiPoly complement_transform(const MultiPoly& f);

// Human-readable forms; terms in descending lexicographic exponent order.
// Multivariate variables print as x0, x1, ...; univariate as plain x.
std::string to_text(const MultiPoly& f);
std::string to_text(const UniPoly& p);
std::string to_text(const DiffOperator& op);  // variables print as d0, d1, ...

}  // namespace matchpoly
