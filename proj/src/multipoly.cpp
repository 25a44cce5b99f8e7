#include "matchpoly/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "matchpoly/errors.hpp"

namespace matchpoly {

namespace {

void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomial variable counts differ: " +
                                    std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(ExponentVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    ExponentVec e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(int nvars, ExponentVec exp, const Rational& c) {
    if (static_cast<int>(exp.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p(nvars);
    p.add_term(exp, c);
    return p;
}

MultiPoly MultiPoly::subset_monomial(int nvars, const std::vector<int>& subset) {
    ExponentVec e(nvars, 0);
    for (int i : subset) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("subset index out of range");
        e[i] += 1;
    }
    return monomial(nvars, std::move(e), 1);
}

Rational MultiPoly::coeff(const ExponentVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const ExponentVec& exp, const Rational& c) {
    if (sign(c) == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (sign(it->second) == 0) terms_.erase(it);
    }
}

bool MultiPoly::is_multiaffine() const {
    for (const auto& [exp, c] : terms_)
        for (int e : exp)
            if (e > 1) return false;
    return true;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [exp, c] : terms_) {
        int d = 0;
        for (int e : exp) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_same_vars(*this, other);
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_same_vars(*this, other);
    for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_vars(a, b);
    MultiPoly out(a.nvars());
    ExponentVec exp(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < a.nvars(); ++i) exp[i] = ea[i] + eb[i];
            out.add_term(exp, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sign(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exp, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (sign(c) == 0) throw std::invalid_argument("division by zero");
    for (auto& [exp, coeff] : terms_) coeff /= c;
    return *this;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [exp, c] : terms_) {
        if (exp[var] == 0) continue;
        ExponentVec e = exp;
        e[var] -= 1;
        out.add_term(e, c * exp[var]);
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    Rational total = 0;
    for (const auto& [exp, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            if (exp[i] != 0) term *= rat_pow(point[i], exp[i]);
        total += term;
    }
    return total;
}

UniPoly MultiPoly::diagonal() const {
    std::vector<Rational> coeffs;
    for (const auto& [exp, c] : terms_) {
        int d = 0;
        for (int e : exp) d += e;
        if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, Rational(0));
        coeffs[d] += c;
    }
    return UniPoly(std::move(coeffs));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (sign(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return UniPoly(std::move(out));
}

UniPoly operator/(UniPoly a, const Rational& c) {
    if (sign(c) == 0) throw std::invalid_argument("division by zero");
    for (auto& v : a.coeffs_) v /= c;
    return a;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(out));
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly rem = *this;
    const int dd = divisor.degree();
    if (rem.degree() < dd) return {UniPoly(), rem};
    std::vector<Rational> quot(rem.degree() - dd + 1, Rational(0));
    const Rational& lead = divisor.coeffs().back();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int k = rem.degree() - dd;
        Rational q = rem.coeffs().back() / lead;
        quot[k] = q;
        for (int i = 0; i <= dd; ++i) rem.coeffs_[k + i] -= q * divisor.coeffs()[i];
        rem.normalize();
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw InternalError("polynomial division expected to be exact left a remainder");
    return q;
}

MultiPoly map_multiaffine_part(const MultiPoly& f) {
    MultiPoly out(f.nvars());
    for (const auto& [exp, c] : f.terms()) {
        bool keep = true;
        for (int e : exp)
            if (e > 1) {
                keep = false;
                break;
            }
        if (keep) out.add_term(exp, c);
    }
    return out;
}

DiffOperator map_operator(const DiffOperator& op) { return DiffOperator(map_multiaffine_part(op.symbol())); }

MultiPoly apply_operator(const DiffOperator& op, const MultiPoly& f) {
    if (op.nvars() != f.nvars()) throw std::invalid_argument("operator/polynomial variable counts differ");
    const int n = f.nvars();
    MultiPoly out(n);
    ExponentVec exp(n);
    for (const auto& [alpha, a] : op.symbol().terms()) {
        for (const auto& [beta, c] : f.terms()) {
            Integer scale = 1;
            bool vanish = false;
            for (int i = 0; i < n; ++i) {
                if (beta[i] < alpha[i]) {
                    vanish = true;
                    break;
                }
                if (alpha[i] > 0) scale *= falling_factorial(beta[i], alpha[i]);
                exp[i] = beta[i] - alpha[i];
            }
            if (vanish) continue;
            out.add_term(exp, a * c * Rational(scale));
        }
    }
    return out;
}

UniPoly restrict_to_line(const MultiPoly& f, const std::vector<Rational>& base,
                         const std::vector<Rational>& dir) {
    const int n = f.nvars();
    if (static_cast<int>(base.size()) != n || static_cast<int>(dir.size()) != n)
        throw std::invalid_argument("line dimension mismatch");
    for (const auto& d : dir)
        if (sign(d) <= 0) throw std::invalid_argument("line direction entries must be strictly positive");
    UniPoly result;
    for (const auto& [exp, c] : f.terms()) {
        UniPoly term = UniPoly::constant(c);
        for (int i = 0; i < n; ++i) {
            if (exp[i] == 0) continue;
            UniPoly lin(std::vector<Rational>{base[i], dir[i]});
            term = term * lin.pow(exp[i]);
        }
        result += term;
    }
    return result;
}

MultiPoly complement_transform(const MultiPoly& f) {
    if (!f.is_multiaffine()) throw std::invalid_argument("complement_transform requires a multiaffine polynomial");
    const int n = f.nvars();
    MultiPoly out(n);
    ExponentVec comp(n);
    for (const auto& [exp, c] : f.terms()) {
        int support = 0;
        for (int i = 0; i < n; ++i) {
            comp[i] = 1 - exp[i];
            support += exp[i];
        }
        out.add_term(comp, (support % 2 == 0) ? c : -c);
    }
    return out;
}

namespace {

std::string monomial_text(const ExponentVec& exp, const std::string& stem) {
    std::string s;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += stem + std::to_string(i);
        if (exp[i] > 1) s += "^" + std::to_string(exp[i]);
    }
    return s;
}

std::string poly_text(const MultiPoly& f, const std::string& stem) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending lexicographic order: leading terms first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Rational& c = it->second;
        const std::string mono = monomial_text(it->first, stem);
        const bool neg = sign(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mono.empty()) {
            out << rational_string(mag);
        } else {
            if (mag != 1) out << rational_string(mag) << "*";
            out << mono;
        }
    }
    return out.str();
}

}  // namespace

std::string to_text(const MultiPoly& f) { return poly_text(f, "x"); }

std::string to_text(const DiffOperator& op) { return poly_text(op.symbol(), "d"); }

std::string to_text(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (sign(c) == 0) continue;
        const bool neg = sign(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << rational_string(mag);
        } else {
            if (mag != 1) out << rational_string(mag) << "*";
            out << (k == 1 ? "x" : "x^" + std::to_string(k));
        }
    }
    return out.str();
}

}  // namespace matchpoly
