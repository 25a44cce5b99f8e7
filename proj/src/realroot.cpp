#include "matchpoly/realroot.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchpoly/errors.hpp"

namespace matchpoly {

namespace {

using IntCoeffs = std::vector<Integer>;  // low degree first, no trailing zeros

// Clears denominators and strips positive content; preserves the sign.
IntCoeffs primitive_int(const UniPoly& p) {
    IntCoeffs out;
    if (p.is_zero()) return out;
    Integer den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    out.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

UniPoly to_unipoly(const IntCoeffs& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& v : a) c.emplace_back(v);
    return UniPoly(std::move(c));
}

// Sign of the integer polynomial at num/den, den > 0: evaluates
// sum a_i num^i den^(d-i) exactly.
int sign_at(const IntCoeffs& a, const Integer& num, const Integer& den) {
    if (a.empty()) return 0;
    Integer acc = a.back();
    for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) acc = acc * num + a[i] * int_pow(den, a.size() - 1 - i);
    return sign(acc);
}

int sign_at(const IntCoeffs& a, const Rational& x) {
    return sign_at(a, Integer(x.get_num()), Integer(x.get_den()));
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// gcd of two rational polynomials, returned primitive with positive lead.
IntCoeffs poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = to_unipoly(primitive_int(r));
    }
    IntCoeffs g = primitive_int(a);
    if (!g.empty() && sign(g.back()) < 0)
        for (auto& v : g) v = -v;
    return g;
}

}  // namespace

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free part of the zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(1);
    UniPoly g = to_unipoly(poly_gcd(p, p.derivative()));
    UniPoly sf = p.divide_exact(g);
    IntCoeffs out = primitive_int(sf);
    if (sign(out.back()) < 0)
        for (auto& v : out) v = -v;
    return to_unipoly(out);
}

SturmChain::SturmChain(const UniPoly& p) {
    UniPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) {
        seq_.push_back(primitive_int(sf));
        return;
    }
    seq_.push_back(primitive_int(sf));
    seq_.push_back(primitive_int(sf.derivative()));
    while (true) {
        const UniPoly prev = to_unipoly(seq_[seq_.size() - 2]);
        const UniPoly cur = to_unipoly(seq_.back());
        UniPoly rem = prev.divmod(cur).second;
        if (rem.is_zero()) break;
        rem *= Rational(-1);
        seq_.push_back(primitive_int(rem));
    }
}

int SturmChain::squarefree_degree() const { return static_cast<int>(seq_.front().size()) - 1; }

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) signs.push_back(sign_at(f, x));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) signs.push_back(f.empty() ? 0 : sign(f.back()));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) {
        if (f.empty()) {
            signs.push_back(0);
            continue;
        }
        int s = sign(f.back());
        if ((f.size() - 1) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::count_in(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

bool SturmChain::is_root(const Rational& x) const { return sign_at(seq_.front(), x) == 0; }

bool is_real_rooted(const UniPoly& p) {
    // Zero polynomial counts as stable (hence real rooted) by convention.
    if (p.is_zero() || p.degree() <= 1) return true;
    SturmChain chain(p);
    return chain.count_all() == chain.squarefree_degree();
}

int count_distinct_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmChain(p).count_all();
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
    const int d = p.degree();
    Rational m = 0;
    for (int i = 0; i < d; ++i) {
        Rational r = abs(p.coeff(i) / p.coeff(d));
        if (r > m) m = r;
    }
    return m + 1;
}

namespace {

int count_above_impl(const UniPoly& sf, const Rational& threshold) {
    UniPoly q = sf;
    if (sign(q.evaluate(threshold)) == 0) {
        // Deflate the simple root at the threshold; it is not counted.
        q = q.divide_exact(UniPoly(std::vector<Rational>{-threshold, Rational(1)}));
        if (q.degree() <= 0) return 0;
    }
    if (q.degree() <= 0) return 0;
    SturmChain chain(q);
    return chain.variations_at(threshold) - chain.variations_at_pos_inf();
}

}  // namespace

int count_real_roots_above(const UniPoly& p, const Rational& threshold) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return count_above_impl(squarefree_part(p), threshold);
}

int count_real_roots_below(const UniPoly& p, const Rational& threshold) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    // Reflect x -> -x and count above -threshold.
    std::vector<Rational> c = squarefree_part(p).coeffs();
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return count_above_impl(UniPoly(std::move(c)), -threshold);
}

namespace {

// Split point near the middle of (lo, hi) that is not a root of the chain's
// square-free polynomial. Dyadic perturbations converge, so this terminates.
Rational nonroot_split(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    const Rational mid = (lo + hi) / 2;
    if (!chain.is_root(mid)) return mid;
    Rational delta = (hi - lo) / 4;
    while (true) {
        if (!chain.is_root(mid + delta)) return mid + delta;
        if (!chain.is_root(mid - delta)) return mid - delta;
        delta /= 2;
    }
}

struct WorkInterval {
    Rational lo, hi;
    int count;
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (sign(width) <= 0) throw std::invalid_argument("interval width must be positive");
    if (p.degree() == 0) return {};
    SturmChain chain(p);
    const Rational bound = cauchy_root_bound(p);

    std::vector<RootInterval> isolated;
    std::vector<WorkInterval> stack;
    stack.push_back({-bound, bound, chain.count_in(-bound, bound)});
    while (!stack.empty()) {
        WorkInterval w = stack.back();
        stack.pop_back();
        if (w.count == 0) continue;
        if (w.count == 1 && w.hi - w.lo <= width) {
            isolated.push_back({w.lo, w.hi});
            continue;
        }
        const Rational mid = nonroot_split(chain, w.lo, w.hi);
        const int left = chain.count_in(w.lo, mid);
        stack.push_back({mid, w.hi, w.count - left});
        stack.push_back({w.lo, mid, left});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

    // Adjacent intervals may share a (non-root) endpoint; shrink each member
    // of a touching pair toward its root until the closed intervals are
    // disjoint. Bisection converges to distinct roots, so this terminates.
    auto shrink = [&chain](RootInterval& iv) {
        const Rational mid = nonroot_split(chain, iv.lo, iv.hi);
        if (chain.count_in(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    };
    for (size_t i = 0; i + 1 < isolated.size(); ++i) {
        while (isolated[i].hi >= isolated[i + 1].lo) {
            shrink(isolated[i]);
            shrink(isolated[i + 1]);
        }
    }
    return isolated;
}

}  // namespace matchpoly
