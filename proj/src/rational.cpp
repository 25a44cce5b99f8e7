#include "matchpoly/rational.hpp"

#include <stdexcept>

namespace matchpoly {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& num, const std::string& den) {
    Integer n, d;
    if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad numerator: " + num);
    if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad denominator: " + den);
    return make_rational(n, d);
}

std::string decimal(const Integer& z) { return z.get_str(10); }
std::string decimal_num(const Rational& q) { return q.get_num().get_str(10); }
std::string decimal_den(const Rational& q) { return q.get_den().get_str(10); }

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return decimal_num(q);
    return decimal_num(q) + "/" + decimal_den(q);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    Rational b = base;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Integer falling_factorial(long b, unsigned long k) {
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= Integer(b - static_cast<long>(i));
    return r;
}

}  // namespace matchpoly
