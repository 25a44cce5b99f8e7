#include "matchpoly/distributions.hpp"

#include <stdexcept>

#include "matchpoly/errors.hpp"
#include "matchpoly/matchings.hpp"
#include "matchpoly/rng.hpp"

namespace matchpoly {

SubsetDistribution::SubsetDistribution(int n, std::map<std::uint32_t, Rational> support)
    : n_(n), support_(std::move(support)) {
    if (n < 0 || n > 31) throw std::invalid_argument("ground set size out of range");
    Rational total = 0;
    for (const auto& [mask, prob] : support_) {
        if (mask >> n) throw std::invalid_argument("support subset outside the ground set");
        if (sign(prob) <= 0) throw std::invalid_argument("support probabilities must be positive");
        total += prob;
    }
    if (total != 1) throw std::invalid_argument("probabilities must sum to exactly 1");
}

SubsetDistribution SubsetDistribution::point_mass(int n, std::uint32_t subset) {
    return SubsetDistribution(n, {{subset, Rational(1)}});
}

bool SubsetDistribution::constant_parity() const {
    int parity = -1;
    for (const auto& [mask, prob] : support_) {
        const int p = __builtin_popcount(mask) % 2;
        if (parity < 0) parity = p;
        if (p != parity) return false;
    }
    return true;
}

SubsetDistribution bernoulli_dist(const std::vector<Rational>& p) {
    const int n = static_cast<int>(p.size());
    if (n > kMaxEnumeratedGround) throw std::invalid_argument("Bernoulli ground set too large to enumerate");
    for (const auto& pi : p)
        if (sign(pi) < 0 || pi > 1) throw std::invalid_argument("Bernoulli probabilities must lie in [0,1]");
    std::map<std::uint32_t, Rational> support;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Rational prob = 1;
        for (int i = 0; i < n; ++i) prob *= (mask >> i & 1) ? p[i] : Rational(1 - p[i]);
        if (sign(prob) > 0) support.emplace(mask, prob);
    }
    return SubsetDistribution(n, std::move(support));
}

SubsetDistribution uniform_k_dist(int n, int k) {
    if (n < 0 || n > kMaxEnumeratedGround || k < 0 || k > n)
        throw std::invalid_argument("uniform_k_dist arguments out of range");
    Integer count;
    mpz_bin_uiui(count.get_mpz_t(), n, k);
    const Rational prob = make_rational(Integer(1), count);
    std::map<std::uint32_t, Rational> support;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (__builtin_popcount(mask) == k) support.emplace(mask, prob);
    return SubsetDistribution(n, std::move(support));
}

namespace {

ExponentVec mask_exponents(int n, std::uint32_t mask) {
    ExponentVec e(n, 0);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) e[i] = 1;
    return e;
}

}  // namespace

MultiPoly partition_function(const SubsetDistribution& p) {
    MultiPoly z(p.ground_size());
    for (const auto& [mask, prob] : p.support()) z.add_term(mask_exponents(p.ground_size(), mask), prob);
    return z;
}

DiffOperator tg_operator(const Multigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("T_G requires a simple graph");
    const int n = g.vertex_count();
    MultiPoly symbol = MultiPoly::constant(n, 1);
    for (const auto& e : g.edges()) {
        MultiPoly factor = MultiPoly::constant(n, 1);
        ExponentVec exp(n, 0);
        exp[e.u] = 1;
        exp[e.v] = 1;
        factor.add_term(exp, Rational(-1));
        symbol *= factor;
    }
    return DiffOperator(std::move(symbol));
}

MultiPoly induced_matching_poly(const Multigraph& g, std::uint32_t subset) {
    const int n = g.vertex_count();
    // Induced subgraph keeps edges with both endpoints inside the subset.
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        if ((subset >> e.u & 1) && (subset >> e.v & 1)) edges.emplace_back(e.u, e.v);
    const Multigraph induced(n, edges);

    MultiPoly poly(n);
    ExponentVec exp(n);
    for_each_matching(induced, [&](const std::vector<int>& m) {
        exp = mask_exponents(n, subset);
        for (int e : m) {
            exp[induced.edge(e).u] = 0;
            exp[induced.edge(e).v] = 0;
        }
        poly.add_term(exp, (m.size() % 2 == 0) ? Rational(1) : Rational(-1));
    });
    return poly;
}

MultiPoly expected_induced_matching_poly(const Multigraph& g, const SubsetDistribution& p) {
    if (!g.is_simple()) throw std::invalid_argument("expected induced matching polynomial needs a simple graph");
    if (p.ground_size() != g.vertex_count())
        throw std::invalid_argument("distribution ground set must match the vertex set");

    MultiPoly direct(g.vertex_count());
    for (const auto& [mask, prob] : p.support()) direct += induced_matching_poly(g, mask) * prob;

    const MultiPoly via_operator = apply_operator(tg_operator(g), partition_function(p));
    if (direct != via_operator)
        throw InternalError("direct and T_G-operator induced matching averages disagree");
    return direct;
}

StabilityVerdict rayleigh_refute(const SubsetDistribution& p, int trials, std::uint64_t seed) {
    const int n = p.ground_size();
    const MultiPoly z = partition_function(p);
    std::vector<MultiPoly> first;
    first.reserve(n);
    for (int i = 0; i < n; ++i) first.push_back(z.derivative(i));
    std::vector<std::vector<MultiPoly>> second(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) second[i].push_back(first[i].derivative(j));

    StabilityVerdict verdict;
    SeededRng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> point;
        point.reserve(n);
        for (int i = 0; i < n; ++i) point.push_back(rng.rational_in_radius(5, 10));
        const Rational zv = z.evaluate(point);
        for (int i = 0; i < n; ++i) {
            const Rational zi = first[i].evaluate(point);
            for (int j = i + 1; j < n; ++j) {
                const Rational zj = first[j].evaluate(point);
                const Rational zij = second[i][j - i - 1].evaluate(point);
                if (zv * zij > zi * zj) {
                    StabilityWitness w;
                    w.base = point;
                    w.pair = {i, j};
                    verdict.refuted = true;
                    verdict.witness = std::move(w);
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

namespace {

void require_nonnegative(const Rational& v, const char* name) {
    if (sign(v) < 0) throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

}  // namespace

bool bivariate_multiaffine_stable(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) {
    require_nonnegative(a, "a");
    require_nonnegative(b, "b");
    require_nonnegative(c, "c");
    require_nonnegative(d, "d");
    return b * c - a * d >= 0;
}

bool bivariate_expectation_stable(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) {
    require_nonnegative(a, "a");
    require_nonnegative(b, "b");
    require_nonnegative(c, "c");
    require_nonnegative(d, "d");
    return b * c - a * (d - a) >= 0;
}

}  // namespace matchpoly
