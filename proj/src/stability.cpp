#include "matchpoly/stability.hpp"

#include "matchpoly/realroot.hpp"
#include "matchpoly/rng.hpp"

namespace matchpoly {

namespace {

std::optional<StabilityWitness> line_witness(const MultiPoly& f, std::vector<Rational> base,
                                             std::vector<Rational> dir) {
    const UniPoly g = restrict_to_line(f, base, dir);
    if (g.is_zero() || g.degree() <= 1) return std::nullopt;
    SturmChain chain(g);
    const int real = chain.count_all();
    const int deg = chain.squarefree_degree();
    if (real == deg) return std::nullopt;
    StabilityWitness w;
    w.base = std::move(base);
    w.direction = std::move(dir);
    const Rational bound = cauchy_root_bound(g);
    w.interval_lo = -bound;
    w.interval_hi = bound;
    w.real_roots = real;
    w.squarefree_degree = deg;
    return w;
}

}  // namespace

StabilityVerdict refute_stability(const MultiPoly& f, int trials, std::uint64_t seed, long bound) {
    StabilityVerdict verdict;
    if (f.is_zero()) return verdict;  // zero polynomial is stable by convention
    const int n = f.nvars();
    SeededRng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> base = rng.rational_vector(n, bound, bound);
        std::vector<Rational> dir;
        dir.reserve(n);
        for (int i = 0; i < n; ++i) dir.push_back(rng.positive_rational(bound, bound));
        if (auto w = line_witness(f, std::move(base), std::move(dir))) {
            verdict.refuted = true;
            verdict.witness = std::move(w);
            return verdict;
        }
    }
    return verdict;
}

bool reverify_line_witness(const MultiPoly& f, const StabilityWitness& w) {
    const UniPoly g = restrict_to_line(f, w.base, w.direction);
    if (g.is_zero() || g.degree() <= 1) return false;
    SturmChain chain(g);
    if (chain.squarefree_degree() != w.squarefree_degree) return false;
    if (chain.count_all() != w.real_roots) return false;
    if (w.real_roots >= w.squarefree_degree) return false;
    // All real roots really are inside the stored interval.
    return chain.count_in(w.interval_lo, w.interval_hi) == w.real_roots;
}

}  // namespace matchpoly
