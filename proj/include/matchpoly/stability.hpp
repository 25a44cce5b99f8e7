#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchpoly/multipoly.hpp"
#include "matchpoly/rational.hpp"

namespace matchpoly {

// Evidence accompanying a refutation. For line witnesses the restriction
// t -> f(base + t*dir) has real_roots distinct real roots, all inside
// [interval_lo, interval_hi], with real_roots < squarefree_degree -- an
// exact certificate that some root is not real. Rayleigh witnesses instead
// carry the evaluation point and the offending variable pair.
struct StabilityWitness {
    std::vector<Rational> base;
    std::vector<Rational> direction;
    Rational interval_lo = 0;
    Rational interval_hi = 0;
    int real_roots = 0;
    int squarefree_degree = 0;
    std::optional<std::pair<int, int>> pair;
};

struct StabilityVerdict {
    bool refuted = false;
    std::optional<StabilityWitness> witness;
};

// Samples `trials` random rational (base, positive direction) lines from the
// seeded generator and reports the first restriction that is not real
// rooted. Restrictions of a real stable polynomial along positive
// directions are always real rooted, so genuinely stable inputs are never
// refuted. Deterministic for fixed (f, trials, seed, bound).
StabilityVerdict refute_stability(const MultiPoly& f, int trials, std::uint64_t seed, long bound = 10);

// Re-runs the exact Sturm counts of a line witness against f.
bool reverify_line_witness(const MultiPoly& f, const StabilityWitness& w);

}  // namespace matchpoly
