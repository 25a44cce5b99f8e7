#include "matchpoly/matchings.hpp"

#include <cstdint>
#include <stdexcept>

namespace matchpoly {

namespace {

void matching_backtrack(const Multigraph& g, int from, std::uint64_t used, std::vector<int>& current,
                        const std::function<void(const std::vector<int>&)>& fn) {
    fn(current);
    for (int e = from; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        const auto& edge = g.edge(e);
        const std::uint64_t mask = (std::uint64_t{1} << edge.u) | (std::uint64_t{1} << edge.v);
        if (used & mask) continue;
        current.push_back(e);
        matching_backtrack(g, e + 1, used | mask, current, fn);
        current.pop_back();
    }
}

}  // namespace

void for_each_matching(const Multigraph& g, const std::function<void(const std::vector<int>&)>& fn) {
    if (g.vertex_count() > 64) throw std::invalid_argument("matching enumeration limited to 64 vertices");
    std::vector<int> current;
    matching_backtrack(g, 0, 0, current, fn);
}

std::vector<Matching> enumerate_matchings(const Multigraph& g) {
    std::vector<Matching> out;
    for_each_matching(g, [&](const std::vector<int>& m) { out.push_back(Matching{m}); });
    return out;
}

MultiPoly matching_poly_multivariate(const Multigraph& g) {
    const int n = g.vertex_count();
    MultiPoly poly(n);
    ExponentVec exp(n);
    for_each_matching(g, [&](const std::vector<int>& m) {
        std::fill(exp.begin(), exp.end(), 1);
        for (int e : m) {
            exp[g.edge(e).u] = 0;
            exp[g.edge(e).v] = 0;
        }
        poly.add_term(exp, (m.size() % 2 == 0) ? Rational(1) : Rational(-1));
    });
    return poly;
}

MultiPoly matching_poly_matched(const Multigraph& g) {
    const int n = g.vertex_count();
    MultiPoly poly(n);
    ExponentVec exp(n);
    for_each_matching(g, [&](const std::vector<int>& m) {
        std::fill(exp.begin(), exp.end(), 0);
        for (int e : m) {
            exp[g.edge(e).u] = 1;
            exp[g.edge(e).v] = 1;
        }
        poly.add_term(exp, (m.size() % 2 == 0) ? Rational(1) : Rational(-1));
    });
    return poly;
}

UniPoly matching_poly_univariate(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_matching(g, [&](const std::vector<int>& m) {
        const int k = static_cast<int>(m.size());
        coeffs[n - 2 * k] += (k % 2 == 0) ? 1 : -1;
    });
    return UniPoly(std::move(coeffs));
}

MultiPoly subgraph_gen_poly(const Multigraph& g) {
    const int n = g.vertex_count();
    MultiPoly poly = MultiPoly::constant(n, 1);
    for (const auto& e : g.edges()) {
        MultiPoly factor = MultiPoly::constant(n, 1);
        ExponentVec exp(n, 0);
        exp[e.u] += 1;
        exp[e.v] += 1;
        factor.add_term(exp, Rational(-1));
        poly *= factor;
    }
    return poly;
}

}  // namespace matchpoly
