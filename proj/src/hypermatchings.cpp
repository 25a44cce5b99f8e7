#include "matchpoly/hypermatchings.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace matchpoly {

namespace {

struct EdgeSubset {
    std::vector<int> vertices;  // sorted
    std::uint64_t mask = 0;
};

// Admissible subsets (size >= 2) of every edge, each list in colex order.
std::vector<std::vector<EdgeSubset>> edge_subsets(const Hypergraph& h) {
    if (h.vertex_count() > 64) throw std::invalid_argument("hypergraph enumeration limited to 64 vertices");
    std::vector<std::vector<EdgeSubset>> out(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& edge = h.edge(e);
        const int s = static_cast<int>(edge.size());
        for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << s); ++pick) {
            if (__builtin_popcount(pick) < 2) continue;
            EdgeSubset sub;
            for (int k = 0; k < s; ++k)
                if (pick >> k & 1) {
                    sub.vertices.push_back(edge[k]);
                    sub.mask |= std::uint64_t{1} << edge[k];
                }
            out[e].push_back(std::move(sub));
        }
    }
    return out;
}

void relaxed_backtrack(const std::vector<std::vector<EdgeSubset>>& subsets, int from, std::uint64_t used,
                       RelaxedSelection& current, const std::function<void(const RelaxedSelection&)>& fn) {
    fn(current);
    for (int e = from; e < static_cast<int>(subsets.size()); ++e) {
        for (const EdgeSubset& sub : subsets[e]) {
            if (used & sub.mask) continue;
            current.pairs.emplace_back(e, sub.vertices);
            relaxed_backtrack(subsets, e + 1, used | sub.mask, current, fn);
            current.pairs.pop_back();
        }
    }
}

}  // namespace

std::vector<int> RelaxedSelection::vertices() const {
    std::vector<int> v;
    for (const auto& [e, sub] : pairs) v.insert(v.end(), sub.begin(), sub.end());
    std::sort(v.begin(), v.end());
    return v;
}

Integer relaxed_weight(const RelaxedSelection& m) {
    Integer w = 1;
    for (const auto& [e, sub] : m.pairs) w *= Integer(static_cast<long>(sub.size()) - 1);
    return w;
}

void for_each_relaxed_matching(const Hypergraph& h,
                               const std::function<void(const RelaxedSelection&)>& fn) {
    const auto subsets = edge_subsets(h);
    RelaxedSelection current;
    relaxed_backtrack(subsets, 0, 0, current, fn);
}

std::vector<RelaxedMatching> enumerate_relaxed_matchings(const Hypergraph& h) {
    std::vector<RelaxedMatching> out;
    for_each_relaxed_matching(h, [&](const RelaxedSelection& m) { out.push_back(m); });
    return out;
}

MultiPoly relaxed_matching_poly(const Hypergraph& h) {
    const int n = h.vertex_count();
    MultiPoly poly(n);
    ExponentVec exp(n);
    for_each_relaxed_matching(h, [&](const RelaxedSelection& m) {
        std::fill(exp.begin(), exp.end(), 1);
        for (const auto& [e, sub] : m.pairs)
            for (int v : sub) exp[v] = 0;
        const Rational coeff(relaxed_weight(m));
        poly.add_term(exp, (m.pairs.size() % 2 == 0) ? coeff : -coeff);
    });
    return poly;
}

UniPoly relaxed_matching_poly_univariate(const Hypergraph& h) {
    const int n = h.vertex_count();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_relaxed_matching(h, [&](const RelaxedSelection& m) {
        int covered = 0;
        for (const auto& [e, sub] : m.pairs) covered += static_cast<int>(sub.size());
        const Rational w(relaxed_weight(m));
        coeffs[n - covered] += (m.pairs.size() % 2 == 0) ? w : -w;
    });
    return UniPoly(std::move(coeffs));
}

namespace {

// Emits the term of the current kappa-subgraph, then extends it by every
// admissible (edge, subset) pair with a larger edge id. size_weight carries
// the running product of (|S_e| - 1); the Pochhammer degree weights and the
// residual exponents kappa_i - deg(i) are read off at emission.
void kappa_backtrack(const std::vector<std::vector<EdgeSubset>>& subsets, const std::vector<int>& kappa,
                     int from, int chosen, const Integer& size_weight, std::vector<int>& deg,
                     MultiPoly& acc) {
    const int n = static_cast<int>(kappa.size());
    Integer weight = size_weight;
    ExponentVec exp(n);
    for (int i = 0; i < n; ++i) {
        if (deg[i] > 0) weight *= falling_factorial(kappa[i], deg[i]);
        exp[i] = kappa[i] - deg[i];
    }
    acc.add_term(exp, Rational((chosen % 2 == 0) ? weight : -weight));

    for (int e = from; e < static_cast<int>(subsets.size()); ++e) {
        for (const EdgeSubset& sub : subsets[e]) {
            bool fits = true;
            for (int v : sub.vertices)
                if (deg[v] + 1 > kappa[v]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (int v : sub.vertices) ++deg[v];
            kappa_backtrack(subsets, kappa, e + 1, chosen + 1,
                            size_weight * Integer(static_cast<long>(sub.vertices.size()) - 1), deg, acc);
            for (int v : sub.vertices) --deg[v];
        }
    }
}

}  // namespace

MultiPoly relaxed_kappa_subgraph_poly(const Hypergraph& h, const std::vector<int>& kappa) {
    if (static_cast<int>(kappa.size()) != h.vertex_count())
        throw std::invalid_argument("kappa length must equal the vertex count");
    for (int k : kappa)
        if (k < 0) throw std::invalid_argument("kappa entries must be nonnegative");
    const auto subsets = edge_subsets(h);
    MultiPoly acc(h.vertex_count());
    std::vector<int> deg(h.vertex_count(), 0);
    kappa_backtrack(subsets, kappa, 0, 0, Integer(1), deg, acc);
    return acc;
}

DiffOperator edge_map_operator(const Hypergraph& h, int e) {
    if (e < 0 || e >= h.edge_count()) throw std::invalid_argument("edge index out of range");
    const int n = h.vertex_count();
    const auto& edge = h.edge(e);
    const int s = static_cast<int>(edge.size());
    MultiPoly symbol = MultiPoly::constant(n, 1);
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << s); ++pick) {
        const int size = __builtin_popcount(pick);
        if (size < 2) continue;
        ExponentVec exp(n, 0);
        for (int k = 0; k < s; ++k)
            if (pick >> k & 1) exp[edge[k]] = 1;
        symbol.add_term(exp, Rational(-(size - 1)));
    }
    return DiffOperator(std::move(symbol));
}

namespace {

MultiPoly prune_exceeding(const MultiPoly& f, const std::vector<int>& kappa) {
    MultiPoly out(f.nvars());
    for (const auto& [exp, c] : f.terms()) {
        bool keep = true;
        for (size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > kappa[i]) {
                keep = false;
                break;
            }
        if (keep) out.add_term(exp, c);
    }
    return out;
}

}  // namespace

MultiPoly relaxed_poly_via_operators(const Hypergraph& h, const std::vector<int>& kappa) {
    if (static_cast<int>(kappa.size()) != h.vertex_count())
        throw std::invalid_argument("kappa length must equal the vertex count");
    const int n = h.vertex_count();
    // Operator terms with any exponent above kappa annihilate x^kappa, and
    // exponents only grow under composition, so they are pruned eagerly.
    MultiPoly symbol = MultiPoly::constant(n, 1);
    for (int e = 0; e < h.edge_count(); ++e)
        symbol = prune_exceeding(symbol * edge_map_operator(h, e).symbol(), kappa);
    ExponentVec kexp(kappa.begin(), kappa.end());
    return apply_operator(DiffOperator(std::move(symbol)), MultiPoly::monomial(n, kexp, 1));
}

MultiPoly relaxed_poly_via_corollary(const Hypergraph& h) {
    const int n = h.vertex_count();
    const std::vector<int> ones(n, 1);
    MultiPoly symbol = MultiPoly::constant(n, 1);
    for (int e = 0; e < h.edge_count(); ++e) {
        MultiPoly factor = MultiPoly::constant(n, 1);  // 1 - d_e = 1 - sum_{i in e} d_i
        for (int v : h.edge(e)) factor -= MultiPoly::variable(n, v);
        symbol = prune_exceeding(symbol * factor, ones);
    }
    for (int v = 0; v < n; ++v) {
        const MultiPoly unit = MultiPoly::constant(n, 1) + MultiPoly::variable(n, v);
        for (int k = 0; k < h.degree(v); ++k) symbol = prune_exceeding(symbol * unit, ones);
    }
    return apply_operator(DiffOperator(std::move(symbol)), MultiPoly::monomial(n, ExponentVec(n, 1), 1));
}

namespace {

// Embeds a polynomial on a reduced vertex set back into n variables.
MultiPoly lift(const MultiPoly& f, int n, const std::vector<int>& old_of_new) {
    MultiPoly out(n);
    ExponentVec exp(n);
    for (const auto& [e, c] : f.terms()) {
        std::fill(exp.begin(), exp.end(), 0);
        for (size_t k = 0; k < e.size(); ++k) exp[old_of_new[k]] = e[k];
        out.add_term(exp, c);
    }
    return out;
}

}  // namespace

IdentityReport identity_suite(const Hypergraph& h) {
    IdentityReport report;
    const int n = h.vertex_count();
    const MultiPoly eta = relaxed_matching_poly(h);

    auto eta_minus_vertices = [&](const Hypergraph& base, std::vector<int> vertices) {
        VertexDeletion del = delete_vertices_weak(base, std::move(vertices));
        return lift(relaxed_matching_poly(del.graph), n, del.old_of_new);
    };

    // (i) edge recursion.
    for (int e = 0; e < h.edge_count() && report.edge_recursion; ++e) {
        const Hypergraph he = delete_edge(h, e);
        MultiPoly rhs = relaxed_matching_poly(he);
        const auto& edge = h.edge(e);
        const int s = static_cast<int>(edge.size());
        for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << s); ++pick) {
            const int size = __builtin_popcount(pick);
            if (size < 2) continue;
            std::vector<int> subset;
            for (int k = 0; k < s; ++k)
                if (pick >> k & 1) subset.push_back(edge[k]);
            rhs -= eta_minus_vertices(he, subset) * Rational(size - 1);
        }
        if (eta != rhs) {
            report.edge_recursion = false;
            report.counterexample = "edge recursion fails at edge " + std::to_string(e);
        }
    }

    // (ii) vertex recursion.
    for (int i = 0; i < n && report.vertex_recursion; ++i) {
        MultiPoly rhs = MultiPoly::variable(n, i) * eta_minus_vertices(h, {i});
        for (int e : h.incidence(i)) {
            const Hypergraph he = delete_edge(h, e);
            const auto& edge = h.edge(e);
            const int s = static_cast<int>(edge.size());
            for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << s); ++pick) {
                const int size = __builtin_popcount(pick);
                if (size < 2) continue;
                std::vector<int> subset;
                bool has_i = false;
                for (int k = 0; k < s; ++k)
                    if (pick >> k & 1) {
                        subset.push_back(edge[k]);
                        if (edge[k] == i) has_i = true;
                    }
                if (!has_i) continue;
                rhs -= eta_minus_vertices(he, subset) * Rational(size - 1);
            }
        }
        if (eta != rhs) {
            report.vertex_recursion = false;
            report.counterexample = "vertex recursion fails at vertex " + std::to_string(i);
        }
    }

    // (iii) disjoint union multiplicativity, tested with two copies of h.
    {
        const Hypergraph doubled = disjoint_union(h, h);
        std::vector<int> low(n), high(n);
        for (int i = 0; i < n; ++i) {
            low[i] = i;
            high[i] = n + i;
        }
        const MultiPoly expected = lift(eta, 2 * n, low) * lift(eta, 2 * n, high);
        if (relaxed_matching_poly(doubled) != expected) {
            report.multiplicativity = false;
            report.counterexample = "disjoint union is not multiplicative";
        }
    }

    // (iv) derivative identity.
    for (int i = 0; i < n && report.derivative; ++i) {
        if (eta.derivative(i) != eta_minus_vertices(h, {i})) {
            report.derivative = false;
            report.counterexample = "derivative identity fails at vertex " + std::to_string(i);
        }
    }
    return report;
}

}  // namespace matchpoly
