#include "matchpoly/coverings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "matchpoly/parallel.hpp"
#include "matchpoly/rng.hpp"

namespace matchpoly {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("permutation image is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_lex_rank(int d, std::uint64_t rank) {
    std::vector<std::uint64_t> fact(d, 1);
    for (int i = 1; i < d; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> pool(d);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> img;
    img.reserve(d);
    for (int i = d - 1; i >= 0; --i) {
        const std::uint64_t f = fact[i];
        const int pick = static_cast<int>(rank / f);
        rank %= f;
        img.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
    }
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[i] = img_[other.img_[i]];
    return Permutation(std::move(img));
}

namespace {

std::uint64_t factorial_u64(int d) {
    std::uint64_t f = 1;
    for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

CoveringSpace::CoveringSpace(Multigraph base, int d) : base_(std::move(base)), d_(d) {
    if (d < 1) throw std::invalid_argument("sheet count must be at least 1");
    if (d > 20) throw std::invalid_argument("sheet count too large for exact enumeration");
    dfact_ = factorial_u64(d);
}

Integer CoveringSpace::total() const {
    return int_pow(Integer(static_cast<unsigned long>(dfact_)),
                   static_cast<unsigned long>(base_.edge_count()));
}

std::uint64_t CoveringSpace::total_within(std::uint64_t budget) const {
    const Integer n = total();
    if (n > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("covering enumeration needs (d!)^|E+| = " + decimal(n) +
                                 " labelings, over budget " + std::to_string(budget),
                             n, budget);
    return n.get_ui();
}

CoveringLabeling CoveringSpace::labeling(std::uint64_t index) const {
    const int m = base_.edge_count();
    CoveringLabeling lab;
    lab.sheets = d_;
    std::vector<std::uint64_t> digits(m);
    for (int e = m - 1; e >= 0; --e) {
        digits[e] = index % dfact_;
        index /= dfact_;
    }
    lab.sigma.reserve(m);
    for (int e = 0; e < m; ++e) lab.sigma.push_back(Permutation::from_lex_rank(d_, digits[e]));
    return lab;
}

void CoveringSpace::for_each(std::uint64_t budget,
                             const std::function<void(const CoveringLabeling&)>& fn) const {
    const std::uint64_t n = total_within(budget);
    for (std::uint64_t i = 0; i < n; ++i) fn(labeling(i));
}

Multigraph covering_graph(const Multigraph& g, const CoveringLabeling& sigma) {
    const int d = sigma.sheets;
    if (static_cast<int>(sigma.sigma.size()) != g.edge_count())
        throw std::invalid_argument("labeling does not match the base graph's edge count");
    for (const auto& p : sigma.sigma)
        if (p.degree() != d) throw std::invalid_argument("labeling permutation degree mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) * d);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& base = g.edge(e);
        const Permutation& p = sigma.sigma[e];
        for (int k = 0; k < d; ++k) edges.emplace_back(base.u * d + k, base.v * d + p(k));
    }
    return Multigraph(g.vertex_count() * d, edges);
}

namespace {

// Streams a contiguous index range of the covering space and folds exact
// partial sums; merging in range order keeps results bit-identical for any
// partitioning.
template <class T, class PerCover>
T fold_covering_range(const CoveringSpace& space, std::uint64_t count, int threads, T zero,
                      PerCover per_cover) {
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        T acc = zero;
        for (std::uint64_t i = begin; i < end; ++i) acc += per_cover(space.labeling(i));
        return acc;
    };
    return partitioned_fold<T>(count, threads, work, [](T a, const T& b) { return a += b; });
}

}  // namespace

UniPoly d_matching_poly(const Multigraph& g, int d, std::uint64_t budget, int threads) {
    CoveringSpace space(g, d);
    const std::uint64_t n = space.total_within(budget);
    UniPoly sum = fold_covering_range<UniPoly>(
        space, n, threads, UniPoly(),
        [&](const CoveringLabeling& lab) { return matching_poly_univariate(covering_graph(g, lab)); });
    return sum / Rational(static_cast<long>(n));
}

MultiPoly d_matching_poly_multivariate(const Multigraph& g, int d, std::uint64_t budget, int threads) {
    CoveringSpace space(g, d);
    const std::uint64_t n = space.total_within(budget);
    MultiPoly sum = fold_covering_range<MultiPoly>(
        space, n, threads, MultiPoly(g.vertex_count() * d),
        [&](const CoveringLabeling& lab) { return matching_poly_multivariate(covering_graph(g, lab)); });
    return sum / Rational(static_cast<long>(n));
}

MultiPoly expected_matched_matching_poly(const Multigraph& g, int d, std::uint64_t budget, int threads) {
    CoveringSpace space(g, d);
    const std::uint64_t n = space.total_within(budget);
    MultiPoly sum = fold_covering_range<MultiPoly>(
        space, n, threads, MultiPoly(g.vertex_count() * d),
        [&](const CoveringLabeling& lab) { return matching_poly_matched(covering_graph(g, lab)); });
    return sum / Rational(static_cast<long>(n));
}

MultiPoly expected_cover_gen_poly(const Multigraph& g, int d, std::uint64_t budget) {
    CoveringSpace space(g, d);
    space.total_within(budget);
    const int nd = g.vertex_count() * d;
    const std::uint64_t dfact = factorial_u64(d);

    MultiPoly result = MultiPoly::constant(nd, 1);
    ExponentVec exp(nd);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        MultiPoly factor(nd);
        for (std::uint64_t r = 0; r < dfact; ++r) {
            const Permutation p = Permutation::from_lex_rank(d, r);
            // Sheets contributing a binomial: all k for an ordinary edge,
            // only non-fixed k for a loop.
            std::vector<std::pair<int, int>> vars;
            for (int k = 0; k < d; ++k) {
                if (edge.u == edge.v && p(k) == k) continue;
                vars.emplace_back(edge.u * d + k, edge.v * d + p(k));
            }
            const int t = static_cast<int>(vars.size());
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
                std::fill(exp.begin(), exp.end(), 0);
                int bits = 0;
                for (int k = 0; k < t; ++k)
                    if (mask >> k & 1) {
                        ++bits;
                        exp[vars[k].first] += 1;
                        exp[vars[k].second] += 1;
                    }
                factor.add_term(exp, (bits % 2 == 0) ? Rational(1) : Rational(-1));
            }
        }
        result *= factor;
    }
    const Integer total = int_pow(Integer(static_cast<unsigned long>(dfact)),
                                  static_cast<unsigned long>(g.edge_count()));
    return result / Rational(total);
}

UniPoly godsil_gutman_expected_charpoly(const Multigraph& g, std::uint64_t budget, int threads) {
    if (!g.is_simple()) throw std::invalid_argument("Godsil-Gutman signings need a simple graph");
    const int m = g.edge_count();
    if (m >= 63) throw std::invalid_argument("too many edges for signing enumeration");
    const std::uint64_t total = std::uint64_t{1} << m;
    if (total > budget)
        throw BudgetExceeded("signing enumeration needs 2^|E| = " + std::to_string(total) +
                                 " matrices, over budget " + std::to_string(budget),
                             Integer(static_cast<unsigned long>(total)), budget);
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        UniPoly acc;
        IntMatrix a(g.vertex_count());
        for (std::uint64_t s = begin; s < end; ++s) {
            for (int i = 0; i < g.vertex_count(); ++i)
                for (int j = 0; j < g.vertex_count(); ++j) a.at(i, j) = 0;
            for (int e = 0; e < m; ++e) {
                const int v = (s >> e & 1) ? -1 : 1;
                a.at(g.edge(e).u, g.edge(e).v) = v;
                a.at(g.edge(e).v, g.edge(e).u) = v;
            }
            acc += charpoly(a);
        }
        return acc;
    };
    UniPoly sum = partitioned_fold<UniPoly>(total, threads, work,
                                            [](UniPoly a, const UniPoly& b) { return a += b; });
    return sum / Rational(Integer(static_cast<unsigned long>(total)));
}

UniPoly std_cover_charpoly(const Multigraph& g, const CoveringLabeling& sigma) {
    const UniPoly cover = charpoly(adjacency_matrix(covering_graph(g, sigma)));
    const UniPoly base = charpoly(adjacency_matrix(g));
    return cover.divide_exact(base);
}

UniPoly expected_cover_charpoly(const Multigraph& g, int d, std::uint64_t budget, int threads) {
    CoveringSpace space(g, d);
    const std::uint64_t n = space.total_within(budget);
    UniPoly sum = fold_covering_range<UniPoly>(space, n, threads, UniPoly(),
                                               [&](const CoveringLabeling& lab) {
                                                   return charpoly(adjacency_matrix(covering_graph(g, lab)));
                                               });
    return sum / Rational(static_cast<long>(n));
}

bool hps_identity_check(const Multigraph& g, int d, std::uint64_t budget, int threads) {
    const UniPoly expected = expected_cover_charpoly(g, d, budget, threads);
    const UniPoly mu = (d >= 2) ? d_matching_poly(g, d - 1, budget, threads) : UniPoly::constant(1);
    return expected == mu * charpoly(adjacency_matrix(g));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    FiniteGroup grp;
    grp.table_ = std::move(table);
    grp.validate();
    return grp;
}

void FiniteGroup::validate() {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("multiplication table entry out of range");
    }
    // Identity: exact.
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (table_[e][j] != j || table_[j][e] != j) {
                ok = false;
                break;
            }
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("multiplication table has no identity element");
    // Inverses: exact.
    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table_[i][j] == identity_ && table_[j][i] == identity_) {
                inverse_[i] = j;
                break;
            }
        if (inverse_[i] < 0) throw std::invalid_argument("multiplication table element lacks an inverse");
    }
    // Associativity: sampled (full check is cubic and the table sizes here
    // are small, but the contract asks only for a sample).
    SeededRng rng(0x9e3779b97f4a7c15ULL);
    const int samples = std::min(512, n * n * n);
    for (int s = 0; s < samples; ++s) {
        const int a = static_cast<int>(rng.uniform_int(0, n - 1));
        const int b = static_cast<int>(rng.uniform_int(0, n - 1));
        const int c = static_cast<int>(rng.uniform_int(0, n - 1));
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("multiplication table is not associative");
    }
}

FiniteGroup FiniteGroup::from_permutation_generators(const std::vector<Permutation>& gens, int max_order) {
    if (gens.empty()) throw std::invalid_argument("no generators given");
    const int deg = gens.front().degree();
    for (const auto& p : gens)
        if (p.degree() != deg) throw std::invalid_argument("generator degrees differ");

    std::vector<Permutation> elements{Permutation::identity(deg)};
    std::map<std::vector<int>, int> index{{elements[0].image(), 0}};
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& gen : gens) {
            Permutation next = gen.compose(elements[head]);
            if (index.emplace(next.image(), static_cast<int>(elements.size())).second) {
                elements.push_back(std::move(next));
                if (static_cast<int>(elements.size()) > max_order)
                    throw std::invalid_argument("group order exceeds cap " + std::to_string(max_order));
            }
        }
    }
    const int n = static_cast<int>(elements.size());
    FiniteGroup grp;
    grp.table_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) grp.table_[i][j] = index.at(elements[i].compose(elements[j]).image());
    grp.perms_ = std::move(elements);
    grp.validate();
    return grp;
}

int FiniteGroup::multiply(int i, int j) const {
    if (i < 0 || i >= order() || j < 0 || j >= order())
        throw std::invalid_argument("group element index out of range");
    return table_[i][j];
}

int FiniteGroup::inverse(int i) const {
    if (i < 0 || i >= order()) throw std::invalid_argument("group element index out of range");
    return inverse_[i];
}

Permutation FiniteGroup::left_translation(int g) const {
    std::vector<int> img(order());
    for (int h = 0; h < order(); ++h) img[h] = multiply(g, h);
    return Permutation(std::move(img));
}

Multigraph cayley_from_bouquet(const std::vector<int>& gens, const FiniteGroup& group) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(gens.size() * group.order());
    for (int g : gens) {
        if (g < 0 || g >= group.order()) throw std::invalid_argument("generator index not in group");
        for (int h = 0; h < group.order(); ++h) edges.emplace_back(h, group.multiply(g, h));
    }
    return Multigraph(group.order(), edges);
}

}  // namespace matchpoly
