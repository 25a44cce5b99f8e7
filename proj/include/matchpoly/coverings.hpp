#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "matchpoly/errors.hpp"
#include "matchpoly/graphs.hpp"
#include "matchpoly/matchings.hpp"
#include "matchpoly/multipoly.hpp"

namespace matchpoly {

// Bijection on {0, ..., d-1} stored as its image array.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int d);
    // Unranks within the lexicographic order of all d! image arrays.
    static Permutation from_lex_rank(int d, std::uint64_t rank);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& image() const { return img_; }
    bool is_identity() const;

    Permutation inverse() const;
    // this o other: apply `other` first.
    Permutation compose(const Permutation& other) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

// One permutation per positive edge id of the base graph; negative edges
// implicitly carry the inverses.
struct CoveringLabeling {
    int sheets = 1;
    std::vector<Permutation> sigma;
};

// The space of all (d!)^|E+| labelings of a base graph, streamed in
// mixed-radix lexicographic order (edge 0 is the most significant digit,
// each digit being a lexicographic permutation rank). Labelings are never
// materialized as a list.
class CoveringSpace {
public:
    CoveringSpace(Multigraph base, int d);

    const Multigraph& base() const { return base_; }
    int sheets() const { return d_; }
    Integer total() const;

    // Total as a machine integer; throws BudgetExceeded past the budget.
    std::uint64_t total_within(std::uint64_t budget) const;

    CoveringLabeling labeling(std::uint64_t index) const;

    void for_each(std::uint64_t budget, const std::function<void(const CoveringLabeling&)>& fn) const;

private:
    Multigraph base_;
    int d_;
    std::uint64_t dfact_;
};

// Vertex (v, i) of the covering graph is indexed v*d + i. Each positive
// edge lifts to the d edges {h(e)_k, t(e)_{sigma(k)}}; a loop label's fixed
// points lift to loops and its 2-cycles to parallel double edges.
Multigraph covering_graph(const Multigraph& g, const CoveringLabeling& sigma);

// mu_{d,G}(x): exact average of univariate matching polynomials over all
// d-sheeted coverings; monic of degree n*d.
UniPoly d_matching_poly(const Multigraph& g, int d, std::uint64_t budget = kDefaultBudget,
                        int threads = 1);

// Multivariate variant in n*d variables, complement convention.
MultiPoly d_matching_poly_multivariate(const Multigraph& g, int d,
                                       std::uint64_t budget = kDefaultBudget, int threads = 1);

// Average of matched-convention matching polynomials of the covering graphs.
MultiPoly expected_matched_matching_poly(const Multigraph& g, int d,
                                         std::uint64_t budget = kDefaultBudget, int threads = 1);

// E_sigma[P_{sigma,G}] in product form: one factor per positive edge, each
// an exact sum over S_d (loops range only over non-fixed sheets, so the
// covering loops contribute no factors), divided by (d!)^|E+|.
MultiPoly expected_cover_gen_poly(const Multigraph& g, int d, std::uint64_t budget = kDefaultBudget);

// Exact average of charpoly(A^s) over all 2^|E| signings of a simple graph.
UniPoly godsil_gutman_expected_charpoly(const Multigraph& g, std::uint64_t budget = kDefaultBudget,
                                        int threads = 1);

// charpoly of the covering's standard-representation block, computed as the
// exact quotient charpoly(covering) / charpoly(base); a non-exact division
// raises InternalError since the permutation representation always splits
// off the base adjacency.
UniPoly std_cover_charpoly(const Multigraph& g, const CoveringLabeling& sigma);

// Average charpoly of all d-sheeted covering graphs, exact.
UniPoly expected_cover_charpoly(const Multigraph& g, int d, std::uint64_t budget = kDefaultBudget,
                                int threads = 1);

// Checks E_sigma[charpoly(H_sigma)] == mu_{d-1,G}(x) * charpoly(G) exactly
// (equivalently E[std_cover_charpoly] == mu_{d-1,G}); the expected
// charpoly of a covering depends only on the standard block's dimension d-1.
bool hps_identity_check(const Multigraph& g, int d, std::uint64_t budget = kDefaultBudget,
                        int threads = 1);

// Finite group, either an abstract multiplication table or the closure of a
// set of permutation generators. multiply(i, j) composes g_i o g_j (apply
// g_j first).
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table);
    static FiniteGroup from_permutation_generators(const std::vector<Permutation>& gens,
                                                   int max_order = 120);

    int order() const { return static_cast<int>(table_.size()); }
    int multiply(int i, int j) const;
    int identity() const { return identity_; }
    int inverse(int i) const;

    bool has_permutations() const { return !perms_.empty(); }
    const std::vector<Permutation>& permutations() const { return perms_; }

    // reg(g): element indices under left translation h -> g o h.
    Permutation left_translation(int g) const;

private:
    FiniteGroup() = default;
    void validate();

    std::vector<std::vector<int>> table_;
    std::vector<Permutation> perms_;  // empty for abstract table groups
    int identity_ = 0;
    std::vector<int> inverse_;
};

// Group-element labeling of the positive edges of a base graph.
struct GroupLabeling {
    const FiniteGroup* group = nullptr;
    std::vector<int> assignment;  // one element index per positive edge
};

// Cayley graph of the group for the given generators under left
// translation: one edge {h, g*h} for every generator g and element h, so an
// involution generator contributes parallel edges and the identity
// generator loops. Vertices use the group's element indexing.
Multigraph cayley_from_bouquet(const std::vector<int>& gens, const FiniteGroup& group);

}  // namespace matchpoly
