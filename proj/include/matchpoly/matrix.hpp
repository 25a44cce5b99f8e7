#pragma once

#include <vector>

#include "matchpoly/multipoly.hpp"
#include "matchpoly/rational.hpp"

namespace matchpoly {

// Dense square integer matrix (row major).
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Integer(0)) {}

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int size() const { return n_; }
    Integer& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix& other) const = default;

private:
    int n_;
    std::vector<Integer> a_;
};

// det(xI - A), monic with integer coefficients, computed by the
// division-free Berkowitz algorithm. Exact for any integer matrix.
UniPoly charpoly(const IntMatrix& a);

}  // namespace matchpoly
