#include <cstdint>
#include <stdexcept>
#include <vector>

#include "matchpoly/matrix.hpp"

namespace matchpoly {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix s(a.n_);
    for (size_t k = 0; k < a.a_.size(); ++k) s.a_[k] = a.a_[k] + b.a_[k];
    return s;
}

namespace {

// Berkowitz iteration over leading principal submatrices. The vector v holds
// the charpoly coefficients of the current r x r leading block, highest
// degree first; extending by row R, column C and corner d applies the
// Toeplitz recurrence
//   v'(k) = v(k) - d*v(k-1) - sum_{j>=1} (R N^{j-1} C) * v(k-j-1).
template <typename Scalar, typename Fetch>
std::vector<Scalar> berkowitz(int n, Fetch entry) {
    std::vector<Scalar> v{Scalar(1)};
    std::vector<Scalar> w(n), wn(n), s(n);
    for (int r = 1; r <= n; ++r) {
        const int m = r - 1;  // leading block size
        // s[j] = R N^j C for j = 0..m-1 with R/C the new row/column.
        for (int i = 0; i < m; ++i) w[i] = entry(i, m);
        for (int j = 0; j < m; ++j) {
            Scalar dot = 0;
            for (int i = 0; i < m; ++i) dot += entry(m, i) * w[i];
            s[j] = dot;
            if (j + 1 < m) {
                for (int i = 0; i < m; ++i) {
                    Scalar acc = 0;
                    for (int t = 0; t < m; ++t) acc += entry(i, t) * w[t];
                    wn[i] = acc;
                }
                std::swap(w, wn);
            }
        }
        const Scalar d = entry(m, m);
        std::vector<Scalar> next(r + 1);
        for (int k = 0; k <= r; ++k) {
            Scalar acc = (k < static_cast<int>(v.size())) ? v[k] : Scalar(0);
            if (k >= 1) acc -= d * v[k - 1];
            for (int j = 1; j <= k - 1 && j <= m; ++j) acc -= s[j - 1] * v[k - j - 1];
            next[k] = acc;
        }
        v = std::move(next);
    }
    return v;
}

UniPoly coeffs_to_unipoly_desc(const std::vector<Integer>& desc) {
    std::vector<Rational> asc(desc.size());
    for (size_t k = 0; k < desc.size(); ++k) asc[desc.size() - 1 - k] = Rational(desc[k]);
    return UniPoly(std::move(asc));
}

#ifdef __SIZEOF_INT128__
using Wide = __int128;

// Every Berkowitz intermediate is bounded by (n+2) * 2^n * B^(2n+1) where B
// is the max column abs-sum (clamped to >= 2): charpoly coefficients of
// principal blocks are elementary symmetric functions of eigenvalues with
// |lambda| <= B, the iterated vectors N^j C have entries <= B^(j+1), and the
// recurrence adds at most n+2 such products. The fast path runs only when a
// strictly larger bound fits well inside signed 128 bits.
bool fast_path_safe(const IntMatrix& a) {
    const int n = a.size();
    if (n == 0) return true;
    Integer b = 2;
    for (int j = 0; j < n; ++j) {
        Integer col = 0;
        for (int i = 0; i < n; ++i) col += abs(a.at(i, j));
        if (col > b) b = col;
    }
    const Integer bound = Integer(n + 2) * int_pow(Integer(2), n) * int_pow(b, 2 * n + 4);
    return bound < int_pow(Integer(2), 124);
}
#endif

}  // namespace

UniPoly charpoly(const IntMatrix& a) {
    const int n = a.size();
    if (n == 0) return UniPoly::constant(1);
#ifdef __SIZEOF_INT128__
    if (fast_path_safe(a)) {
        std::vector<Wide> flat(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = a.at(i, j).get_si();
        auto v = berkowitz<Wide>(n, [&](int i, int j) { return flat[static_cast<size_t>(i) * n + j]; });
        std::vector<Integer> desc(v.size());
        for (size_t k = 0; k < v.size(); ++k) {
            const Wide x = v[k];
            const bool neg = x < 0;
            unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
            Integer z = static_cast<unsigned long>(mag >> 64);
            z <<= 64;
            z += static_cast<unsigned long>(mag);
            desc[k] = neg ? Integer(-z) : z;
        }
        if (sign(desc[0]) < 0)
            for (auto& c : desc) c = -c;
        return coeffs_to_unipoly_desc(desc);
    }
#endif
    auto v = berkowitz<Integer>(n, [&](int i, int j) -> const Integer& { return a.at(i, j); });
    if (sign(v[0]) < 0)
        for (auto& c : v) c = -c;
    return coeffs_to_unipoly_desc(v);
}

}  // namespace matchpoly
