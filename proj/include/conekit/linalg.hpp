#pragma once

#include "conekit/error.hpp"
#include "conekit/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace conekit {

/// A nonzero integer vector whose nonzero entries have gcd 1.
///
/// Orientation is part of the value: `primitive` never flips signs, so two
/// opposite rays stay distinct.
class RayVector {
public:
    RayVector() = default;

    const IntVector& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    RayVector operator-() const {
        RayVector out = *this;
        for (auto& x : out.coords_) x = -x;
        return out;
    }

    friend bool operator==(const RayVector& a, const RayVector& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const RayVector& a, const RayVector& b) {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                            b.coords_.end());
    }

    friend RayVector primitive(IntVector v);

private:
    explicit RayVector(IntVector coords) : coords_(std::move(coords)) {}
    IntVector coords_;
};

/// Divides out the gcd of the entries. Throws DegenerateRay on the zero vector.
inline RayVector primitive(IntVector v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) fail(ErrorCode::degenerate_ray, "zero vector has no primitive form");
    if (g != 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return RayVector(std::move(v));
}

inline RayVector primitive(std::span<const Integer> v) { return primitive(IntVector(v.begin(), v.end())); }

inline bool is_zero(std::span<const Integer> v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) fail(ErrorCode::dimension_mismatch, "dot product of unequal lengths");
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return acc;
}

inline Integer dot(const RayVector& a, std::span<const Integer> b) { return dot(a.coords(), b); }
inline Integer dot(const RayVector& a, const RayVector& b) { return dot(a.coords(), b.coords()); }

/// Dense rectangular integer matrix, row-major. Shape is fixed at construction.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds a matrix from equal-length rows; `cols` fixes the width when `rows` is empty.
    static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) fail(ErrorCode::dimension_mismatch, "ragged matrix rows");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        return m;
    }

    static IntMatrix from_rows(std::span<const RayVector> rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) fail(ErrorCode::dimension_mismatch, "ragged matrix rows");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    IntVector multiply(std::span<const Integer> x) const {
        if (x.size() != cols_) fail(ErrorCode::dimension_mismatch, "matrix-vector shape");
        IntVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    IntVector data_;
};

namespace detail {

struct Echelon {
    std::vector<std::vector<Scalar>> rows; // reduced rows, one per pivot
    std::vector<std::size_t> pivots;       // pivot column of each row
};

/// Reduced row echelon form over the rationals.
inline Echelon reduced_echelon(const IntMatrix& m) {
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);

    Echelon out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < a.size(); ++c) {
        std::size_t piv = lead;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[lead]);
        const Scalar inv = 1 / a[lead][c];
        for (auto& x : a[lead]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == lead || a[r][c] == 0) continue;
            const Scalar f = a[r][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[lead][k];
        }
        out.pivots.push_back(c);
        ++lead;
    }
    a.resize(lead);
    out.rows = std::move(a);
    return out;
}

/// Clears denominators with a positive factor; the direction is unchanged.
inline IntVector clear_denominators(const std::vector<Scalar>& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
    return out;
}

inline void sort_unique(std::vector<RayVector>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

/// Exact rank over the rationals (fraction-free elimination).
inline std::size_t rank(const IntMatrix& m) {
    std::vector<IntVector> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.emplace_back(m.row(r).begin(), m.row(r).end());
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < a.size(); ++c) {
        std::size_t piv = rk;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rk]);
        for (std::size_t r = rk + 1; r < a.size(); ++r) {
            if (a[r][c] == 0) continue;
            const Integer p = a[rk][c];
            const Integer q = a[r][c];
            Integer g = 0;
            for (std::size_t k = c; k < m.cols(); ++k) {
                a[r][k] = p * a[r][k] - q * a[rk][k];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[r][k].get_mpz_t());
            }
            if (g > 1)
                for (std::size_t k = c; k < m.cols(); ++k)
                    mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), g.get_mpz_t());
        }
        ++rk;
    }
    return rk;
}

inline std::size_t rank(std::span<const RayVector> rows, std::size_t cols) {
    return rank(IntMatrix::from_rows(rows, cols));
}

/// Primitive integer basis of {x : M x = 0}; each vector has a positive
/// leading entry and the list is sorted lexicographically.
inline std::vector<RayVector> kernel_basis(const IntMatrix& m) {
    const auto ech = detail::reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<RayVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(m.cols(), Scalar(0));
        x[f] = 1;
        for (std::size_t r = 0; r < ech.rows.size(); ++r) x[ech.pivots[r]] = -ech.rows[r][f];
        auto v = primitive(detail::clear_denominators(x));
        const auto lead = std::find_if(v.begin(), v.end(), [](const Integer& e) { return e != 0; });
        if (*lead < 0) v = -v;
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

inline std::vector<RayVector> kernel_basis(std::span<const RayVector> rows, std::size_t cols) {
    return kernel_basis(IntMatrix::from_rows(rows, cols));
}

/// Canonical basis of the row space: the primitive rows of the reduced echelon
/// form, sorted. Two spanning sets of one subspace give the same result.
inline std::vector<RayVector> canonical_subspace_basis(std::span<const RayVector> rows, std::size_t cols) {
    const auto ech = detail::reduced_echelon(IntMatrix::from_rows(rows, cols));
    std::vector<RayVector> out;
    out.reserve(ech.rows.size());
    for (const auto& r : ech.rows) out.push_back(primitive(detail::clear_denominators(r)));
    std::sort(out.begin(), out.end());
    return out;
}

/// Orthogonal projection of `v` onto the complement of span(`basis`), scaled
/// by a positive factor to an integer vector. `basis` must be independent.
inline IntVector project_off(std::span<const Integer> v, std::span<const RayVector> basis) {
    if (basis.empty()) return IntVector(v.begin(), v.end());
    const std::size_t k = basis.size();
    // Solve (B B^T) y = B v, then v - B^T y.
    std::vector<std::vector<Scalar>> g(k, std::vector<Scalar>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
        g[i][k] = dot(basis[i], v);
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (g[piv][c] == 0) ++piv;
        std::swap(g[piv], g[c]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || g[r][c] == 0) continue;
            const Scalar f = g[r][c] / g[c][c];
            for (std::size_t j = c; j <= k; ++j) g[r][j] -= f * g[c][j];
        }
    }
    std::vector<Scalar> out(v.begin(), v.end());
    for (std::size_t i = 0; i < k; ++i) {
        const Scalar y = g[i][k] / g[i][i];
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= y * basis[i][j];
    }
    return detail::clear_denominators(out);
}

} // namespace conekit
