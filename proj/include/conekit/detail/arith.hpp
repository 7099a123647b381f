#pragma once

#include "conekit/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace conekit::detail {

/// Raised by the machine-word policy when a result leaves int64 range.
struct Overflow {};

/// Machine-word arithmetic with overflow detection.
struct SmallArith {
    using Int = std::int64_t;

    static Int from(const Integer& x) {
        if (!fits_int64(x)) throw Overflow{};
        return to_int64(x);
    }
    static Integer to_integer(Int x) { return from_int64(x); }

    static Int mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int sub(Int a, Int b) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    // a*x - b*y
    static Int cross(Int a, Int x, Int b, Int y) { return sub(mul(a, x), mul(b, y)); }

    static Int dot(std::span<const Int> u, std::span<const Int> v) {
        Int acc = 0;
        for (std::size_t i = 0; i < u.size(); ++i) acc = add(acc, mul(u[i], v[i]));
        return acc;
    }
    static int sign(Int x) { return (x > 0) - (x < 0); }

    /// Divides `v` by the gcd of its entries, keeping orientation.
    static void make_primitive(std::span<Int> v) {
        std::uint64_t g = 0;
        for (Int x : v) {
            g = std::gcd(g, magnitude(x));
            if (g == 1) return;
        }
        if (g > 1)
            for (Int& x : v) x /= static_cast<Int>(g);
    }

private:
    static std::uint64_t magnitude(Int x) {
        return x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
    }
};

/// GMP arithmetic; never overflows.
struct BigArith {
    using Int = Integer;

    static Int from(const Integer& x) { return x; }
    static Integer to_integer(const Int& x) { return x; }

    static Int cross(const Int& a, const Int& x, const Int& b, const Int& y) {
        Int r;
        mpz_mul(r.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
        mpz_submul(r.get_mpz_t(), b.get_mpz_t(), y.get_mpz_t());
        return r;
    }
    static Int dot(std::span<const Int> u, std::span<const Int> v) {
        Int acc = 0;
        for (std::size_t i = 0; i < u.size(); ++i) mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), v[i].get_mpz_t());
        return acc;
    }
    static int sign(const Int& x) { return sgn(x); }

    static void make_primitive(std::span<Int> v) {
        Int g = 0;
        for (const Int& x : v) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return;
        }
        if (g > 1)
            for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
};

/// Incremental rank computation: rows are fed one at a time and reduced
/// against the pivots collected so far (fraction-free, gcd-normalized).
template <class Arith>
class RankAccumulator {
public:
    using Int = typename Arith::Int;

    explicit RankAccumulator(std::size_t width) : width_(width) {}

    void reset() {
        rank_ = 0;
        pivot_cols_.clear();
    }

    std::size_t rank() const noexcept { return rank_; }

    /// Returns true when the row increased the rank.
    bool add(std::span<const Int> row) {
        if (buffer_.size() < (rank_ + 1) * width_) buffer_.resize((rank_ + 1) * width_);
        std::span<Int> x(buffer_.data() + rank_ * width_, width_);
        std::copy(row.begin(), row.end(), x.begin());
        for (std::size_t p = 0; p < rank_; ++p) {
            const std::size_t c = pivot_cols_[p];
            if (Arith::sign(x[c]) == 0) continue;
            std::span<const Int> piv(buffer_.data() + p * width_, width_);
            const Int a = piv[c];
            const Int b = x[c];
            for (std::size_t k = 0; k < width_; ++k) x[k] = Arith::cross(a, x[k], b, piv[k]);
            Arith::make_primitive(x);
        }
        std::size_t c = 0;
        while (c < width_ && Arith::sign(x[c]) == 0) ++c;
        if (c == width_) return false;
        Arith::make_primitive(x);
        pivot_cols_.push_back(c);
        ++rank_;
        return true;
    }

private:
    std::size_t width_;
    std::size_t rank_ = 0;
    std::vector<Int> buffer_;
    std::vector<std::size_t> pivot_cols_;
};

} // namespace conekit::detail
