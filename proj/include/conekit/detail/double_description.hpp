#pragma once

#include "conekit/detail/arith.hpp"
#include "conekit/error.hpp"
#include "conekit/linalg.hpp"

#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

namespace conekit::detail {

/// Extreme rays of {x : <a, x> >= 0 for all a} together with the set of
/// constraints tight at each ray (bit k set when constraint k vanishes).
struct DDResult {
    std::vector<IntVector> rays;
    std::vector<std::vector<std::uint64_t>> zero_sets;
};

template <class Arith>
class DoubleDescription {
public:
    using Int = typename Arith::Int;

    DoubleDescription(std::size_t dim, std::span<const IntVector> rows, unsigned threads)
        : d_(dim), m_(rows.size()), words_((rows.size() + 63) / 64), threads_(threads ? threads : 1) {
        a_.reserve(m_ * d_);
        for (const IntVector& r : rows)
            for (const Integer& x : r) a_.push_back(Arith::from(x));
        source_ = rows;
    }

    DDResult run() {
        initial_simplex();
        for (std::size_t k = 0; k < m_; ++k)
            if (!in_basis_[k]) add_constraint(k);
        DDResult out;
        out.rays.reserve(count_);
        for (std::size_t i = 0; i < count_; ++i) {
            IntVector v(d_);
            for (std::size_t j = 0; j < d_; ++j) v[j] = Arith::to_integer(coords_[i * d_ + j]);
            out.rays.push_back(std::move(v));
            out.zero_sets.emplace_back(zeros_.begin() + i * words_, zeros_.begin() + (i + 1) * words_);
        }
        return out;
    }

private:
    struct Batch {
        std::vector<Int> coords;
        std::vector<std::uint64_t> zeros;
        std::size_t count = 0;
    };

    std::span<const Int> row(std::size_t k) const { return {a_.data() + k * d_, d_}; }
    std::span<const Int> ray(std::size_t i) const { return {coords_.data() + i * d_, d_}; }
    const std::uint64_t* zeros_of(std::size_t i) const { return zeros_.data() + i * words_; }

    void initial_simplex() {
        in_basis_.assign(m_, false);
        std::vector<std::size_t> basis;
        RankAccumulator<BigArith> acc(d_);
        for (std::size_t k = 0; k < m_ && basis.size() < d_; ++k)
            if (acc.add(source_[k])) basis.push_back(k);
        if (basis.size() != d_) fail(ErrorCode::internal, "double description needs a full-rank system");
        for (std::size_t k : basis) in_basis_[k] = true;

        coords_.clear();
        zeros_.assign(d_ * words_, 0);
        for (std::size_t i = 0; i < d_; ++i) {
            IntMatrix others(d_ - 1, d_);
            std::size_t r = 0;
            for (std::size_t j = 0; j < d_; ++j) {
                if (j == i) continue;
                for (std::size_t c = 0; c < d_; ++c) others(r, c) = source_[basis[j]][c];
                ++r;
            }
            IntVector v = kernel_basis(others).front().coords();
            if (dot(source_[basis[i]], v) < 0)
                for (Integer& x : v) x = -x;
            for (const Integer& x : v) coords_.push_back(Arith::from(x));
            for (std::size_t j = 0; j < d_; ++j)
                if (j != i) set_bit(zeros_.data() + i * words_, basis[j]);
        }
        count_ = d_;
    }

    static void set_bit(std::uint64_t* z, std::size_t k) { z[k / 64] |= std::uint64_t{1} << (k % 64); }

    // Rays p and q are adjacent iff the processed constraints tight at both have rank d - 2.
    bool adjacent(const std::uint64_t* zp, const std::uint64_t* zq, RankAccumulator<Arith>& acc,
                  std::vector<std::uint64_t>& common) const {
        const std::size_t need = d_ - 2;
        std::size_t shared = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            common[w] = zp[w] & zq[w];
            shared += static_cast<std::size_t>(std::popcount(common[w]));
        }
        if (shared < need) return false;
        if (need == 0) return true;
        acc.reset();
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = common[w];
            while (bits) {
                const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (acc.add(row(k)) && acc.rank() == need) return true;
                if (need - acc.rank() > --shared) return false;
            }
        }
        return false;
    }

    void combine(std::size_t k, const std::vector<std::size_t>& pos, const std::vector<std::size_t>& neg,
                 const std::vector<Int>& value, std::size_t begin, std::size_t end, Batch& out) const {
        RankAccumulator<Arith> acc(d_);
        std::vector<std::uint64_t> common(words_);
        std::vector<Int> fresh(d_);
        for (std::size_t a = begin; a < end; ++a) {
            const std::size_t p = pos[a];
            for (std::size_t q : neg) {
                if (!adjacent(zeros_of(p), zeros_of(q), acc, common)) continue;
                auto rp = ray(p);
                auto rq = ray(q);
                for (std::size_t j = 0; j < d_; ++j) fresh[j] = Arith::cross(value[p], rq[j], value[q], rp[j]);
                Arith::make_primitive(fresh);
                out.coords.insert(out.coords.end(), fresh.begin(), fresh.end());
                const std::size_t base = out.zeros.size();
                out.zeros.insert(out.zeros.end(), common.begin(), common.end());
                set_bit(out.zeros.data() + base, k);
                ++out.count;
            }
        }
    }

    void add_constraint(std::size_t k) {
        std::vector<Int> value(count_);
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < count_; ++i) {
            value[i] = Arith::dot(row(k), ray(i));
            const int s = Arith::sign(value[i]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i : zero) set_bit(zeros_.data() + i * words_, k);
            return;
        }

        std::vector<Batch> batches;
        const std::size_t work = pos.size() * neg.size();
        const std::size_t nthreads = std::min<std::size_t>({threads_, pos.size(), work / 4096 + 1});
        if (nthreads <= 1) {
            batches.resize(1);
            combine(k, pos, neg, value, 0, pos.size(), batches[0]);
        } else {
            // Small chunks interleaved over workers; merging in chunk order keeps output independent of the schedule.
            const std::size_t chunks = std::min(pos.size(), nthreads * 8);
            batches.resize(chunks);
            std::vector<std::exception_ptr> errors(nthreads);
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t c = t; c < chunks; c += nthreads)
                            combine(k, pos, neg, value, pos.size() * c / chunks, pos.size() * (c + 1) / chunks,
                                    batches[c]);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }

        std::vector<Int> coords;
        std::vector<std::uint64_t> zeros;
        std::size_t total = pos.size() + zero.size();
        for (const Batch& b : batches) total += b.count;
        coords.reserve(total * d_);
        zeros.reserve(total * words_);
        auto keep = [&](std::size_t i, bool tight) {
            auto r = ray(i);
            coords.insert(coords.end(), r.begin(), r.end());
            const std::size_t base = zeros.size();
            zeros.insert(zeros.end(), zeros_of(i), zeros_of(i) + words_);
            if (tight) set_bit(zeros.data() + base, k);
        };
        for (std::size_t i : pos) keep(i, false);
        for (std::size_t i : zero) keep(i, true);
        for (const Batch& b : batches) {
            coords.insert(coords.end(), b.coords.begin(), b.coords.end());
            zeros.insert(zeros.end(), b.zeros.begin(), b.zeros.end());
        }
        coords_ = std::move(coords);
        zeros_ = std::move(zeros);
        count_ = total;
    }

    std::size_t d_, m_, words_;
    std::size_t threads_;
    std::vector<Int> a_;
    std::span<const IntVector> source_;
    std::vector<bool> in_basis_;
    std::vector<Int> coords_;
    std::vector<std::uint64_t> zeros_;
    std::size_t count_ = 0;
};

/// Runs the machine-word kernel first and repeats with GMP if anything overflows.
/// `rows` must have rank `dim`; they are processed in the order given.
inline DDResult double_description(std::size_t dim, std::span<const IntVector> rows, unsigned threads) {
    try {
        return DoubleDescription<SmallArith>(dim, rows, threads).run();
    } catch (const Overflow&) {
        return DoubleDescription<BigArith>(dim, rows, threads).run();
    }
}

} // namespace conekit::detail
