#pragma once

#include "conekit/error.hpp"
#include "conekit/integer.hpp"
#include "conekit/space.hpp"

#include <string>

namespace conekit {

struct FormulaResult {
    Integer value;
    std::string route;
};

struct OsculatingDegree {
    Integer degree;
    Integer ambient;
};

enum class SecantKind { segre, veronese };

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace detail {
inline void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::invalid_spec, what);
}

inline Integer exact(const Scalar& q, const char* what) {
    if (q.get_den() != 1) fail(ErrorCode::internal, what);
    return q.get_num();
}
} // namespace detail

/// Multiplicity of the h-th exceptional divisor in the divisor of k x k minors.
inline FormulaResult minor_multiplicity(long k, long h) {
    detail::require(k >= 1 && h >= 1, "minor_multiplicity needs k, h >= 1");
    return {Integer(std::max(k - h + 1, 0L)), "minors"};
}

inline FormulaResult secant_codim(SecantKind kind, long n, long m, long h) {
    detail::require(1 <= h && h <= n, "secant_codim needs 1 <= h <= n");
    if (kind == SecantKind::segre) return {Integer((n - h + 1) * (m - h + 1)), "segre"};
    const Integer num = n * n + 3 * n - h * (2 * n - h + 3) + 2;
    if (num % 2 != 0) fail(ErrorCode::internal, "veronese secant codimension is not integral");
    return {Integer(num / 2), "veronese"};
}

/// Dimension of the degree-two part of the Plücker coordinate ring of G(k, n),
/// evaluated by the closed form and by the telescoping product; both must agree.
inline FormulaResult dim_section_space(long n, long k) {
    detail::require(0 <= k && k <= n - 1, "dim_section_space needs 0 <= k <= n-1");
    Scalar closed = Scalar(Integer(binomial(n + 1, k + 1) * binomial(n + 2, k + 1)), Integer(k + 2));
    closed.canonicalize();

    Scalar product = 1;
    for (long j = k + 2; j <= n + 1; ++j) {
        Scalar f(Integer((j + 1) * j), Integer((j - k) * (j - k - 1)));
        f.canonicalize();
        product *= f;
    }
    if (closed != product) fail(ErrorCode::route_mismatch, "section space routes disagree");
    return {detail::exact(closed, "section space dimension is not integral"), "closed-form=product"};
}

/// Weyl dimension of the SL(n+1) irreducible with highest weight 2 * omega_{k+1}.
inline FormulaResult weyl_dim(long n, long k) {
    detail::require(0 <= k && k <= n - 1, "weyl_dim needs 0 <= k <= n-1");
    // lambda_i for i = 1..n, stored at index i - 1
    std::vector<long> lambda(static_cast<std::size_t>(n), 0);
    lambda[static_cast<std::size_t>(k)] = 2;
    Scalar dim = 1;
    for (long i = 1; i <= n + 1; ++i) {
        long partial = 0;
        for (long j = i + 1; j <= n + 1; ++j) {
            partial += lambda[static_cast<std::size_t>(j - 2)];
            Scalar f(Integer(partial + j - i), Integer(j - i));
            f.canonicalize();
            dim *= f;
        }
    }
    return {detail::exact(dim, "weyl dimension is not integral"), "weyl"};
}

/// Number of independent quadratic Plücker relations: dim Sym^2 minus the section space.
inline FormulaResult plucker_relation_count(long n, long k) {
    const Integer b = binomial(n + 1, k + 1);
    const Integer sym2 = b * (b + 1) / 2;
    return {sym2 - dim_section_space(n, k).value, "sym2-minus-sections"};
}

/// Degree of the ambient projective space: nm+n+m for collineations, C(n+2,2)-1 for quadrics.
inline Integer ambient_dimension(const SpaceSpec& s) {
    if (s.family == Family::quadrics) return binomial(s.n + 2, 2) - 1;
    return Integer(s.n * s.m + s.n + s.m);
}

/// Number of Cox ring generators. Intermediate stages keep every minor
/// generator and only the first `stage` exceptional sections.
inline FormulaResult cox_generator_count(const SpaceSpec& s) {
    Integer sum = 0;
    if (s.family == Family::quadrics) {
        for (long k = 0; k <= s.n - 1; ++k) sum += dim_section_space(s.n, k).value;
        if (s.stage) return {sum + 1 + s.stage, "sections+exceptional"};
        return {sum + s.n, "sections+exceptional"};
    }
    for (long k = 1; k <= s.n + 1; ++k) sum += binomial(s.n + 1, k) * binomial(s.m + 1, k);
    if (s.stage) return {sum + s.stage, "minors+exceptional"};
    return {sum + (s.family == Family::collineations ? s.n : s.n - 1), "minors+exceptional"};
}

inline FormulaResult dim_cox(const SpaceSpec& s) {
    return {ambient_dimension(s) + picard_rank(s), "dim+rank"};
}

inline OsculatingDegree osculating_degree(long n, long r) {
    detail::require(0 <= r && r <= n - 1, "osculating_degree needs 0 <= r <= n-1");
    const Integer degree = Integer((r + 1) * (n - r));
    return {degree, binomial(n + 1, r + 1) * (degree + 1)};
}

} // namespace conekit
