#pragma once

#include "conekit/error.hpp"

#include <string>

namespace conekit {

enum class Family {
    collineations,        // n < m
    square_collineations, // n = m
    quadrics,
};

/// A space of complete forms, optionally at an intermediate blow-up stage.
/// stage == 0 means the full space; otherwise 1 <= stage <= n - 1.
struct SpaceSpec {
    Family family = Family::square_collineations;
    int n = 1;
    int m = 1;
    int stage = 0;

    /// Collineations between spaces of dimension n+1 and m+1; requires n <= m.
    static SpaceSpec collineations(int n, int m) {
        if (n < 1 || m < 1) fail(ErrorCode::invalid_spec, "n and m must be positive");
        if (n > m) fail(ErrorCode::invalid_spec, "n must not exceed m (transpose the input)");
        return {n < m ? Family::collineations : Family::square_collineations, n, m, 0};
    }
    static SpaceSpec collineations(int n) { return collineations(n, n); }

    static SpaceSpec quadrics(int n) {
        if (n < 1) fail(ErrorCode::invalid_spec, "n must be positive");
        return {Family::quadrics, n, n, 0};
    }

    SpaceSpec at_stage(int i) const {
        if (i < 1 || i > n - 1) fail(ErrorCode::invalid_spec, "intermediate stage must satisfy 1 <= i <= n-1");
        SpaceSpec s = *this;
        s.stage = i;
        return s;
    }

    bool is_full() const noexcept { return stage == 0; }
    bool is_square() const noexcept { return family != Family::collineations; }

    /// Short name such as X(2,4), X(3), Q(3) or X(3)_1.
    std::string name() const {
        std::string out = family == Family::quadrics ? "Q(" : "X(";
        out += std::to_string(n);
        if (family == Family::collineations) out += "," + std::to_string(m);
        out += ")";
        if (stage) out += "_" + std::to_string(stage);
        return out;
    }

    /// Command-line family key: xnm, xn or qn.
    std::string family_key() const {
        switch (family) {
        case Family::collineations: return "xnm";
        case Family::square_collineations: return "xn";
        case Family::quadrics: return "qn";
        }
        return "";
    }

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

inline int picard_rank(const SpaceSpec& s) {
    if (s.stage) return s.stage + 1;
    return s.family == Family::collineations ? s.n + 1 : s.n;
}

} // namespace conekit
