#pragma once

#include "conekit/cone.hpp"
#include "conekit/formulas.hpp"
#include "conekit/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conekit {

/// Divisor class in the basis (H, E_1, ..., E_{rho-1}). Coordinates are not
/// reduced: the anticanonical class (6,-2) is not a primitive vector.
struct DivisorClass {
    IntVector coords;
    std::string label;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coords == b.coords; }
};

/// Curve class in the basis (l, e_1, ..., e_{rho-1}).
struct CurveClass {
    IntVector coords;
};

struct GradingColumn {
    DivisorClass degree;
    Integer multiplicity;
};

struct GradingMatrix {
    SpaceSpec space;
    std::vector<GradingColumn> columns;

    Integer total() const {
        Integer t = 0;
        for (const auto& c : columns) t += c.multiplicity;
        return t;
    }
};

inline std::vector<std::string> divisor_basis(const SpaceSpec& s) {
    std::vector<std::string> out{"H"};
    for (int h = 1; h < picard_rank(s); ++h) out.push_back("E_" + std::to_string(h));
    return out;
}

inline std::vector<std::string> curve_basis(const SpaceSpec& s) {
    std::vector<std::string> out{"l"};
    for (int h = 1; h < picard_rank(s); ++h) out.push_back("e_" + std::to_string(h));
    return out;
}

/// k H - sum_h (k - h) E_h, cut to the Picard rank of the space.
inline DivisorClass divisor_D(const SpaceSpec& s, int k) {
    if (k < 1 || k > s.n + 1) fail(ErrorCode::invalid_spec, "divisor_D index out of range");
    const int rho = picard_rank(s);
    IntVector v(static_cast<std::size_t>(rho), 0);
    v[0] = k;
    for (int h = 1; h < rho; ++h) v[static_cast<std::size_t>(h)] = -std::max(k - h, 0);
    return {std::move(v), "D_" + std::to_string(k)};
}

/// Exceptional divisor E_h. For a square full space the last one is the
/// strict transform of the determinant hypersurface, which equals D_{n+1}.
inline DivisorClass divisor_E(const SpaceSpec& s, int h) {
    const int top = s.stage ? s.stage : s.n;
    if (h < 1 || h > top) fail(ErrorCode::invalid_spec, "divisor_E index out of range");
    const int rho = picard_rank(s);
    const std::string label = "E_" + std::to_string(h);
    if (h == rho) return {divisor_D(s, s.n + 1).coords, label};
    IntVector v(static_cast<std::size_t>(rho), 0);
    v[static_cast<std::size_t>(h)] = 1;
    return {std::move(v), label};
}

/// The canonical class K; callers negate it for -K.
inline DivisorClass canonical_class(const SpaceSpec& s) {
    const int rho = picard_rank(s);
    IntVector minus_k(static_cast<std::size_t>(rho), 0);
    minus_k[0] = ambient_dimension(s) + 1;
    for (int h = 1; h < rho; ++h) {
        const Integer codim = s.family == Family::quadrics ? secant_codim(SecantKind::veronese, s.n, s.n, h).value
                                                           : secant_codim(SecantKind::segre, s.n, s.m, h).value;
        minus_k[static_cast<std::size_t>(h)] = -(codim - 1);
    }
    for (auto& x : minus_k) x = -x;
    return {std::move(minus_k), "K"};
}

inline DivisorClass anticanonical_class(const SpaceSpec& s) {
    DivisorClass k = canonical_class(s);
    for (auto& x : k.coords) x = -x;
    k.label = "-K";
    return k;
}

/// Number of sections of D_k among the Cox generators: pairs of k-subsets
/// for collineations, dim H_k for quadrics.
inline Integer section_multiplicity(const SpaceSpec& s, int k) {
    if (s.family == Family::quadrics) return dim_section_space(s.n, k - 1).value;
    if (k == s.n + 1 && s.is_square()) return 1;
    return binomial(s.n + 1, k) * binomial(s.m + 1, k);
}

inline GradingMatrix grading_matrix(const SpaceSpec& s) {
    GradingMatrix g{s, {}};
    const int rho = picard_rank(s);
    const bool square_full = s.is_full() && s.is_square();
    const int last_d = square_full ? s.n : s.n + 1;
    for (int k = 1; k <= last_d; ++k) {
        if (s.family == Family::quadrics && k == s.n + 1) {
            g.columns.push_back({divisor_D(s, k), 1});
            continue;
        }
        g.columns.push_back({divisor_D(s, k), section_multiplicity(s, k)});
    }
    if (square_full) {
        // D_{n+1} is stored once, as E_n.
        g.columns.push_back({divisor_E(s, s.n), 1});
    }
    for (int h = 1; h < rho; ++h) g.columns.push_back({divisor_E(s, h), 1});
    return g;
}

namespace detail {
inline void require_rank2(const SpaceSpec& s) {
    if (picard_rank(s) < 2) fail(ErrorCode::degenerate_space, s.name() + " has Picard rank 1");
}

inline Cone cone_on(const SpaceSpec& s, const std::vector<DivisorClass>& gens) {
    std::vector<IntVector> v;
    for (const auto& g : gens) v.push_back(g.coords);
    return cone_from_rays(static_cast<std::size_t>(picard_rank(s)), std::span<const IntVector>(v));
}

/// J = diag(1, -1, ..., -1) turns the intersection pairing into the dot product.
inline IntVector flip_tail(IntVector v) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
    return v;
}

inline Cone flip_tail(const Cone& c) {
    std::vector<IntVector> rays;
    for (const auto& r : c.rays()) rays.push_back(flip_tail(r.coords()));
    return cone_from_rays(c.ambient_rank(), std::span<const IntVector>(rays));
}
} // namespace detail

inline Cone effective_cone(const SpaceSpec& s) {
    detail::require_rank2(s);
    std::vector<DivisorClass> gens;
    const int top = s.stage ? s.stage : s.n;
    for (int h = 1; h <= top; ++h) gens.push_back(divisor_E(s, h));
    if (s.stage || s.family == Family::collineations) gens.push_back(divisor_D(s, s.n + 1));
    return detail::cone_on(s, gens);
}

inline Cone nef_cone(const SpaceSpec& s) {
    detail::require_rank2(s);
    const int top = s.stage ? s.stage + 1 : (s.family == Family::collineations ? s.n + 1 : s.n);
    std::vector<DivisorClass> gens;
    for (int k = 1; k <= top; ++k) gens.push_back(divisor_D(s, k));
    return detail::cone_on(s, gens);
}

/// Omit-one intersection over the distinct grading columns. Dropping one copy
/// of a column that has multiplicity >= 2 leaves the hull unchanged, so only
/// the multiplicity-one columns contribute cones besides Eff itself.
inline Cone movable_cone(const SpaceSpec& s) {
    detail::require_rank2(s);
    const auto g = grading_matrix(s);
    const std::size_t d = static_cast<std::size_t>(picard_rank(s));
    std::vector<Cone> pieces{effective_cone(s)};
    for (std::size_t skip = 0; skip < g.columns.size(); ++skip) {
        if (g.columns[skip].multiplicity != 1) continue;
        std::vector<IntVector> rest;
        for (std::size_t j = 0; j < g.columns.size(); ++j)
            if (j != skip) rest.push_back(g.columns[j].degree.coords);
        pieces.push_back(cone_from_rays(d, std::span<const IntVector>(rest)));
    }
    return intersect_all(pieces);
}

/// Literal omit-one computation over every Cox generator, copies included.
inline Cone movable_cone_brute_force(const SpaceSpec& s) {
    detail::require_rank2(s);
    const auto g = grading_matrix(s);
    const std::size_t d = static_cast<std::size_t>(picard_rank(s));
    std::vector<IntVector> all;
    for (const auto& c : g.columns)
        for (Integer i = 0; i < c.multiplicity; ++i) all.push_back(c.degree.coords);
    std::vector<Cone> pieces;
    for (std::size_t skip = 0; skip < all.size(); ++skip) {
        std::vector<IntVector> rest;
        rest.reserve(all.size() - 1);
        for (std::size_t j = 0; j < all.size(); ++j)
            if (j != skip) rest.push_back(all[j]);
        pieces.push_back(cone_from_rays(d, std::span<const IntVector>(rest)));
    }
    return intersect_all(pieces);
}

/// C . D = c_0 a_0 - sum_{i>=1} c_i a_i.
inline Integer pairing(std::span<const Integer> c, std::span<const Integer> d) {
    if (c.size() != d.size()) fail(ErrorCode::dimension_mismatch, "curve and divisor ranks differ");
    Integer out = c[0] * d[0];
    for (std::size_t i = 1; i < c.size(); ++i) out -= c[i] * d[i];
    return out;
}

inline Integer pairing(const CurveClass& c, const DivisorClass& d) { return pairing(c.coords, d.coords); }

/// Cone of curves, dual to Nef under the pairing, in (l, e_*) coordinates.
inline Cone mori_cone(const SpaceSpec& s) { return detail::flip_tail(dual(nef_cone(s))); }

/// Cone of moving curves, dual to Eff under the pairing.
inline Cone moving_curve_cone(const SpaceSpec& s) { return detail::flip_tail(dual(effective_cone(s))); }

inline bool is_fano(const SpaceSpec& s) {
    if (picard_rank(s) == 1) return true;
    const auto minus_k = anticanonical_class(s);
    const Cone mori = mori_cone(s);
    for (const auto& r : extremal_rays(mori))
        if (pairing(r.coords(), minus_k.coords) <= 0) return false;
    return true;
}

/// Cone by its command-line name: eff, nef, mov, mori or movcurves.
inline Cone named_cone(const SpaceSpec& s, std::string_view name) {
    if (name == "eff") return effective_cone(s);
    if (name == "nef") return nef_cone(s);
    if (name == "mov") return movable_cone(s);
    if (name == "mori") return mori_cone(s);
    if (name == "movcurves") return moving_curve_cone(s);
    fail(ErrorCode::invalid_spec, "unknown cone " + std::string(name));
}

inline bool is_curve_cone(std::string_view name) { return name == "mori" || name == "movcurves"; }

} // namespace conekit
