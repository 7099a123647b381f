#pragma once

#include "conekit/detail/double_description.hpp"
#include "conekit/error.hpp"
#include "conekit/linalg.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace conekit {

namespace detail {
inline std::atomic<unsigned>& thread_setting() {
    static std::atomic<unsigned> value{std::max(1u, std::thread::hardware_concurrency())};
    return value;
}
} // namespace detail

/// Worker threads used inside cone conversions. Results never depend on it.
inline unsigned threads() { return detail::thread_setting().load(); }
inline void set_threads(unsigned n) { detail::thread_setting().store(n ? n : 1); }

/// Canonical description of a cone C = P + L.
///   lineality:    reduced echelon basis of the lineality space L
///   pointed:      extreme rays of P = C ∩ L^⊥
///   equalities:   reduced echelon basis of span(C)^⊥
///   inequalities: facet normals, projected into span(C)
/// Every list holds primitive vectors sorted lexicographically, so two
/// descriptions of the same cone compare equal.
struct ConeData {
    std::vector<RayVector> lineality;
    std::vector<RayVector> pointed;
    std::vector<RayVector> equalities;
    std::vector<RayVector> inequalities;

    friend bool operator==(const ConeData&, const ConeData&) = default;

    ConeData swapped() const { return {equalities, inequalities, lineality, pointed}; }
};

namespace detail {

inline std::vector<RayVector> identity_rows(std::size_t d) {
    std::vector<RayVector> out;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d, 0);
        e[i] = 1;
        out.push_back(primitive(std::move(e)));
    }
    return out;
}

inline std::vector<RayVector> orthogonal_complement(std::span<const RayVector> rows, std::size_t d) {
    if (rows.empty()) return identity_rows(d);
    auto k = kernel_basis(rows, d);
    if (k.empty()) return k;
    return canonical_subspace_basis(k, d);
}

/// Rank of a selection of integer rows, stopping once `target` is reached.
inline std::size_t rank_up_to(std::span<const IntVector> rows, std::span<const std::size_t> pick, std::size_t d,
                              std::size_t target) {
    auto run = [&]<class Arith>() {
        RankAccumulator<Arith> acc(d);
        std::vector<typename Arith::Int> buf(d);
        for (std::size_t i : pick) {
            for (std::size_t j = 0; j < d; ++j) buf[j] = Arith::from(rows[i][j]);
            acc.add(buf);
            if (acc.rank() >= target) break;
        }
        return acc.rank();
    };
    try {
        return run.template operator()<SmallArith>();
    } catch (const Overflow&) {
        return run.template operator()<BigArith>();
    }
}

/// Canonical form of {x : <a, x> >= 0 for every a in normals}.
inline ConeData canonical_from_halfspaces(std::size_t d, std::span<const IntVector> normals) {
    std::vector<RayVector> a;
    for (const auto& v : normals) {
        if (v.size() != d) fail(ErrorCode::dimension_mismatch, "normal length differs from ambient rank");
        if (!is_zero(v)) a.push_back(primitive(v));
    }
    sort_unique(a);

    ConeData out;
    out.lineality = orthogonal_complement(a, d);

    // Adding ±L cuts the cone down to its pointed part and makes the system full rank.
    std::vector<RayVector> rows = a;
    for (const auto& l : out.lineality) {
        rows.push_back(l);
        rows.push_back(-l);
    }
    sort_unique(rows);
    std::vector<IntVector> plain;
    plain.reserve(rows.size());
    for (const auto& r : rows) plain.push_back(r.coords());

    DDResult dd = double_description(d, plain, threads());
    for (auto& r : dd.rays) out.pointed.push_back(primitive(std::move(r)));

    std::vector<RayVector> spanning = out.pointed;
    spanning.insert(spanning.end(), out.lineality.begin(), out.lineality.end());
    out.equalities = orthogonal_complement(spanning, d);

    const std::size_t dim_pointed = d - out.equalities.size() - out.lineality.size();
    // Rays are sorted after primitive(); keep the zero sets aligned with them.
    std::vector<IntVector> ray_rows;
    ray_rows.reserve(out.pointed.size());
    {
        std::vector<std::pair<RayVector, std::size_t>> tagged;
        for (std::size_t i = 0; i < out.pointed.size(); ++i) tagged.emplace_back(out.pointed[i], i);
        std::sort(tagged.begin(), tagged.end());
        std::vector<std::vector<std::uint64_t>> zs;
        out.pointed.clear();
        for (auto& [r, i] : tagged) {
            out.pointed.push_back(r);
            ray_rows.push_back(r.coords());
            zs.push_back(std::move(dd.zero_sets[i]));
        }
        dd.zero_sets = std::move(zs);
    }

    std::vector<std::size_t> tight;
    for (const auto& n : a) {
        const std::size_t k = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), n) - rows.begin());
        tight.clear();
        for (std::size_t i = 0; i < ray_rows.size(); ++i)
            if (dd.zero_sets[i][k / 64] >> (k % 64) & 1) tight.push_back(i);
        if (tight.size() == ray_rows.size()) continue; // implicit equality
        if (dim_pointed == 0) continue;
        if (tight.size() + 1 < dim_pointed) continue;
        if (rank_up_to(ray_rows, tight, d, dim_pointed - 1) == dim_pointed - 1)
            out.inequalities.push_back(primitive(project_off(n.coords(), out.equalities)));
    }
    sort_unique(out.inequalities);
    return out;
}

inline ConeData canonical_from_rays(std::size_t d, std::span<const IntVector> generators) {
    return canonical_from_halfspaces(d, generators).swapped();
}

inline std::vector<RayVector> with_negatives(const std::vector<RayVector>& base, const std::vector<RayVector>& lin) {
    std::vector<RayVector> out = base;
    for (const auto& l : lin) {
        out.push_back(l);
        out.push_back(-l);
    }
    sort_unique(out);
    return out;
}

} // namespace detail

/// Rational polyhedral cone. Values are immutable; copies share a lazily
/// filled canonical form, so conversion runs at most once per value.
class Cone {
public:
    std::size_t ambient_rank() const noexcept { return state_->ambient; }

    /// Generators: extreme rays of the pointed part plus ±lineality basis.
    const std::vector<RayVector>& rays() const { return resolve().rays; }
    /// Inequality normals: facets plus ±equality basis.
    const std::vector<RayVector>& facets() const { return resolve().facets; }

    const ConeData& data() const { return resolve().data; }
    bool has_rays() const { return state_->from_rays || resolved(); }
    bool has_facets() const { return !state_->from_rays || resolved(); }

    std::size_t lineality_dimension() const { return data().lineality.size(); }
    std::size_t dimension() const { return ambient_rank() - data().equalities.size(); }
    bool is_pointed() const { return lineality_dimension() == 0; }
    bool is_full_dimensional() const { return data().equalities.empty(); }

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_rank() == b.ambient_rank() && a.data() == b.data();
    }

    static Cone from_data(std::size_t d, ConeData data) {
        Cone c(d, {}, false);
        c.state_->fill(std::move(data));
        return c;
    }

private:
    struct Resolved {
        ConeData data;
        std::vector<RayVector> rays;
        std::vector<RayVector> facets;
    };
    struct State {
        std::size_t ambient = 0;
        std::vector<IntVector> input;
        bool from_rays = false;
        std::once_flag once;
        std::optional<Resolved> value;

        void fill(ConeData data) {
            Resolved r;
            r.rays = detail::with_negatives(data.pointed, data.lineality);
            r.facets = detail::with_negatives(data.inequalities, data.equalities);
            r.data = std::move(data);
            value = std::move(r);
            input.clear();
        }
    };

    Cone(std::size_t d, std::vector<IntVector> input, bool from_rays) : state_(std::make_shared<State>()) {
        state_->ambient = d;
        state_->input = std::move(input);
        state_->from_rays = from_rays;
    }

    bool resolved() const { return state_->value.has_value(); }

    const Resolved& resolve() const {
        State& s = *state_;
        std::call_once(s.once, [&s] {
            if (s.value) return;
            s.fill(s.from_rays ? detail::canonical_from_rays(s.ambient, s.input)
                               : detail::canonical_from_halfspaces(s.ambient, s.input));
        });
        return *s.value;
    }

    friend Cone cone_from_rays(std::size_t, std::span<const IntVector>);
    friend Cone cone_from_halfspaces(std::size_t, std::span<const IntVector>);

    std::shared_ptr<State> state_;
};

namespace detail {
inline void check_lengths(std::size_t d, std::span<const IntVector> vs) {
    if (d == 0) fail(ErrorCode::dimension_mismatch, "ambient rank must be positive");
    for (const auto& v : vs)
        if (v.size() != d) fail(ErrorCode::dimension_mismatch, "vector length differs from ambient rank");
}
} // namespace detail

/// Positive hull of the generators. Converted eagerly so the ray list is
/// already reduced to extreme rays.
inline Cone cone_from_rays(std::size_t d, std::span<const IntVector> generators) {
    detail::check_lengths(d, generators);
    Cone c(d, {generators.begin(), generators.end()}, true);
    c.resolve();
    return c;
}

inline Cone cone_from_rays(std::size_t d, std::initializer_list<IntVector> generators) {
    return cone_from_rays(d, std::span<const IntVector>(generators.begin(), generators.size()));
}

/// {x : <a, x> >= 0 for every normal a}. Conversion is deferred until a
/// generator-side query needs it.
inline Cone cone_from_halfspaces(std::size_t d, std::span<const IntVector> normals) {
    detail::check_lengths(d, normals);
    return Cone(d, {normals.begin(), normals.end()}, false);
}

inline Cone cone_from_halfspaces(std::size_t d, std::initializer_list<IntVector> normals) {
    return cone_from_halfspaces(d, std::span<const IntVector>(normals.begin(), normals.size()));
}

inline Cone cone_from_rays(std::size_t d, std::span<const RayVector> generators) {
    std::vector<IntVector> g;
    for (const auto& r : generators) g.push_back(r.coords());
    return cone_from_rays(d, std::span<const IntVector>(g));
}

inline Cone cone_from_halfspaces(std::size_t d, std::span<const RayVector> normals) {
    std::vector<IntVector> g;
    for (const auto& r : normals) g.push_back(r.coords());
    return cone_from_halfspaces(d, std::span<const IntVector>(g));
}

inline Cone zero_cone(std::size_t d) { return cone_from_rays(d, std::span<const IntVector>{}); }
inline Cone full_space(std::size_t d) { return cone_from_halfspaces(d, std::span<const IntVector>{}); }

/// Returns a cone with both representations populated.
inline Cone dd_convert(const Cone& c) {
    c.data();
    return c;
}

/// Dual under the standard inner product.
inline Cone dual(const Cone& c) { return Cone::from_data(c.ambient_rank(), c.data().swapped()); }

inline Cone intersect_all(std::span<const Cone> cones) {
    if (cones.empty()) fail(ErrorCode::dimension_mismatch, "intersection of no cones");
    const std::size_t d = cones.front().ambient_rank();
    std::vector<IntVector> normals;
    for (const auto& c : cones) {
        if (c.ambient_rank() != d) fail(ErrorCode::dimension_mismatch, "ambient ranks differ");
        for (const auto& f : c.facets()) normals.push_back(f.coords());
    }
    return dd_convert(cone_from_halfspaces(d, std::span<const IntVector>(normals)));
}

inline Cone intersect(const Cone& a, const Cone& b) {
    const Cone both[] = {a, b};
    return intersect_all(both);
}

/// Minimal generating set of a pointed cone.
inline std::vector<RayVector> extremal_rays(const Cone& c) {
    if (!c.is_pointed()) fail(ErrorCode::not_pointed, "cone has a nontrivial lineality space");
    return c.data().pointed;
}

inline bool contains(const Cone& c, std::span<const Integer> v) {
    if (v.size() != c.ambient_rank()) fail(ErrorCode::dimension_mismatch, "vector length differs from ambient rank");
    for (const auto& f : c.facets())
        if (dot(f, v) < 0) return false;
    return true;
}

inline bool contains(const Cone& c, const RayVector& v) { return contains(c, v.coords()); }

/// True when every facet inequality holds strictly (interior of a full-dimensional cone).
inline bool strictly_contains(const Cone& c, std::span<const Integer> v) {
    if (v.size() != c.ambient_rank()) fail(ErrorCode::dimension_mismatch, "vector length differs from ambient rank");
    if (!c.is_full_dimensional()) return false;
    for (const auto& f : c.data().inequalities)
        if (dot(f, v) <= 0) return false;
    return true;
}

inline RayVector interior_point(const Cone& c) {
    if (!c.is_full_dimensional()) fail(ErrorCode::not_full_dimensional, "cone is not full-dimensional");
    const auto& rays = c.data().pointed;
    IntVector sum(c.ambient_rank(), 0);
    if (rays.empty()) {
        sum[0] = 1;
        return primitive(std::move(sum));
    }
    for (const auto& r : rays)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r[i];
    return primitive(std::move(sum));
}

} // namespace conekit
