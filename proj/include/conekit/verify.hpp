#pragma once

#include "conekit/fixtures.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace conekit {

struct CheckResult {
    std::string suite;
    std::string name;
    bool ok = false;
    std::string detail;
};

namespace detail {

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& name, bool ok, std::string detail = {}) {
        out_.push_back({suite_, name, ok, std::move(detail)});
    }

    /// Runs `body`; a thrown library error counts as a failure of this check.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            check(name, false, e.what());
        }
    }

    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string suite_;
    std::vector<CheckResult> out_;
};

inline std::string join(const std::vector<RayVector>& rays) {
    std::string s;
    for (const auto& r : rays) s += (s.empty() ? "" : " ") + to_string(r.coords());
    return s;
}

inline std::vector<RayVector> sorted_primitive(const std::vector<IntVector>& vs) {
    std::vector<RayVector> out;
    for (const auto& v : vs) out.push_back(primitive(v));
    sort_unique(out);
    return out;
}

inline std::vector<SpaceSpec> full_specs(int max_n, int max_m) {
    std::vector<SpaceSpec> out;
    for (int n = 1; n <= max_n; ++n)
        for (int m = n; m <= max_m; ++m) {
            auto s = SpaceSpec::collineations(n, m);
            if (picard_rank(s) >= 2) out.push_back(s);
        }
    for (int n = 2; n <= max_n; ++n) out.push_back(SpaceSpec::quadrics(n));
    return out;
}

inline std::vector<SpaceSpec> staged_specs(int max_n) {
    std::vector<SpaceSpec> out;
    for (int n = 2; n <= max_n; ++n)
        for (int i = 1; i <= n - 1; ++i) {
            out.push_back(SpaceSpec::collineations(n).at_stage(i));
            out.push_back(SpaceSpec::collineations(n, n + 1).at_stage(i));
            out.push_back(SpaceSpec::quadrics(n).at_stage(i));
        }
    return out;
}

/// Mori cone from the explicit curve classes e_{j-1} - 2 e_j + e_{j+1} and e_r, with e_0 = l.
inline Cone mori_oracle(const SpaceSpec& s) {
    const std::size_t rho = static_cast<std::size_t>(picard_rank(s));
    const std::size_t r = rho - 1;
    std::vector<IntVector> gens;
    for (std::size_t j = 1; j <= r; ++j) {
        IntVector v(rho, 0);
        v[j - 1] += 1;
        v[j] -= 2;
        if (j + 1 <= r) v[j + 1] += 1;
        gens.push_back(v);
    }
    IntVector last(rho, 0);
    last[r] = 1;
    gens.push_back(last);
    return cone_from_rays(rho, std::span<const IntVector>(gens));
}

/// Moving curves dl + sum c_i e_i with m_i = -c_i >= 0 and d(n+1) - sum (n-i+1) m_i >= 0.
inline Cone moving_curve_oracle(const SpaceSpec& s) {
    const std::size_t rho = static_cast<std::size_t>(picard_rank(s));
    std::vector<IntVector> normals;
    IntVector main(rho, 0);
    main[0] = s.n + 1;
    for (std::size_t i = 1; i < rho; ++i) {
        IntVector e(rho, 0);
        e[i] = -1;
        normals.push_back(e);
        main[i] = s.n - static_cast<long>(i) + 1;
    }
    normals.push_back(main);
    return cone_from_halfspaces(rho, std::span<const IntVector>(normals));
}

} // namespace detail

struct FuzzReport {
    std::size_t cones = 0;
    std::size_t involution_failures = 0;
    std::size_t consistency_failures = 0;
    std::size_t extremality_failures = 0;
    std::size_t interior_failures = 0;

    bool ok() const {
        return involution_failures + consistency_failures + extremality_failures + interior_failures == 0;
    }
};

/// Random cones of rank <= 5 with <= 8 generators, entries in [-5, 5].
inline FuzzReport engine_fuzz(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rank_d(1, 5), gens_d(0, 8), entry_d(-5, 5), coin(0, 1);
    FuzzReport rep;
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t d = static_cast<std::size_t>(rank_d(rng));
        const int k = gens_d(rng);
        std::vector<IntVector> gens;
        for (int i = 0; i < k; ++i) {
            IntVector v(d);
            for (auto& x : v) x = entry_d(rng);
            gens.push_back(v);
        }
        const Cone c = coin(rng) ? cone_from_rays(d, std::span<const IntVector>(gens))
                                 : cone_from_halfspaces(d, std::span<const IntVector>(gens));
        ++rep.cones;

        if (!(dual(dual(c)) == c)) ++rep.involution_failures;

        bool consistent = true;
        for (const auto& r : c.rays())
            for (const auto& f : c.facets())
                if (dot(f, r) < 0) consistent = false;
        // The lazily converted side must agree with a fresh conversion of the other side.
        if (!(cone_from_rays(d, std::span<const RayVector>(c.rays())) == c)) consistent = false;
        if (!(cone_from_halfspaces(d, std::span<const RayVector>(c.facets())) == c)) consistent = false;
        if (!consistent) ++rep.consistency_failures;

        if (c.is_pointed()) {
            const auto rays = extremal_rays(c);
            for (std::size_t i = 0; i < rays.size(); ++i) {
                std::vector<RayVector> rest;
                for (std::size_t j = 0; j < rays.size(); ++j)
                    if (j != i) rest.push_back(rays[j]);
                if (contains(cone_from_rays(d, std::span<const RayVector>(rest)), rays[i])) {
                    ++rep.extremality_failures;
                    break;
                }
            }
        }
        if (c.is_full_dimensional() && !strictly_contains(c, interior_point(c).coords()))
            if (!c.data().inequalities.empty()) ++rep.interior_failures;
    }
    return rep;
}

inline std::vector<CheckResult> verify_formulas() {
    detail::Recorder rec("formulas");
    rec.guarded("weyl_dim = dim_section_space, 0 <= k < n <= 12", [&] {
        std::size_t bad = 0;
        for (long n = 1; n <= 12; ++n)
            for (long k = 0; k < n; ++k)
                if (weyl_dim(n, k).value != dim_section_space(n, k).value) ++bad;
        rec.check("weyl_dim = dim_section_space, 0 <= k < n <= 12", bad == 0, std::to_string(bad) + " mismatches");
    });
    rec.guarded("plucker_relation_count(n,1) = C(n+1,4), n <= 12", [&] {
        std::size_t bad = 0;
        for (long n = 2; n <= 12; ++n)
            if (plucker_relation_count(n, 1).value != binomial(n + 1, 4)) ++bad;
        rec.check("plucker_relation_count(n,1) = C(n+1,4), n <= 12", bad == 0, std::to_string(bad) + " mismatches");
    });
    rec.guarded("values", [&] {
        auto eq = [&](const std::string& what, const Integer& got, long want) {
            rec.check(what, got == want, "got " + got.get_str() + ", expected " + std::to_string(want));
        };
        eq("dim_section_space(3,1) = 20", dim_section_space(3, 1).value, 20);
        eq("dim_section_space(3,0) = 10", dim_section_space(3, 0).value, 10);
        eq("dim_section_space(2,1) = 6", dim_section_space(2, 1).value, 6);
        eq("weyl_dim(2,0) = 6", weyl_dim(2, 0).value, 6);
        eq("plucker_relation_count(3,1) = 1", plucker_relation_count(3, 1).value, 1);
        eq("plucker_relation_count(4,1) = 5", plucker_relation_count(4, 1).value, 5);
        eq("plucker_relation_count(3,0) = 0", plucker_relation_count(3, 0).value, 0);
        eq("cox_generator_count X(3) = 71", cox_generator_count(SpaceSpec::collineations(3)).value, 71);
        eq("cox_generator_count Q(2) = 14", cox_generator_count(SpaceSpec::quadrics(2)).value, 14);
        eq("cox_generator_count X(1,2) = 10", cox_generator_count(SpaceSpec::collineations(1, 2)).value, 10);
        for (int m = 2; m <= 8; ++m)
            eq("dim_cox X(1," + std::to_string(m) + ") = 2m+3", dim_cox(SpaceSpec::collineations(1, m)).value,
               2 * m + 3);
        eq("dim_cox Q(2) = 7", dim_cox(SpaceSpec::quadrics(2)).value, 7);
        eq("dim_cox X(2) = 10", dim_cox(SpaceSpec::collineations(2)).value, 10);
        eq("secant_codim segre(3,3,1) = 9", secant_codim(SecantKind::segre, 3, 3, 1).value, 9);
        eq("secant_codim veronese(2,1) = 3", secant_codim(SecantKind::veronese, 2, 2, 1).value, 3);
        eq("minor_multiplicity(2,1) = 2", minor_multiplicity(2, 1).value, 2);
        eq("minor_multiplicity(3,3) = 1", minor_multiplicity(3, 3).value, 1);
        eq("minor_multiplicity(2,3) = 0", minor_multiplicity(2, 3).value, 0);
        eq("osculating degree (3,1) = 4", osculating_degree(3, 1).degree, 4);
        eq("osculating degree (3,2) = 3", osculating_degree(3, 2).degree, 3);
        eq("osculating ambient (3,1) = 30", osculating_degree(3, 1).ambient, 30);
    });
    rec.guarded("minor multiplicity steps are 0 or 1", [&] {
        bool ok = true;
        for (long k = 1; k <= 12; ++k)
            for (long h = 1; h <= 13; ++h) {
                const Integer step = minor_multiplicity(k, h).value - minor_multiplicity(k, h + 1).value;
                ok = ok && (step == 0 || step == 1);
            }
        rec.check("minor multiplicity steps are 0 or 1", ok);
    });
    rec.guarded("veronese codimension integral", [&] {
        for (long n = 1; n <= 12; ++n)
            for (long h = 1; h <= n; ++h) secant_codim(SecantKind::veronese, n, n, h);
        rec.check("veronese codimension integral, n <= 12", true);
    });
    return rec.take();
}

inline std::vector<CheckResult> verify_counts(const std::filesystem::path& dir) {
    detail::Recorder rec("counts");
    rec.guarded("fixtures", [&] {
        const Json doc = load_expected_counts(dir);
        for (const auto& m : doc.at("movable")) {
            const SpaceSpec s = space_from_json(m.at("space"));
            const auto want = m.at("rays").get<std::size_t>();
            const auto got = extremal_rays(movable_cone(s)).size();
            rec.check("|Mov " + s.name() + "| = " + std::to_string(want), got == want, "got " + std::to_string(got));
        }
    });
    rec.guarded("grading totals", [&] {
        std::size_t bad = 0;
        for (const auto& s : detail::full_specs(8, 8))
            if (grading_matrix(s).total() != cox_generator_count(s).value) ++bad;
        for (const auto& s : detail::staged_specs(8))
            if (grading_matrix(s).total() != cox_generator_count(s).value) ++bad;
        rec.check("grading multiplicities sum to cox_generator_count, n <= 8", bad == 0,
                  std::to_string(bad) + " mismatches");
    });
    return rec.take();
}

inline std::vector<CheckResult> verify_cones(const std::filesystem::path& dir) {
    detail::Recorder rec("cones");
    rec.guarded("golden cones", [&] {
        const Json doc = load_golden_cones(dir);
        for (const auto& g : doc.at("cones")) {
            const ConeReport want = cone_report_from_json(g);
            const Cone c = named_cone(want.space, want.cone);
            const auto got = extremal_rays(c);
            rec.check(want.cone + " " + want.space.name() + " matches reference", got == want.rays, detail::join(got));
        }
        for (const auto& a : doc.at("anticanonical")) {
            const SpaceSpec s = space_from_json(a.at("space"));
            const IntVector want = vector_from_json(a.at("class"));
            const IntVector got = anticanonical_class(s).coords;
            rec.check("-K " + s.name() + " = " + to_string(want), got == want, to_string(got));
        }
    });
    rec.guarded("duality oracles", [&] {
        std::size_t mori_bad = 0, moving_bad = 0, simplicial_bad = 0;
        for (const auto& s : detail::full_specs(6, 6)) {
            if (!(mori_cone(s) == detail::mori_oracle(s))) ++mori_bad;
            if (!(moving_curve_cone(s) == detail::moving_curve_oracle(s))) ++moving_bad;
            const Cone mori = mori_cone(s);
            const auto rays = extremal_rays(mori);
            const auto nef = extremal_rays(nef_cone(s));
            if (rays.size() != static_cast<std::size_t>(picard_rank(s))) ++simplicial_bad;
            for (const auto& r : rays) {
                std::size_t zeros = 0;
                for (const auto& d : nef) zeros += pairing(r.coords(), d.coords()) == 0;
                if (zeros != rays.size() - 1) ++simplicial_bad;
            }
        }
        rec.check("mori_cone = explicit curve classes, n <= m <= 6", mori_bad == 0, std::to_string(mori_bad));
        rec.check("moving_curve_cone = inequality description, n <= m <= 6", moving_bad == 0,
                  std::to_string(moving_bad));
        rec.check("mori cone simplicial, rho-1 nef generators on each face", simplicial_bad == 0,
                  std::to_string(simplicial_bad));
    });
    rec.guarded("fano", [&] {
        std::size_t bad = 0;
        for (const auto& s : detail::full_specs(6, 6))
            if (!is_fano(s)) ++bad;
        rec.check("is_fano for every full space with n <= m <= 6", bad == 0, std::to_string(bad) + " failures");
        rec.check("X(3)_1 is not Fano", !is_fano(SpaceSpec::collineations(3).at_stage(1)));
        rec.check("X(2)_1 is Fano", is_fano(SpaceSpec::collineations(2).at_stage(1)));
        const Integer p = pairing(int_vector({1, -2, 1}), anticanonical_class(SpaceSpec::collineations(3)).coords);
        rec.check("-K . (l - 2e_1 + e_2) = 3 on X(3)", p == 3, p.get_str());
    });
    rec.guarded("chain", [&] {
        std::size_t bad = 0;
        auto specs = detail::full_specs(8, 8);
        const auto staged = detail::staged_specs(8);
        specs.insert(specs.end(), staged.begin(), staged.end());
        for (const auto& s : specs) {
            const Cone nef = nef_cone(s), mov = movable_cone(s), eff = effective_cone(s);
            for (const auto& r : extremal_rays(nef)) bad += !contains(mov, r);
            for (const auto& r : extremal_rays(mov)) bad += !contains(eff, r);
        }
        rec.check("Nef within Mov within Eff, n <= 8", bad == 0, std::to_string(bad) + " failures");
    });
    rec.guarded("quadrics agree", [&] {
        std::size_t bad = 0;
        for (int n = 2; n <= 8; ++n)
            bad += !(movable_cone(SpaceSpec::collineations(n)) == movable_cone(SpaceSpec::quadrics(n)));
        rec.check("Mov X(n) and Mov Q(n) have the same rays, n <= 8", bad == 0, std::to_string(bad));
    });
    rec.guarded("first stage movable", [&] {
        std::size_t bad = 0;
        for (int n = 2; n <= 8; ++n) {
            for (const auto& s : {SpaceSpec::collineations(n, n + 1).at_stage(1), SpaceSpec::collineations(n).at_stage(1),
                                  SpaceSpec::quadrics(n).at_stage(1)}) {
                const int top = s.family == Family::collineations ? n + 1 : n;
                const std::vector<IntVector> want{divisor_D(s, 1).coords, divisor_D(s, top).coords};
                bad += extremal_rays(movable_cone(s)) != detail::sorted_primitive(want);
            }
        }
        rec.check("Mov of the first blow-up, n <= 8", bad == 0, std::to_string(bad));
    });
    rec.guarded("shortcut", [&] {
        std::size_t bad = 0;
        auto specs = detail::full_specs(5, 6);
        const auto staged = detail::staged_specs(5);
        specs.insert(specs.end(), staged.begin(), staged.end());
        for (const auto& s : specs) bad += !(movable_cone(s) == movable_cone_brute_force(s));
        rec.check("multiplicity-one shortcut = omit-every-generator, n <= 5", bad == 0, std::to_string(bad));
    });
    rec.guarded("fuzz", [&] {
        const FuzzReport f = engine_fuzz(200, 20240917);
        std::ostringstream d;
        d << f.involution_failures << "/" << f.consistency_failures << "/" << f.extremality_failures << "/"
          << f.interior_failures;
        rec.check("engine fuzz on 200 cones", f.ok(), d.str());
    });
    return rec.take();
}

inline std::vector<CheckResult> verify_fans(const std::filesystem::path& dir) {
    detail::Recorder rec("fans");
    std::vector<SblRecord> records;
    rec.guarded("fixture counts", [&] {
        records = load_sbl_records(dir);
        const Json doc = load_expected_counts(dir);
        for (const auto& f : doc.at("fans")) {
            const SpaceSpec s = space_from_json(f.at("space"));
            const auto fan = gkz_fan(s);
            const auto gkz = f.at("gkz").get<std::size_t>();
            rec.check("gkz " + s.name() + " has " + std::to_string(gkz) + " chambers", fan.chambers.size() == gkz,
                      std::to_string(fan.chambers.size()));
            const auto sbl = f.at("sbl").get<std::size_t>();
            const auto merged = sbl_merge(fan, s, records);
            rec.check("sbl " + s.name() + " has " + std::to_string(sbl) + " chambers", merged.chambers.size() == sbl,
                      std::to_string(merged.chambers.size()));
        }
    });
    rec.guarded("nef chamber", [&] {
        for (const auto& s : {SpaceSpec::collineations(3), SpaceSpec::quadrics(3), SpaceSpec::collineations(2, 3),
                              SpaceSpec::collineations(2, 5), SpaceSpec::collineations(2)}) {
            const auto fan = gkz_fan(s);
            const Cone nef = nef_cone(s);
            std::size_t hits = 0;
            for (const auto& c : fan.chambers) hits += c.pieces.front() == nef;
            rec.check("Nef is exactly one chamber of " + s.name(), hits == 1, std::to_string(hits));
        }
    });
    rec.guarded("movable subfan", [&] {
        const SpaceSpec s = SpaceSpec::collineations(3);
        const auto fan = gkz_fan(s);
        const Cone mov = movable_cone(s);
        std::vector<std::vector<RayVector>> inside;
        for (const auto& c : fan.chambers) {
            bool in = true;
            for (const auto& r : c.rays) in = in && contains(mov, r);
            if (in) inside.push_back(c.rays);
        }
        const std::vector<std::vector<RayVector>> want{
            detail::sorted_primitive({int_vector({1, 0, 0}), int_vector({2, -1, 0}), int_vector({3, -2, -1})}),
            detail::sorted_primitive({int_vector({1, 0, 0}), int_vector({3, -2, -1}), int_vector({6, -3, -2})})};
        std::sort(inside.begin(), inside.end());
        auto sorted_want = want;
        std::sort(sorted_want.begin(), sorted_want.end());
        rec.check("two chambers of X(3) inside Mov: Nef and <D_1,D_3,D_M>", inside == sorted_want);
        const auto q = gkz_fan(SpaceSpec::quadrics(3));
        bool same = q.chambers.size() == fan.chambers.size();
        for (std::size_t i = 0; same && i < q.chambers.size(); ++i) same = q.chambers[i].rays == fan.chambers[i].rays;
        rec.check("Q(3) fan has the chamber coordinates of X(3)", same);
    });
    rec.guarded("rank two law", [&] {
        std::size_t bad = 0;
        std::vector<SpaceSpec> specs{SpaceSpec::collineations(2), SpaceSpec::quadrics(2)};
        for (int m = 2; m <= 6; ++m) specs.push_back(SpaceSpec::collineations(1, m));
        for (int n = 2; n <= 8; ++n) {
            specs.push_back(SpaceSpec::collineations(n).at_stage(1));
            specs.push_back(SpaceSpec::quadrics(n).at_stage(1));
            specs.push_back(SpaceSpec::collineations(n, n + 2).at_stage(1));
        }
        for (const auto& s : specs) {
            const Cone eff = effective_cone(s);
            std::vector<RayVector> dirs;
            for (const auto& c : grading_matrix(s).columns)
                if (contains(eff, c.degree.coords)) dirs.push_back(primitive(c.degree.coords));
            detail::sort_unique(dirs);
            bad += gkz_fan(s).chambers.size() != dirs.size() - 1;
        }
        rec.check("rank-2 chamber count = directions - 1", bad == 0, std::to_string(bad));
    });
    rec.guarded("locate", [&] {
        const SpaceSpec s = SpaceSpec::collineations(3);
        const auto fan = gkz_fan(s);
        const auto k = locate(fan, anticanonical_class(s).coords);
        rec.check("-K of X(3) lies in the Nef chamber", fan.chambers[k].label == "Nef");
        const auto j = locate(fan, int_vector({1, 1, 1}));
        rec.check("(1,1,1) lies in <D_1,E_1,E_2>",
                  fan.chambers[j].rays ==
                      detail::sorted_primitive({int_vector({1, 0, 0}), int_vector({0, 1, 0}), int_vector({0, 0, 1})}));
        bool boundary = false;
        try {
            locate(fan, int_vector({0, 1, 0}));
        } catch (const Error& e) {
            boundary = e.code() == ErrorCode::boundary_point;
        }
        rec.check("E_1 is a boundary point", boundary);
        bool wall = false;
        const auto d2e2 = detail::sorted_primitive({int_vector({2, -1, 0}), int_vector({0, 0, 1})});
        for (const auto& w : fan.walls) wall = wall || (w.rays == d2e2 && w.normal.coords() == int_vector({1, 2, 0}));
        rec.check("wall D_2-E_2 has normal (1,2,0)", wall);
        bool nef_wall = false;
        const auto d1d3 = detail::sorted_primitive({int_vector({1, 0, 0}), int_vector({3, -2, -1})});
        for (const auto& w : fan.walls)
            nef_wall = nef_wall || (w.rays == d1d3 && (fan.chambers[w.first].label == "Nef" ||
                                                       fan.chambers[w.second].label == "Nef"));
        rec.check("Nef meets <D_1,D_3,D_M> along span{D_1,D_3}", nef_wall);
    });
    rec.guarded("partition", [&] {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> coef(0, 6);
        std::size_t bad = 0;
        for (const auto& s : {SpaceSpec::collineations(3), SpaceSpec::collineations(2, 4), SpaceSpec::quadrics(2)}) {
            const auto fan = gkz_fan(s);
            const auto eff = extremal_rays(effective_cone(s));
            for (std::size_t i = 0; i < fan.chambers.size(); ++i) bad += locate(fan, fan.chambers[i].sample.coords()) != i;
            for (int t = 0; t < 100; ++t) {
                IntVector v(eff.front().size(), 0);
                for (const auto& r : eff) {
                    const int c = coef(rng);
                    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * r[j];
                }
                if (is_zero(v)) continue;
                std::size_t hits = 0;
                for (const auto& c : fan.chambers) hits += contains(c.pieces.front(), v);
                try {
                    locate(fan, v);
                    bad += hits != 1;
                } catch (const Error& e) {
                    bad += e.code() != ErrorCode::boundary_point || (hits == 1 && strictly_contains(effective_cone(s), v));
                }
            }
        }
        rec.check("samples and random classes locate consistently", bad == 0, std::to_string(bad));
    });
    return rec.take();
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"formulas", "counts", "cones", "fans"};
    return names;
}

inline std::vector<CheckResult> run_verify(const std::string& suite, const std::filesystem::path& dir) {
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    if (suite == "all" || suite == "formulas") add(verify_formulas());
    if (suite == "all" || suite == "counts") add(verify_counts(dir));
    if (suite == "all" || suite == "cones") add(verify_cones(dir));
    if (suite == "all" || suite == "fans") add(verify_fans(dir));
    return out;
}

inline std::string format_checks(const std::vector<CheckResult>& checks) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        out << (c.ok ? "PASS" : "FAIL") << "  " << c.suite << "  " << c.name;
        if (!c.ok && !c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
        failed += !c.ok;
    }
    out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return out.str();
}

} // namespace conekit
