#pragma once

#include "conekit/catalog.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace conekit {

struct Chamber {
    std::vector<RayVector> rays;
    RayVector sample;
    std::string label;
    /// Convex pieces; a single cone except after merging a removed wall.
    std::vector<Cone> pieces;
};

struct Wall {
    std::size_t first;
    std::size_t second;
    RayVector normal;
    std::vector<RayVector> rays;
};

struct ChamberFan {
    SpaceSpec space;
    std::vector<Chamber> chambers;
    std::vector<Wall> walls;
    std::string note;
};

/// Reference data for a stable base locus decomposition.
struct SblRecord {
    SpaceSpec space;
    bool any_m = false; // record applies to every m > n
    bool gkz_equals_mcd = false;
    std::size_t chamber_count = 0;
    std::size_t sbl_chamber_count = 0;
    std::vector<std::vector<IntVector>> remove_walls;
    std::vector<std::pair<std::vector<IntVector>, std::string>> labels;

    bool matches(const SpaceSpec& s) const {
        if (s.family != space.family || s.n != space.n || s.stage != space.stage) return false;
        return any_m ? true : s.m == space.m;
    }
};

namespace detail {

inline std::vector<RayVector> distinct_directions(const GradingMatrix& g) {
    std::vector<RayVector> out;
    for (const auto& c : g.columns) out.push_back(primitive(c.degree.coords));
    sort_unique(out);
    return out;
}

/// Vertex centroid of the cone's section by <w, x> = 1, scaled to a primitive vector.
inline RayVector section_centroid(const std::vector<RayVector>& rays, const RayVector& w) {
    Integer l = 1;
    std::vector<Integer> heights;
    for (const auto& r : rays) {
        heights.push_back(dot(w, r));
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), heights.back().get_mpz_t());
    }
    IntVector sum(w.size(), 0);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const Integer f = l / heights[i];
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += f * rays[i][j];
    }
    return primitive(std::move(sum));
}

inline Chamber make_chamber(const Cone& c, const RayVector& w) {
    auto rays = extremal_rays(c);
    auto sample = section_centroid(rays, w);
    return {std::move(rays), std::move(sample), "", {c}};
}

inline int orientation(const RayVector& a, const RayVector& b) { return sgn(a[0] * b[1] - a[1] * b[0]); }

inline std::vector<Chamber> rank2_chambers(const std::vector<RayVector>& dirs, const Cone& eff, const RayVector& w) {
    std::vector<RayVector> inside;
    for (const auto& r : dirs)
        if (contains(eff, r)) inside.push_back(r);
    // Eff is pointed, so all directions lie in an open half-plane and orientation is a strict order.
    std::sort(inside.begin(), inside.end(), [](const RayVector& a, const RayVector& b) { return orientation(a, b) > 0; });
    std::vector<Chamber> out;
    for (std::size_t i = 0; i + 1 < inside.size(); ++i) {
        const RayVector pair[] = {inside[i], inside[i + 1]};
        out.push_back(make_chamber(cone_from_rays(2, std::span<const RayVector>(pair)), w));
    }
    return out;
}

inline Cone halfspace(const RayVector& normal) {
    const IntVector n[] = {normal.coords()};
    return cone_from_halfspaces(normal.size(), std::span<const IntVector>(n));
}

inline std::vector<Chamber> rank3_chambers(const std::vector<RayVector>& dirs, const Cone& eff, const RayVector& w) {
    std::vector<RayVector> planes;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            const RayVector pair[] = {dirs[i], dirs[j]};
            auto k = kernel_basis(pair, 3);
            if (k.size() == 1) planes.push_back(k.front());
        }
    sort_unique(planes);

    std::vector<Cone> cells{eff};
    for (const auto& nu : planes) {
        std::vector<Cone> next;
        for (const auto& cell : cells) {
            bool pos = false, neg = false;
            for (const auto& r : cell.rays()) {
                const int s = sgn(dot(nu, r));
                pos |= s > 0;
                neg |= s < 0;
            }
            if (pos && neg) {
                next.push_back(intersect(cell, halfspace(nu)));
                next.push_back(intersect(cell, halfspace(-nu)));
            } else {
                next.push_back(cell);
            }
        }
        cells = std::move(next);
    }

    // All simplicial cones on the grading directions; by Carathéodory they
    // give the same intersections as arbitrary subsets.
    std::vector<Cone> simplices;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            for (std::size_t k = j + 1; k < dirs.size(); ++k) {
                const RayVector t[] = {dirs[i], dirs[j], dirs[k]};
                if (rank(t, 3) == 3) simplices.push_back(cone_from_rays(3, std::span<const RayVector>(t)));
            }

    std::vector<Chamber> out;
    std::vector<std::vector<RayVector>> seen;
    for (const auto& cell : cells) {
        const auto p = section_centroid(extremal_rays(cell), w);
        std::vector<Cone> containing;
        for (const auto& s : simplices)
            if (contains(s, p)) containing.push_back(s);
        Cone chamber = intersect_all(containing);
        auto rays = extremal_rays(chamber);
        if (std::find(seen.begin(), seen.end(), rays) != seen.end()) continue;
        seen.push_back(rays);
        out.push_back(make_chamber(chamber, w));
    }
    return out;
}

inline std::vector<Wall> walls_between(const std::vector<Chamber>& chambers, std::size_t rho) {
    std::vector<Wall> out;
    for (std::size_t i = 0; i < chambers.size(); ++i)
        for (std::size_t j = i + 1; j < chambers.size(); ++j)
            for (const auto& a : chambers[i].pieces)
                for (const auto& b : chambers[j].pieces) {
                    Cone meet = intersect(a, b);
                    if (meet.dimension() != rho - 1) continue;
                    auto rays = extremal_rays(meet);
                    auto normal = kernel_basis(rays, rho).front();
                    out.push_back({i, j, std::move(normal), std::move(rays)});
                }
    return out;
}

inline void label_nef(ChamberFan& f) {
    const Cone nef = nef_cone(f.space);
    for (auto& c : f.chambers)
        if (c.pieces.size() == 1 && c.pieces.front() == nef) c.label = "Nef";
}

} // namespace detail

/// Chambers of the GKZ decomposition of Eff for Picard rank 2 or 3.
inline ChamberFan gkz_fan(const SpaceSpec& s) {
    const int rho = picard_rank(s);
    if (rho < 2) fail(ErrorCode::degenerate_space, s.name() + " has Picard rank 1");
    if (rho > 3) fail(ErrorCode::rank_unsupported, "chamber enumeration needs Picard rank at most 3");

    const auto dirs = detail::distinct_directions(grading_matrix(s));
    const Cone eff = effective_cone(s);
    const RayVector w = interior_point(dual(eff));

    ChamberFan f{s, {}, {}, "GKZ"};
    f.chambers = rho == 2 ? detail::rank2_chambers(dirs, eff, w) : detail::rank3_chambers(dirs, eff, w);
    std::sort(f.chambers.begin(), f.chambers.end(),
              [](const Chamber& a, const Chamber& b) { return a.rays < b.rays; });
    f.walls = detail::walls_between(f.chambers, static_cast<std::size_t>(rho));
    detail::label_nef(f);
    return f;
}

/// Interior walls of the fan; boundary facets of Eff never appear.
inline const std::vector<Wall>& adjacency_graph(const ChamberFan& f) { return f.walls; }

/// Index of the chamber whose interior contains d.
inline std::size_t locate(const ChamberFan& f, std::span<const Integer> d) {
    const Cone eff = effective_cone(f.space);
    if (!contains(eff, d)) fail(ErrorCode::outside_effective, "class is not effective");
    if (!strictly_contains(eff, d)) fail(ErrorCode::boundary_point, "class lies on the boundary of Eff");
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < f.chambers.size(); ++i)
        for (const auto& p : f.chambers[i].pieces)
            if (contains(p, d)) {
                hits.push_back(i);
                break;
            }
    if (hits.size() != 1) fail(ErrorCode::boundary_point, "class lies on a wall");
    return hits.front();
}

inline std::size_t locate(const ChamberFan& f, const IntVector& d) { return locate(f, std::span<const Integer>(d)); }

inline const SblRecord* find_record(const SpaceSpec& s, std::span<const SblRecord> records) {
    for (const auto& r : records)
        if (r.matches(s)) return &r;
    return nullptr;
}

/// Removes the reference walls and attaches stable base locus labels.
inline ChamberFan sbl_merge(const ChamberFan& f, const SpaceSpec& s, std::span<const SblRecord> records) {
    const SblRecord* rec = find_record(s, records);
    if (!rec) fail(ErrorCode::no_reference_data, "no stable base locus data for " + s.name());

    std::vector<std::size_t> parent(f.chambers.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (const auto& removed : rec->remove_walls) {
        std::vector<RayVector> target;
        for (const auto& v : removed) target.push_back(primitive(v));
        detail::sort_unique(target);
        bool found = false;
        for (const auto& w : f.walls)
            if (w.rays == target) {
                parent[root(w.second)] = root(w.first);
                found = true;
            }
        if (!found) fail(ErrorCode::fixture_corrupt, "reference wall is not a wall of the fan");
    }

    ChamberFan out{s, {}, {}, f.note};
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < f.chambers.size(); ++i) {
        const std::size_t r = root(i);
        auto [it, fresh] = slot.emplace(r, out.chambers.size());
        if (fresh) {
            out.chambers.push_back(f.chambers[i]);
            out.chambers.back().label.clear();
            continue;
        }
        Chamber& c = out.chambers[it->second];
        c.pieces.insert(c.pieces.end(), f.chambers[i].pieces.begin(), f.chambers[i].pieces.end());
        c.rays.insert(c.rays.end(), f.chambers[i].rays.begin(), f.chambers[i].rays.end());
        detail::sort_unique(c.rays);
    }

    for (const auto& [rays, label] : rec->labels) {
        std::vector<RayVector> key;
        for (const auto& v : rays) key.push_back(primitive(v));
        detail::sort_unique(key);
        auto hit = std::find_if(out.chambers.begin(), out.chambers.end(),
                                [&](const Chamber& c) { return c.rays == key; });
        if (hit == out.chambers.end()) fail(ErrorCode::fixture_corrupt, "labelled chamber not found in the fan");
        hit->label = "SBL=" + label;
    }
    for (const auto& c : out.chambers)
        if (c.label.empty()) fail(ErrorCode::fixture_corrupt, "reference data leaves a chamber unlabelled");
    out.walls = detail::walls_between(out.chambers, static_cast<std::size_t>(picard_rank(s)));
    return out;
}

} // namespace conekit
