#include "conekit/cone.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace conekit;

namespace {

std::vector<RayVector> sorted(std::vector<IntVector> vs) {
    std::vector<RayVector> out;
    for (auto& v : vs) out.push_back(primitive(std::move(v)));
    std::sort(out.begin(), out.end());
    return out;
}

// Extreme rays of a pointed full-dimensional cone {x : <a_i, x> >= 0} by trying every
// (d-1)-subset of the normals; exponential but independent of the double description code.
std::vector<RayVector> rays_by_subsets(std::size_t d, const std::vector<IntVector>& normals) {
    std::vector<RayVector> out;
    const std::size_t k = normals.size();
    std::vector<bool> pick(k, false);
    std::fill(pick.end() - static_cast<long>(d - 1), pick.end(), true);
    do {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < k; ++i)
            if (pick[i]) rows.push_back(normals[i]);
        const auto ker = kernel_basis(IntMatrix::from_rows(rows, d));
        if (ker.size() != 1) continue;
        for (const RayVector& cand : {ker[0], -ker[0]}) {
            bool ok = true;
            for (const auto& a : normals) ok = ok && dot(cand, a) >= 0;
            if (ok) out.push_back(cand);
        }
    } while (std::next_permutation(pick.begin(), pick.end()));
    detail::sort_unique(out);
    return out;
}

} // namespace

TEST(Cone, PositiveOrthant) {
    const Cone c = cone_from_halfspaces(3, {int_vector({1, 0, 0}), int_vector({0, 1, 0}), int_vector({0, 0, 1})});
    EXPECT_EQ(extremal_rays(c), sorted({int_vector({1, 0, 0}), int_vector({0, 1, 0}), int_vector({0, 0, 1})}));
    EXPECT_TRUE(c.is_pointed());
    EXPECT_TRUE(c.is_full_dimensional());
    EXPECT_EQ(dual(c), c);
}

TEST(Cone, SquarePyramid) {
    const Cone c = cone_from_rays(3, {int_vector({1, 1, 1}), int_vector({-1, 1, 1}), int_vector({1, -1, 1}),
                                      int_vector({-1, -1, 1}), int_vector({0, 0, 1})});
    EXPECT_EQ(extremal_rays(c).size(), 4u);
    EXPECT_EQ(c.facets(), sorted({int_vector({1, 0, 1}), int_vector({-1, 0, 1}), int_vector({0, 1, 1}),
                                  int_vector({0, -1, 1})}));
    EXPECT_TRUE(strictly_contains(c, interior_point(c).coords()));
    EXPECT_FALSE(contains(c, int_vector({2, 0, 1})));
}

TEST(Cone, HalfPlaneHasLineality) {
    const Cone c = cone_from_halfspaces(2, {int_vector({0, 1})});
    EXPECT_EQ(c.lineality_dimension(), 1u);
    EXPECT_FALSE(c.is_pointed());
    EXPECT_EQ(c.dimension(), 2u);
    EXPECT_THROW(extremal_rays(c), Error);
    EXPECT_EQ(c.rays(), sorted({int_vector({-1, 0}), int_vector({1, 0}), int_vector({0, 1})}));
}

TEST(Cone, LowerDimensional) {
    const Cone c = cone_from_rays(3, {int_vector({1, 0, 0}), int_vector({0, 1, 0})});
    EXPECT_EQ(c.dimension(), 2u);
    EXPECT_FALSE(c.is_full_dimensional());
    EXPECT_THROW(interior_point(c), Error);
    EXPECT_EQ(dual(c).lineality_dimension(), 1u);
}

TEST(Cone, TrivialCones) {
    EXPECT_EQ(zero_cone(3).dimension(), 0u);
    EXPECT_EQ(full_space(3).lineality_dimension(), 3u);
    EXPECT_EQ(dual(zero_cone(3)), full_space(3));
    EXPECT_TRUE(contains(full_space(2), int_vector({-7, 3})));
}

TEST(Cone, RejectsWrongLength) {
    try {
        cone_from_rays(3, {int_vector({1, 0})});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
    }
}

TEST(Cone, IntersectionOfOrthantAndHalfspace) {
    const Cone a = cone_from_rays(2, {int_vector({1, 0}), int_vector({0, 1})});
    const Cone b = cone_from_halfspaces(2, {int_vector({1, -1})});
    EXPECT_EQ(extremal_rays(intersect(a, b)), sorted({int_vector({1, 0}), int_vector({1, 1})}));
}

// Random polytopal cones: double description against the subset enumeration above.
TEST(Cone, AgreesWithSubsetEnumeration) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(-3, 3), cnt(0, 5);
    for (int t = 0; t < 150; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
        std::vector<IntVector> normals;
        for (std::size_t i = 0; i < d; ++i) {
            IntVector v(d, 0);
            v[i] = 1;
            normals.push_back(v);
        }
        for (int i = cnt(rng); i > 0; --i) {
            IntVector v(d);
            for (auto& x : v) x = e(rng);
            v[0] = abs(v[0]) + 1; // keeps e_1 strictly inside, so the cone stays full-dimensional
            normals.push_back(v);
        }
        const Cone c = cone_from_halfspaces(d, std::span<const IntVector>(normals));
        ASSERT_TRUE(c.is_full_dimensional());
        EXPECT_EQ(extremal_rays(c), rays_by_subsets(d, normals)) << "trial " << t;
    }
}

TEST(Cone, ResultIndependentOfThreadCount) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> e(-5, 5);
    std::vector<IntVector> gens;
    for (int i = 0; i < 40; ++i) {
        IntVector v(5);
        for (auto& x : v) x = e(rng);
        v[0] = abs(v[0]) + 1;
        gens.push_back(v);
    }
    const unsigned saved = threads();
    set_threads(1);
    const auto one = cone_from_rays(5, std::span<const IntVector>(gens)).facets();
    set_threads(4);
    const auto four = cone_from_rays(5, std::span<const IntVector>(gens)).facets();
    set_threads(saved);
    EXPECT_EQ(one, four);
}

TEST(Cone, PropertiesOnRandomInput) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> e(-5, 5), dim(1, 5), cnt(0, 8);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = static_cast<std::size_t>(dim(rng));
        std::vector<IntVector> gens;
        for (int i = cnt(rng); i > 0; --i) {
            IntVector v(d);
            for (auto& x : v) x = e(rng);
            gens.push_back(v);
        }
        const Cone c = cone_from_rays(d, std::span<const IntVector>(gens));
        EXPECT_EQ(dual(dual(c)), c);
        for (const auto& g : gens) EXPECT_TRUE(contains(c, g));
        for (const auto& r : c.rays())
            for (const auto& f : c.facets()) EXPECT_GE(dot(f, r), 0);
        EXPECT_EQ(c.dimension() + dual(c).lineality_dimension(), d);
    }
}
