#include "conekit/catalog.hpp"

#include <gtest/gtest.h>

using namespace conekit;

namespace {

std::vector<RayVector> sorted(std::vector<IntVector> vs) {
    std::vector<RayVector> out;
    for (auto& v : vs) out.push_back(primitive(std::move(v)));
    std::sort(out.begin(), out.end());
    return out;
}

// Number of k-element subsets of an r-element set, by counting bitmasks.
long subsets(int r, int k) {
    long c = 0;
    for (unsigned mask = 0; mask < (1u << r); ++mask) c += __builtin_popcount(mask) == k;
    return c;
}

const SpaceSpec X3 = SpaceSpec::collineations(3);

} // namespace

TEST(Space, PicardRanks) {
    EXPECT_EQ(picard_rank(SpaceSpec::collineations(2, 3)), 3);
    EXPECT_EQ(picard_rank(X3), 3);
    EXPECT_EQ(picard_rank(SpaceSpec::quadrics(3)), 3);
    EXPECT_EQ(picard_rank(SpaceSpec::collineations(4).at_stage(2)), 3);
    EXPECT_EQ(picard_rank(SpaceSpec::collineations(1)), 1);
}

TEST(Space, Validation) {
    EXPECT_THROW(SpaceSpec::collineations(4, 3), Error);
    EXPECT_THROW(SpaceSpec::collineations(0), Error);
    EXPECT_THROW(X3.at_stage(0), Error);
    EXPECT_THROW(X3.at_stage(3), Error);
    EXPECT_EQ(X3.at_stage(1).name(), "X(3)_1");
    EXPECT_EQ(SpaceSpec::collineations(2, 4).name(), "X(2,4)");
}

TEST(Divisors, BoundaryClasses) {
    EXPECT_EQ(divisor_D(X3, 1).coords, int_vector({1, 0, 0}));
    EXPECT_EQ(divisor_D(X3, 3).coords, int_vector({3, -2, -1}));
    EXPECT_EQ(divisor_D(X3, 4).coords, int_vector({4, -3, -2}));
    EXPECT_EQ(divisor_E(X3, 1).coords, int_vector({0, 1, 0}));
    EXPECT_EQ(divisor_E(X3, 3).coords, int_vector({4, -3, -2}));
    EXPECT_EQ(divisor_E(SpaceSpec::quadrics(4), 4).coords, int_vector({5, -4, -3, -2}));
    EXPECT_EQ(divisor_D(X3.at_stage(1), 3).coords, int_vector({3, -2}));
    EXPECT_THROW(divisor_D(X3, 5), Error);
    EXPECT_THROW(divisor_E(X3.at_stage(1), 2), Error);
}

TEST(Divisors, Anticanonical) {
    EXPECT_EQ(anticanonical_class(X3).coords, int_vector({16, -8, -3}));
    EXPECT_EQ(anticanonical_class(X3.at_stage(1)).coords, int_vector({16, -8}));
    EXPECT_EQ(anticanonical_class(SpaceSpec::quadrics(2)).coords, int_vector({6, -2}));
    EXPECT_EQ(anticanonical_class(SpaceSpec::collineations(2)).coords, int_vector({9, -3}));
    auto k = canonical_class(X3).coords;
    for (auto& x : k) x = -x;
    EXPECT_EQ(k, anticanonical_class(X3).coords);
}

TEST(Grading, Collineations3) {
    const auto g = grading_matrix(X3);
    std::vector<std::pair<IntVector, long>> cols;
    for (const auto& c : g.columns) cols.emplace_back(c.degree.coords, c.multiplicity.get_si());
    const std::vector<std::pair<IntVector, long>> want{
        {int_vector({1, 0, 0}), 16}, {int_vector({2, -1, 0}), 36}, {int_vector({3, -2, -1}), 16},
        {int_vector({4, -3, -2}), 1}, {int_vector({0, 1, 0}), 1},  {int_vector({0, 0, 1}), 1}};
    EXPECT_EQ(cols, want);
    EXPECT_EQ(g.total(), 71);
}

TEST(Grading, SmallTotals) {
    EXPECT_EQ(grading_matrix(SpaceSpec::quadrics(2)).total(), 14);
    EXPECT_EQ(grading_matrix(SpaceSpec::collineations(1, 2)).total(), 10);
}

TEST(Grading, MinorCountsMatchSubsetEnumeration) {
    for (int n = 1; n <= 5; ++n)
        for (int m = n + 1; m <= 6; ++m) {
            const auto g = grading_matrix(SpaceSpec::collineations(n, m));
            for (int k = 1; k <= n + 1; ++k)
                EXPECT_EQ(g.columns[static_cast<std::size_t>(k - 1)].multiplicity, subsets(n + 1, k) * subsets(m + 1, k));
        }
}

TEST(Cones, Effective) {
    EXPECT_EQ(extremal_rays(effective_cone(X3)),
              sorted({int_vector({0, 1, 0}), int_vector({0, 0, 1}), int_vector({4, -3, -2})}));
    EXPECT_EQ(extremal_rays(effective_cone(SpaceSpec::collineations(2, 3))),
              sorted({int_vector({0, 1, 0}), int_vector({0, 0, 1}), int_vector({3, -2, -1})}));
    EXPECT_EQ(extremal_rays(effective_cone(X3.at_stage(1))), sorted({int_vector({0, 1}), int_vector({4, -3})}));
}

TEST(Cones, DegenerateSpace) {
    try {
        effective_cone(SpaceSpec::collineations(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::degenerate_space);
    }
    EXPECT_THROW(movable_cone(SpaceSpec::quadrics(1)), Error);
    EXPECT_TRUE(is_fano(SpaceSpec::quadrics(1)));
}

TEST(Cones, Movable) {
    EXPECT_EQ(extremal_rays(movable_cone(X3)), sorted({int_vector({1, 0, 0}), int_vector({2, -1, 0}),
                                                       int_vector({3, -2, -1}), int_vector({6, -3, -2})}));
    EXPECT_EQ(extremal_rays(movable_cone(SpaceSpec::collineations(2))), sorted({int_vector({1, 0}), int_vector({2, -1})}));
    EXPECT_EQ(extremal_rays(movable_cone(SpaceSpec::collineations(4))),
              sorted({int_vector({4, -3, -2, -1}), int_vector({3, -2, -1, 0}), int_vector({12, -8, -6, -3}),
                      int_vector({1, 0, 0, 0}), int_vector({2, -1, 0, 0}), int_vector({8, -4, -3, -2}),
                      int_vector({16, -11, -6, -4}), int_vector({9, -4, -3, 0})}));
}

TEST(Cones, ShortcutMatchesBruteForce) {
    for (const auto& s : {X3, SpaceSpec::quadrics(3), SpaceSpec::collineations(2, 4), SpaceSpec::collineations(3, 4),
                          X3.at_stage(2), SpaceSpec::quadrics(4).at_stage(2)})
        EXPECT_EQ(movable_cone(s), movable_cone_brute_force(s)) << s.name();
}

TEST(Cones, CurveCones) {
    EXPECT_EQ(extremal_rays(mori_cone(X3)), sorted({int_vector({1, -2, 1}), int_vector({0, 1, -2}), int_vector({0, 0, 1})}));
    EXPECT_EQ(extremal_rays(mori_cone(SpaceSpec::collineations(2))), sorted({int_vector({0, 1}), int_vector({1, -2})}));
    EXPECT_EQ(extremal_rays(moving_curve_cone(X3)),
              sorted({int_vector({1, 0, 0}), int_vector({3, -4, 0}), int_vector({1, 0, -2})}));
    EXPECT_EQ(extremal_rays(moving_curve_cone(SpaceSpec::collineations(2))), sorted({int_vector({1, 0}), int_vector({2, -3})}));
}

// Curve cones pair non-negatively with their dual divisor cones, and every
// facet of the divisor cone is cut out by one curve ray.
TEST(Cones, PairingDuality) {
    for (const auto& s : {X3, SpaceSpec::collineations(2, 5), SpaceSpec::quadrics(4), X3.at_stage(1)}) {
        const auto nef = extremal_rays(nef_cone(s));
        const auto eff = extremal_rays(effective_cone(s));
        for (const auto& c : extremal_rays(mori_cone(s)))
            for (const auto& d : nef) EXPECT_GE(pairing(c.coords(), d.coords()), 0);
        for (const auto& c : extremal_rays(moving_curve_cone(s)))
            for (const auto& d : eff) EXPECT_GE(pairing(c.coords(), d.coords()), 0);
    }
}

TEST(Pairing, Values) {
    EXPECT_EQ(pairing(int_vector({1, -2, 1}), divisor_D(X3, 2).coords), 0);
    EXPECT_EQ(pairing(int_vector({1, -2, 1}), anticanonical_class(X3).coords), 3);
    EXPECT_EQ(pairing(int_vector({0, 0, 1}), divisor_D(SpaceSpec::collineations(2, 3), 3).coords), 1);
    EXPECT_THROW(pairing(int_vector({1, 0}), int_vector({1, 0, 0})), Error);
}

TEST(Fano, Table) {
    EXPECT_TRUE(is_fano(X3));
    EXPECT_TRUE(is_fano(SpaceSpec::quadrics(4)));
    EXPECT_FALSE(is_fano(X3.at_stage(1)));
    EXPECT_TRUE(is_fano(SpaceSpec::collineations(2).at_stage(1)));
}

TEST(Cones, NamedCones) {
    EXPECT_EQ(named_cone(X3, "mov"), movable_cone(X3));
    EXPECT_THROW(named_cone(X3, "ample"), Error);
    EXPECT_TRUE(is_curve_cone("mori"));
    EXPECT_FALSE(is_curve_cone("nef"));
}
