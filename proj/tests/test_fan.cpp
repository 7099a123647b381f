#include "conekit/fixtures.hpp"

#include <gtest/gtest.h>

using namespace conekit;

namespace {

std::vector<RayVector> sorted(std::vector<IntVector> vs) {
    std::vector<RayVector> out;
    for (auto& v : vs) out.push_back(primitive(std::move(v)));
    std::sort(out.begin(), out.end());
    return out;
}

const SpaceSpec X3 = SpaceSpec::collineations(3);

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}

} // namespace

TEST(Fan, CollineationsThree) {
    const auto f = gkz_fan(X3);
    EXPECT_EQ(f.chambers.size(), 9u);
    EXPECT_EQ(f.note, "GKZ");
    std::size_t nef = 0;
    for (const auto& c : f.chambers) {
        nef += c.label == "Nef";
        EXPECT_EQ(c.rays.size(), 3u); // every GKZ chamber of X(3) is simplicial
        EXPECT_TRUE(strictly_contains(c.pieces.front(), c.sample.coords()));
    }
    EXPECT_EQ(nef, 1u);
}

TEST(Fan, ChambersCoverEffectiveCone) {
    // Every Eff ray is a ray of some chamber, and the samples are in distinct chambers.
    for (const auto& s : {X3, SpaceSpec::collineations(2, 4), SpaceSpec::collineations(4).at_stage(2)}) {
        const auto f = gkz_fan(s);
        for (const auto& r : extremal_rays(effective_cone(s))) {
            bool seen = false;
            for (const auto& c : f.chambers) seen = seen || std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end();
            EXPECT_TRUE(seen) << s.name();
        }
        for (std::size_t i = 0; i < f.chambers.size(); ++i) EXPECT_EQ(locate(f, f.chambers[i].sample.coords()), i);
    }
}

TEST(Fan, WallsSeparateNeighbours) {
    const auto f = gkz_fan(X3);
    for (const auto& w : adjacency_graph(f)) {
        const auto& a = f.chambers[w.first].sample;
        const auto& b = f.chambers[w.second].sample;
        const int sa = sgn(dot(w.normal, a)), sb = sgn(dot(w.normal, b));
        EXPECT_NE(sa, 0);
        EXPECT_EQ(sa, -sb);
        for (const auto& r : w.rays) EXPECT_EQ(dot(w.normal, r), 0);
    }
}

TEST(Fan, RankTwo) {
    const auto f = gkz_fan(SpaceSpec::collineations(2));
    ASSERT_EQ(f.chambers.size(), 3u);
    EXPECT_EQ(f.walls.size(), 2u);
    EXPECT_EQ(f.chambers[1].rays, sorted({int_vector({1, 0}), int_vector({2, -1})}));
    EXPECT_EQ(gkz_fan(SpaceSpec::collineations(1, 4)).chambers.size(), 2u);
    EXPECT_EQ(gkz_fan(SpaceSpec::quadrics(6).at_stage(1)).chambers.size(), 7u);
}

TEST(Fan, Unsupported) {
    EXPECT_EQ(code_of([] { gkz_fan(SpaceSpec::collineations(4)); }), ErrorCode::rank_unsupported);
    EXPECT_EQ(code_of([] { gkz_fan(SpaceSpec::quadrics(1)); }), ErrorCode::degenerate_space);
}

TEST(Locate, ErrorsAndHits) {
    const auto f = gkz_fan(X3);
    EXPECT_EQ(f.chambers[locate(f, anticanonical_class(X3).coords)].label, "Nef");
    EXPECT_EQ(code_of([&] { locate(f, int_vector({-1, 0, 0})); }), ErrorCode::outside_effective);
    EXPECT_EQ(code_of([&] { locate(f, int_vector({0, 0, 1})); }), ErrorCode::boundary_point);
    // D_3 lies on walls between chambers
    EXPECT_EQ(code_of([&] { locate(f, int_vector({3, -2, -1})); }), ErrorCode::boundary_point);
}

TEST(Sbl, MergeWithBundledData) {
    const auto records = load_sbl_records();
    const auto merged = sbl_merge(gkz_fan(X3), X3, records);
    EXPECT_EQ(merged.chambers.size(), 8u);
    std::size_t two_pieces = 0;
    for (const auto& c : merged.chambers) {
        EXPECT_EQ(c.label.rfind("SBL=", 0), 0u);
        two_pieces += c.pieces.size() == 2;
    }
    EXPECT_EQ(two_pieces, 1u);
    EXPECT_EQ(merged.chambers[locate(merged, anticanonical_class(X3).coords)].label, "SBL=∅");
    EXPECT_EQ(sbl_merge(gkz_fan(SpaceSpec::collineations(2, 7)), SpaceSpec::collineations(2, 7), records).chambers.size(), 4u);
}

TEST(Sbl, HandMadeRecords) {
    const SpaceSpec s = SpaceSpec::collineations(2);
    const auto f = gkz_fan(s);
    // walls of a rank-2 fan are single rays; drop the one at D_1
    SblRecord rec{s, false, true, 3, 2, {{int_vector({1, 0})}}, {}};
    rec.labels = {{{int_vector({0, 1}), int_vector({1, 0}), int_vector({2, -1})}, "A"},
                  {{int_vector({2, -1}), int_vector({3, -2})}, "B"}};
    const std::vector<SblRecord> recs{rec};
    const auto merged = sbl_merge(f, s, recs);
    ASSERT_EQ(merged.chambers.size(), 2u);
    EXPECT_EQ(merged.walls.size(), 1u);

    auto missing = rec;
    missing.labels.pop_back();
    EXPECT_EQ(code_of([&] { sbl_merge(f, s, std::vector<SblRecord>{missing}); }), ErrorCode::fixture_corrupt);
    auto bad_wall = rec;
    bad_wall.remove_walls = {{int_vector({5, -1})}};
    EXPECT_EQ(code_of([&] { sbl_merge(f, s, std::vector<SblRecord>{bad_wall}); }), ErrorCode::fixture_corrupt);
    EXPECT_EQ(code_of([&] { sbl_merge(f, SpaceSpec::quadrics(2), recs); }), ErrorCode::no_reference_data);
}

TEST(Sbl, Annotation) {
    const auto records = load_sbl_records();
    EXPECT_EQ(annotate(gkz_fan(X3), records).note, "GKZ=MCD");
    EXPECT_EQ(annotate(gkz_fan(SpaceSpec::collineations(4).at_stage(2)), records).note, "GKZ (refines MCD)");
}
