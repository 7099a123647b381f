#pragma once

#include "conekit/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef CONEKIT_FIXTURES_DIR
#define CONEKIT_FIXTURES_DIR "fixtures"
#endif

namespace conekit {

inline constexpr int fixture_version = 1;

inline std::filesystem::path default_fixtures_dir() { return CONEKIT_FIXTURES_DIR; }

/// Reads a bundled JSON document and checks its version and checksum.
inline Json load_fixture(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(ErrorCode::no_reference_data, "cannot open fixture " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    Json doc;
    try {
        doc = Json::parse(buf.str());
    } catch (const Json::exception& e) {
        fail(ErrorCode::fixture_corrupt, file.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("checksum") || !doc["checksum"].is_string())
        fail(ErrorCode::fixture_corrupt, file.string() + ": missing checksum");
    if (doc["checksum"].get<std::string>() != document_checksum(doc))
        fail(ErrorCode::fixture_corrupt, file.string() + ": checksum mismatch");
    if (doc.value("version", 0) != fixture_version)
        fail(ErrorCode::fixture_corrupt, file.string() + ": unsupported fixture version");
    return doc;
}

inline std::vector<SblRecord> parse_sbl_records(const Json& doc) {
    std::vector<SblRecord> out;
    for (const auto& r : doc.at("records")) {
        SblRecord rec;
        rec.space = space_from_json(r.at("space"));
        rec.any_m = r.at("any_m").get<bool>();
        rec.gkz_equals_mcd = r.at("gkz_equals_mcd").get<bool>();
        rec.chamber_count = r.at("chamber_count").get<std::size_t>();
        rec.sbl_chamber_count = r.at("sbl_chamber_count").get<std::size_t>();
        for (const auto& w : r.at("remove_walls")) {
            std::vector<IntVector> rays;
            for (const auto& v : w) rays.push_back(vector_from_json(v));
            rec.remove_walls.push_back(std::move(rays));
        }
        for (const auto& l : r.at("labels")) {
            std::vector<IntVector> rays;
            for (const auto& v : l.at("rays")) rays.push_back(vector_from_json(v));
            rec.labels.emplace_back(std::move(rays), l.at("label").get<std::string>());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

inline std::vector<SblRecord> load_sbl_records(const std::filesystem::path& dir = default_fixtures_dir()) {
    return parse_sbl_records(load_fixture(dir / "sbl_decompositions.json"));
}

inline Json load_expected_counts(const std::filesystem::path& dir = default_fixtures_dir()) {
    return load_fixture(dir / "expected_counts.json");
}

inline Json load_golden_cones(const std::filesystem::path& dir = default_fixtures_dir()) {
    return load_fixture(dir / "golden_cones.json");
}

/// Marks whether the GKZ fan is known to be the Mori chamber decomposition.
inline ChamberFan annotate(ChamberFan f, std::span<const SblRecord> records) {
    const SblRecord* rec = find_record(f.space, records);
    f.note = rec && rec->gkz_equals_mcd ? "GKZ=MCD" : "GKZ (refines MCD)";
    return f;
}

inline ChamberFan sbl_merge(const ChamberFan& f, const SpaceSpec& s) {
    const auto records = load_sbl_records();
    return sbl_merge(f, s, records);
}

} // namespace conekit
