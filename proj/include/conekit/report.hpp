#pragma once

#include "conekit/fan.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

namespace conekit {

using Json = nlohmann::json;

inline constexpr const char* tool_name = "conekit";
inline constexpr const char* tool_version = "1.0.0";

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
    return out;
}

/// Checksum of a document: hash of the compact dump with the checksum field removed.
inline std::string document_checksum(Json doc) {
    doc.erase("checksum");
    return "fnv1a64:" + hex64(fnv1a64(doc.dump()));
}

inline Json to_json(const SpaceSpec& s) {
    return {{"family", s.family_key()}, {"n", s.n}, {"m", s.m}, {"stage", s.stage}, {"name", s.name()}};
}

inline SpaceSpec space_from_json(const Json& j) {
    const std::string family = j.at("family").get<std::string>();
    const int n = j.at("n").get<int>();
    const int m = j.value("m", n);
    const int stage = j.value("stage", 0);
    SpaceSpec s;
    if (family == "qn") s = SpaceSpec::quadrics(n);
    else if (family == "xn") s = SpaceSpec::collineations(n);
    else if (family == "xnm") {
        if (m <= n) fail(ErrorCode::invalid_spec, "family xnm needs m > n");
        s = SpaceSpec::collineations(n, m);
    } else fail(ErrorCode::invalid_spec, "unknown family " + family);
    return stage ? s.at_stage(stage) : s;
}

inline Json to_json(std::span<const Integer> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

inline Json to_json(const RayVector& v) { return to_json(v.coords()); }

inline Json to_json(const std::vector<RayVector>& rays) {
    Json out = Json::array();
    for (const auto& r : rays) out.push_back(to_json(r));
    return out;
}

inline IntVector vector_from_json(const Json& j) {
    IntVector out;
    for (const auto& x : j) {
        Integer v;
        if (x.is_string()) {
            if (v.set_str(x.get<std::string>(), 10) != 0) fail(ErrorCode::fixture_corrupt, "bad integer string");
        } else if (x.is_number_integer()) {
            v = from_int64(x.get<std::int64_t>());
        } else {
            fail(ErrorCode::fixture_corrupt, "vector entries must be integers");
        }
        out.push_back(v);
    }
    return out;
}

struct ConeReport {
    SpaceSpec space;
    std::string cone;
    std::vector<std::string> basis;
    std::vector<RayVector> rays;
    std::optional<double> seconds;
    std::optional<unsigned> threads;

    friend bool operator==(const ConeReport& a, const ConeReport& b) {
        return a.space == b.space && a.cone == b.cone && a.basis == b.basis && a.rays == b.rays;
    }
};

inline Json meta_json(std::optional<double> seconds, std::optional<unsigned> threads) {
    Json meta = {{"tool", tool_name}, {"version", tool_version}};
    if (seconds) meta["duration_seconds"] = *seconds;
    if (threads) meta["threads"] = *threads;
    return meta;
}

inline Json to_json(const ConeReport& r) {
    return {{"space", to_json(r.space)}, {"cone", r.cone},          {"basis", r.basis},
            {"rays", to_json(r.rays)},   {"ray_count", r.rays.size()}, {"meta", meta_json(r.seconds, r.threads)}};
}

inline ConeReport cone_report_from_json(const Json& j) {
    ConeReport r;
    r.space = space_from_json(j.at("space"));
    r.cone = j.at("cone").get<std::string>();
    r.basis = j.at("basis").get<std::vector<std::string>>();
    for (const auto& v : j.at("rays")) r.rays.push_back(primitive(vector_from_json(v)));
    if (j.at("ray_count").get<std::size_t>() != r.rays.size()) fail(ErrorCode::fixture_corrupt, "ray_count mismatch");
    if (j.contains("meta")) {
        const auto& m = j["meta"];
        if (m.contains("duration_seconds")) r.seconds = m["duration_seconds"].get<double>();
        if (m.contains("threads")) r.threads = m["threads"].get<unsigned>();
    }
    return r;
}

inline Json to_json(const ChamberFan& f, std::optional<double> seconds = {}, std::optional<unsigned> threads = {}) {
    std::vector<RayVector> all;
    Json chambers = Json::array();
    for (const auto& c : f.chambers) {
        all.insert(all.end(), c.rays.begin(), c.rays.end());
        Json pieces = Json::array();
        for (const auto& p : c.pieces) pieces.push_back(to_json(extremal_rays(p)));
        chambers.push_back({{"rays", to_json(c.rays)},
                            {"sample", to_json(c.sample)},
                            {"label", c.label},
                            {"pieces", pieces}});
    }
    Json walls = Json::array();
    for (const auto& w : f.walls)
        walls.push_back({{"chambers", {w.first, w.second}}, {"normal", to_json(w.normal)}, {"rays", to_json(w.rays)}});
    detail::sort_unique(all);
    return {{"space", to_json(f.space)},
            {"basis", divisor_basis(f.space)},
            {"fan", {{"kind", f.note}, {"chamber_count", f.chambers.size()}, {"chambers", chambers}, {"walls", walls}}},
            {"rays", to_json(all)},
            {"ray_count", all.size()},
            {"meta", meta_json(seconds, threads)}};
}

inline std::string format_vector(std::span<const Integer> v) { return to_string(IntVector(v.begin(), v.end())); }

inline std::string to_text(const ConeReport& r) {
    std::ostringstream out;
    out << r.space.name() << " " << r.cone << " cone, basis (";
    for (std::size_t i = 0; i < r.basis.size(); ++i) out << (i ? "," : "") << r.basis[i];
    out << "), " << r.rays.size() << " rays\n";
    for (const auto& ray : r.rays) out << "  " << format_vector(ray.coords()) << "\n";
    if (r.seconds) out << "time " << *r.seconds << " s";
    if (r.threads) out << (r.seconds ? ", " : "") << "threads " << *r.threads;
    if (r.seconds || r.threads) out << "\n";
    return out.str();
}

inline std::string to_text(const ChamberFan& f) {
    std::ostringstream out;
    out << f.space.name() << " " << f.note << ": " << f.chambers.size() << " chambers, " << f.walls.size()
        << " interior walls\n";
    for (std::size_t i = 0; i < f.chambers.size(); ++i) {
        const auto& c = f.chambers[i];
        out << "  [" << i << "]";
        for (const auto& r : c.rays) out << " " << format_vector(r.coords());
        if (!c.label.empty()) out << "  " << c.label;
        out << "\n";
    }
    for (const auto& w : f.walls)
        out << "  wall " << w.first << "|" << w.second << " normal " << format_vector(w.normal.coords()) << "\n";
    return out.str();
}

} // namespace conekit
