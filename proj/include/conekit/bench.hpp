#pragma once

#include "conekit/fixtures.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace conekit {

struct BenchRecord {
    SpaceSpec space;
    std::optional<std::size_t> expected;
    std::size_t measured = 0;
    double seconds = 0;
    unsigned threads = 1;
    std::optional<std::string> reference_seconds;

    bool ok() const { return !expected || *expected == measured; }
};

/// Parses "14" or "10..12".
inline std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const int lo = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        const int hi = std::stoi(b, &used);
        if (used != b.size() || hi < lo) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        fail(ErrorCode::invalid_spec, "bad range '" + text + "', expected N or A..B");
    }
}

/// Ray count predicted for the movable cone of a full space, if known.
inline std::optional<std::size_t> expected_movable_rays(const SpaceSpec& s) {
    if (!s.is_full() || s.n < 1 || s.n > 62) return std::nullopt;
    const std::size_t base = std::size_t{1} << (s.n - 1);
    return s.family == Family::collineations ? base + 1 : base;
}

inline BenchRecord bench_movable(const SpaceSpec& s, const Json* counts = nullptr) {
    BenchRecord r{s, expected_movable_rays(s), 0, 0, threads(), std::nullopt};
    if (counts)
        for (const auto& b : counts->at("bench"))
            if (space_from_json(b.at("space")) == s) {
                r.expected = b.at("rays").get<std::size_t>();
                r.reference_seconds = b.at("reference_seconds").get<std::string>();
            }
    const auto t0 = std::chrono::steady_clock::now();
    r.measured = extremal_rays(movable_cone(s)).size();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string format_bench(const std::vector<BenchRecord>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "space" << std::setw(10) << "expected" << std::setw(10) << "rays"
        << std::setw(12) << "seconds" << std::setw(9) << "threads" << "reference\n";
    for (const auto& r : rows) {
        out << std::setw(12) << r.space.name() << std::setw(10) << (r.expected ? std::to_string(*r.expected) : "-")
            << std::setw(10) << r.measured << std::setw(12) << std::fixed << std::setprecision(3) << r.seconds
            << std::setw(9) << r.threads << (r.reference_seconds ? *r.reference_seconds : "-")
            << (r.ok() ? "" : "  MISMATCH") << "\n";
    }
    return out.str();
}

inline Json to_json(const BenchRecord& r) {
    Json j = {{"space", to_json(r.space)}, {"rays", r.measured}, {"duration_seconds", r.seconds}, {"threads", r.threads}};
    j["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
    if (r.reference_seconds) j["reference_seconds"] = *r.reference_seconds;
    return j;
}

} // namespace conekit
