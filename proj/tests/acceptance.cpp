// One PASS/FAIL line per acceptance criterion. Thresholds are fixed below.
#include "conekit/conekit.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>

#ifndef CONEKIT_CLI
#define CONEKIT_CLI "conekit"
#endif

using namespace conekit;

namespace {

constexpr double kExplicitRaysSeconds = 1.0;
constexpr double kCountSweepSeconds = 60.0;
constexpr double kBenchTargetQ10 = 5.0;
constexpr double kBenchTargetQ13 = 300.0;
constexpr double kBenchTargetQ14 = 1800.0;
constexpr unsigned kBenchThreads = 8;
constexpr double kFanSeconds = 5.0;
constexpr double kFormulaSeconds = 1.0;
constexpr double kFuzzSeconds = 30.0;
constexpr std::size_t kFuzzCones = 200;
constexpr std::uint64_t kFuzzSeed = 0x5eed;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string cmd = std::string("\"") + CONEKIT_CLI + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<RayVector> rays_of(std::initializer_list<IntVector> vs) {
    std::vector<RayVector> out;
    for (const auto& v : vs) out.push_back(primitive(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::string fmt(double s) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3f s", s);
    return b;
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::cout << "AC" << id << (id < 10 ? "  " : " ") << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
    failures += !ok;
}

template <class F>
void guarded(int id, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

void ac1() {
    const std::vector<RayVector> x3 =
        rays_of({int_vector({1, 0, 0}), int_vector({2, -1, 0}), int_vector({3, -2, -1}), int_vector({6, -3, -2})});
    const std::vector<RayVector> x4 =
        rays_of({int_vector({4, -3, -2, -1}), int_vector({3, -2, -1, 0}), int_vector({12, -8, -6, -3}),
                 int_vector({1, 0, 0, 0}), int_vector({2, -1, 0, 0}), int_vector({8, -4, -3, -2}),
                 int_vector({16, -11, -6, -4}), int_vector({9, -4, -3, 0})});
    bool ok = true;
    std::string detail;
    for (const auto& [n, want] : {std::pair{3, x3}, std::pair{4, x4}}) {
        const auto t0 = Clock::now();
        const Run r = run_cli("cone --family xn --n " + std::to_string(n) + " --cone mov --format json");
        const double t = seconds_since(t0);
        std::vector<RayVector> got;
        if (r.status == 0) {
            const Json doc = Json::parse(r.out);
            for (const auto& v : doc.at("rays")) got.push_back(primitive(vector_from_json(v)));
        }
        const bool hit = r.status == 0 && got == want && t < kExplicitRaysSeconds;
        ok = ok && hit;
        detail += "X(" + std::to_string(n) + ") " + std::to_string(got.size()) + " rays " + (got == want ? "exact" : "WRONG") +
                  " in " + fmt(t) + "; ";
    }
    report(1, ok, detail + "limit " + fmt(kExplicitRaysSeconds) + " each");
}

void ac2() {
    const auto t0 = Clock::now();
    std::size_t bad = 0, checked = 0;
    for (int n = 2; n <= 10; ++n)
        for (const auto& s : {SpaceSpec::collineations(n), SpaceSpec::quadrics(n)}) {
            bad += extremal_rays(movable_cone(s)).size() != (std::size_t{1} << (n - 1));
            ++checked;
        }
    for (int n = 1; n <= 8; ++n)
        for (int m = n + 1; m <= n + 2; ++m) {
            bad += extremal_rays(movable_cone(SpaceSpec::collineations(n, m))).size() != (std::size_t{1} << (n - 1)) + 1;
            ++checked;
        }
    const double t = seconds_since(t0);
    report(2, bad == 0 && t < kCountSweepSeconds,
           std::to_string(checked - bad) + "/" + std::to_string(checked) + " ray counts match in " + fmt(t) + " (limit " +
               fmt(kCountSweepSeconds) + ")");
}

void ac3() {
    const unsigned saved = threads();
    set_threads(kBenchThreads);
    bool counts_ok = true;
    std::string detail;
    const std::array<std::tuple<int, std::size_t, double>, 3> rows{
        {{10, 512, kBenchTargetQ10}, {13, 4096, kBenchTargetQ13}, {14, 8192, kBenchTargetQ14}}};
    for (const auto& [n, want, target] : rows) {
        const BenchRecord r = bench_movable(SpaceSpec::quadrics(n));
        counts_ok = counts_ok && r.measured == want;
        detail += "Q(" + std::to_string(n) + ") " + std::to_string(r.measured) + " rays " + fmt(r.seconds) +
                  (r.seconds < target ? "" : " (over soft target " + fmt(target) + ")") + "; ";
    }
    set_threads(saved);
    report(3, counts_ok, detail + "threads " + std::to_string(kBenchThreads));
}

void ac4() {
    struct Case {
        SpaceSpec s;
        std::size_t gkz;
        std::optional<std::size_t> sbl;
    };
    std::vector<Case> cases{{SpaceSpec::collineations(3), 9, 8},    {SpaceSpec::quadrics(3), 9, 8},
                            {SpaceSpec::collineations(2, 3), 5, 4}, {SpaceSpec::collineations(2, 4), 5, 4},
                            {SpaceSpec::collineations(2, 5), 5, 4}, {SpaceSpec::collineations(2), 3, 3},
                            {SpaceSpec::quadrics(2), 3, 3}};
    for (int m = 2; m <= 5; ++m) cases.push_back({SpaceSpec::collineations(1, m), 2, std::nullopt});
    for (int n = 2; n <= 6; ++n) {
        const auto k = static_cast<std::size_t>(n + 1);
        cases.push_back({SpaceSpec::collineations(n).at_stage(1), k, std::nullopt});
        cases.push_back({SpaceSpec::collineations(n, n + 1).at_stage(1), k, std::nullopt});
        cases.push_back({SpaceSpec::quadrics(n).at_stage(1), k, std::nullopt});
    }
    const auto records = load_sbl_records();
    std::size_t bad = 0;
    double worst = 0;
    std::string misses;
    for (const auto& c : cases) {
        const auto t0 = Clock::now();
        const auto fan = gkz_fan(c.s);
        std::size_t merged = 0;
        if (c.sbl) merged = sbl_merge(fan, c.s, records).chambers.size();
        const double t = seconds_since(t0);
        worst = std::max(worst, t);
        const bool hit = fan.chambers.size() == c.gkz && (!c.sbl || merged == *c.sbl) && t < kFanSeconds;
        if (!hit) {
            ++bad;
            misses += " " + c.s.name();
        }
    }
    report(4, bad == 0,
           std::to_string(cases.size() - bad) + "/" + std::to_string(cases.size()) + " fans match, slowest " + fmt(worst) +
               " (limit " + fmt(kFanSeconds) + ")" + (misses.empty() ? "" : "; mismatched:" + misses));
}

void ac5() {
    std::size_t mori_bad = 0, moving_bad = 0, total = 0;
    for (int n = 1; n <= 6; ++n)
        for (int m = n; m <= 6; ++m) {
            const SpaceSpec s = SpaceSpec::collineations(n, m);
            if (picard_rank(s) < 2) continue;
            ++total;
            mori_bad += !(mori_cone(s) == detail::mori_oracle(s));
            moving_bad += !(moving_curve_cone(s) == detail::moving_curve_oracle(s));
        }
    report(5, mori_bad + moving_bad == 0,
           "Mori " + std::to_string(total - mori_bad) + "/" + std::to_string(total) + ", moving curves " +
               std::to_string(total - moving_bad) + "/" + std::to_string(total) + " exact on n <= m <= 6");
}

void ac6() {
    std::size_t bad = 0, total = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int m = n; m <= 6; ++m) {
            bad += !is_fano(SpaceSpec::collineations(n, m));
            ++total;
        }
        bad += !is_fano(SpaceSpec::quadrics(n));
        ++total;
    }
    const bool x31 = !is_fano(SpaceSpec::collineations(3).at_stage(1));
    const bool x21 = is_fano(SpaceSpec::collineations(2).at_stage(1));
    const Integer p = pairing(int_vector({1, -2, 1}), anticanonical_class(SpaceSpec::collineations(3)).coords);
    report(6, bad == 0 && x31 && x21 && p == 3,
           std::to_string(total - bad) + "/" + std::to_string(total) + " full spaces Fano; X(3)_1 " +
               (x31 ? "not Fano" : "FANO") + ", X(2)_1 " + (x21 ? "Fano" : "NOT FANO") + ", -K.(l-2e_1+e_2) = " +
               p.get_str());
}

void ac7() {
    const auto t0 = Clock::now();
    std::size_t bad = 0;
    for (long n = 1; n <= 12; ++n)
        for (long k = 0; k < n; ++k) bad += weyl_dim(n, k).value != dim_section_space(n, k).value;
    for (long n = 2; n <= 12; ++n) bad += plucker_relation_count(n, 1).value != binomial(n + 1, 4);
    bad += cox_generator_count(SpaceSpec::quadrics(2)).value != 14;
    for (int m = 2; m <= 12; ++m) bad += dim_cox(SpaceSpec::collineations(1, m)).value != 2 * m + 3;
    bad += dim_cox(SpaceSpec::quadrics(2)).value != 7;
    bad += dim_cox(SpaceSpec::collineations(2)).value != 10;
    const double t = seconds_since(t0);
    report(7, bad == 0 && t < kFormulaSeconds,
           std::to_string(bad) + " mismatches in " + fmt(t) + " (limit " + fmt(kFormulaSeconds) + ")");
}

void ac8() {
    auto specs = detail::full_specs(5, 6);
    const auto staged = detail::staged_specs(5);
    specs.insert(specs.end(), staged.begin(), staged.end());
    std::size_t bad = 0;
    std::string misses;
    const auto t0 = Clock::now();
    for (const auto& s : specs)
        if (!(movable_cone(s) == movable_cone_brute_force(s))) {
            ++bad;
            misses += " " + s.name();
        }
    report(8, bad == 0,
           std::to_string(specs.size() - bad) + "/" + std::to_string(specs.size()) +
               " specs (n <= 5, m <= 6, all stages) identical in " + fmt(seconds_since(t0)) +
               (misses.empty() ? "" : "; differ:" + misses));
}

void ac9() {
    const auto t0 = Clock::now();
    const FuzzReport f = engine_fuzz(kFuzzCones, kFuzzSeed);
    const double t = seconds_since(t0);
    report(9, f.ok() && f.cones == kFuzzCones && t < kFuzzSeconds,
           std::to_string(f.cones) + " cones; failures involution " + std::to_string(f.involution_failures) +
               ", consistency " + std::to_string(f.consistency_failures) + ", extremality " +
               std::to_string(f.extremality_failures) + ", interior " + std::to_string(f.interior_failures) + " in " +
               fmt(t) + " (limit " + fmt(kFuzzSeconds) + ")");
}

void ac10() {
    const Run a = run_cli("--threads 1 verify --suite all");
    const Run b = run_cli("--threads 3 verify --suite all");
    const bool same = a.out == b.out && !a.out.empty();
    report(10, same && a.status == 0 && b.status == 0,
           std::string("verify output ") + (same ? "identical" : "DIFFERS") + " for 1 and 3 threads (" +
               std::to_string(a.out.size()) + " bytes), exit codes " + std::to_string(a.status) + "/" +
               std::to_string(b.status));
}

} // namespace

int main() {
    guarded(1, ac1);
    guarded(2, ac2);
    guarded(3, ac3);
    guarded(4, ac4);
    guarded(5, ac5);
    guarded(6, ac6);
    guarded(7, ac7);
    guarded(8, ac8);
    guarded(9, ac9);
    guarded(10, ac10);
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
