#include "conekit/conekit.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace conekit;

namespace {

struct SpaceFlags {
    std::string family;
    std::string n;
    int m = 0;
    int stage = 0;
};

void add_space_flags(CLI::App* cmd, SpaceFlags& f, bool n_range = false) {
    cmd->add_option("--family", f.family, "xnm | xn | qn")->required()->check(CLI::IsMember({"xnm", "xn", "qn"}));
    cmd->add_option("--n", f.n, n_range ? "n or a range A..B" : "n")->required();
    cmd->add_option("--m", f.m, "m (xnm only)");
    cmd->add_option("--stage", f.stage, "intermediate blow-up stage, 0 for the full space");
}

SpaceSpec make_space(const std::string& family, int n, int m, int stage) {
    Json j = {{"family", family}, {"n", n}, {"stage", stage}};
    if (m) j["m"] = m;
    else if (family == "xnm") fail(ErrorCode::invalid_spec, "family xnm needs --m");
    return space_from_json(j);
}

int parse_n(const std::string& text) {
    const auto [lo, hi] = parse_range(text);
    if (lo != hi) fail(ErrorCode::invalid_spec, "--n takes a single value here");
    return lo;
}

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::invalid_spec:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::degenerate_ray: return 2;
    case ErrorCode::degenerate_space:
    case ErrorCode::rank_unsupported: return 3;
    case ErrorCode::no_reference_data:
    case ErrorCode::fixture_corrupt: return 4;
    default: return 1;
    }
}

std::vector<SblRecord> try_records(const std::filesystem::path& dir) {
    try {
        return load_sbl_records(dir);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::no_reference_data) throw;
        return {};
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cones of divisors and curves on spaces of complete forms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    unsigned thread_count = 0;
    std::string format = "text";
    std::string fixtures = default_fixtures_dir().string();
    bool timing = false;
    app.add_option("--threads", thread_count, "worker threads (default: available parallelism)")
        ->envname("CONEKIT_THREADS")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fixtures-dir", fixtures, "directory with the bundled reference data");
    app.add_flag("--timing", timing, "record wall-clock time and thread count in the output");

    SpaceFlags cone_flags;
    std::string cone_name;
    auto* cone_cmd = app.add_subcommand("cone", "extremal rays of a named cone");
    add_space_flags(cone_cmd, cone_flags);
    cone_cmd->add_option("--cone", cone_name, "eff | nef | mov | mori | movcurves")
        ->required()
        ->check(CLI::IsMember({"eff", "nef", "mov", "mori", "movcurves"}));

    SpaceFlags fan_flags;
    bool sbl = false;
    auto* fan_cmd = app.add_subcommand("chambers", "GKZ chamber decomposition of the effective cone");
    add_space_flags(fan_cmd, fan_flags);
    fan_cmd->add_flag("--sbl", sbl, "merge into the stable base locus decomposition");

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--suite", suite, "all | cones | counts | fans | formulas")
        ->check(CLI::IsMember({"all", "cones", "counts", "fans", "formulas"}));

    SpaceFlags bench_flags;
    auto* bench_cmd = app.add_subcommand("bench", "time the movable cone computation");
    add_space_flags(bench_cmd, bench_flags, true);

    SpaceFlags info_flags;
    auto* info_cmd = app.add_subcommand("info", "tool version, or a summary of one space");
    info_cmd->add_option("--family", info_flags.family)->check(CLI::IsMember({"xnm", "xn", "qn"}));
    info_cmd->add_option("--n", info_flags.n);
    info_cmd->add_option("--m", info_flags.m);
    info_cmd->add_option("--stage", info_flags.stage);

    for (auto* cmd : {cone_cmd, fan_cmd, verify_cmd, bench_cmd, info_cmd}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (thread_count) set_threads(thread_count);
    const bool json = format == "json";
    const std::filesystem::path dir = fixtures;
    auto now = [] { return std::chrono::steady_clock::now(); };
    auto since = [](auto t0) { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

    try {
        if (*cone_cmd) {
            const auto t0 = now();
            const SpaceSpec s = make_space(cone_flags.family, parse_n(cone_flags.n), cone_flags.m, cone_flags.stage);
            ConeReport r{s, cone_name, is_curve_cone(cone_name) ? curve_basis(s) : divisor_basis(s),
                         extremal_rays(named_cone(s, cone_name)), std::nullopt, std::nullopt};
            if (timing) {
                r.seconds = since(t0);
                r.threads = threads();
            }
            std::cout << (json ? to_json(r).dump(2) + "\n" : to_text(r));
            return 0;
        }
        if (*fan_cmd) {
            const auto t0 = now();
            const SpaceSpec s = make_space(fan_flags.family, parse_n(fan_flags.n), fan_flags.m, fan_flags.stage);
            ChamberFan f = annotate(gkz_fan(s), sbl ? load_sbl_records(dir) : try_records(dir));
            if (sbl) f = sbl_merge(f, s, load_sbl_records(dir));
            std::optional<double> secs;
            std::optional<unsigned> th;
            if (timing) {
                secs = since(t0);
                th = threads();
            }
            if (json) std::cout << to_json(f, secs, th).dump(2) << "\n";
            else {
                std::cout << to_text(f);
                if (secs) std::cout << "time " << *secs << " s, threads " << *th << "\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            const auto checks = run_verify(suite, dir);
            bool ok = true;
            for (const auto& c : checks) ok = ok && c.ok;
            if (json) {
                Json out = Json::array();
                for (const auto& c : checks)
                    out.push_back({{"suite", c.suite}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
                std::cout << Json{{"checks", out}, {"ok", ok}}.dump(2) << "\n";
            } else {
                std::cout << format_checks(checks);
            }
            return ok ? 0 : 1;
        }
        if (*bench_cmd) {
            const auto [lo, hi] = parse_range(bench_flags.n);
            Json counts;
            try {
                counts = load_expected_counts(dir);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::no_reference_data) throw;
            }
            std::vector<BenchRecord> rows;
            for (int n = lo; n <= hi; ++n) {
                int m = bench_flags.m;
                if (bench_flags.family == "xnm" && (m == 0 || lo != hi)) m = std::max(m, n + 1);
                const SpaceSpec s = make_space(bench_flags.family, n, m, bench_flags.stage);
                rows.push_back(bench_movable(s, counts.is_null() ? nullptr : &counts));
            }
            if (json) {
                Json out = Json::array();
                for (const auto& r : rows) out.push_back(to_json(r));
                std::cout << Json{{"bench", out}}.dump(2) << "\n";
            } else {
                std::cout << format_bench(rows);
            }
            for (const auto& r : rows)
                if (!r.ok()) return 1;
            return 0;
        }
        if (*info_cmd) {
            Json out = {{"tool", tool_name}, {"version", tool_version}, {"threads", threads()},
                        {"fixtures_dir", dir.string()}};
            std::optional<SpaceSpec> space;
            if (!info_flags.family.empty()) {
                if (info_flags.n.empty()) fail(ErrorCode::invalid_spec, "--family needs --n");
                space = make_space(info_flags.family, parse_n(info_flags.n), info_flags.m, info_flags.stage);
                const SpaceSpec& s = *space;
                const GradingMatrix g = grading_matrix(s);
                Json cols = Json::array();
                for (const auto& c : g.columns)
                    cols.push_back({{"label", c.degree.label}, {"degree", to_json(c.degree.coords)},
                                    {"multiplicity", c.multiplicity.get_str()}});
                out["space"] = to_json(s);
                out["picard_rank"] = picard_rank(s);
                out["basis"] = divisor_basis(s);
                out["dimension"] = ambient_dimension(s).get_str();
                out["cox_generators"] = cox_generator_count(s).value.get_str();
                out["grading"] = cols;
                out["anticanonical"] = to_json(anticanonical_class(s).coords);
                if (picard_rank(s) >= 2) out["fano"] = is_fano(s);
            }
            if (json) {
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            std::cout << tool_name << " " << tool_version << ", threads " << threads() << ", fixtures "
                      << dir.string() << "\n";
            if (space) {
                std::cout << out["space"]["name"].get<std::string>() << ": dimension "
                          << out["dimension"].get<std::string>() << ", Picard rank " << out["picard_rank"].get<int>()
                          << ", " << out["cox_generators"].get<std::string>() << " Cox generators\n";
                for (const auto& c : out["grading"]) {
                    std::cout << "  " << std::left << std::setw(6) << c["label"].get<std::string>() << " (";
                    bool first = true;
                    for (const auto& x : c["degree"]) {
                        std::cout << (first ? "" : ",") << x.get<std::string>();
                        first = false;
                    }
                    std::cout << ") x" << c["multiplicity"].get<std::string>() << "\n";
                }
                std::cout << "  -K = " << to_string(anticanonical_class(*space).coords);
                if (out.contains("fano")) std::cout << (out["fano"].get<bool>() ? ", Fano" : ", not Fano");
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "conekit: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return 2;
}
