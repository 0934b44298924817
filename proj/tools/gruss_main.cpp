// gruss — verification CLI: inequality suites, seeded fuzzing, transform
// bound tables.
//
// Exit codes: 0 all checks passed, 1 at least one verdict failed or a runtime
// failure occurred, 2 usage error.

#include "gruss/inequality.hpp"
#include "gruss/transforms.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace {

using gruss::Json;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct CommonFlags {
    std::uint64_t seed = 0;
    int k_max = 4;
    int m_dim_max = 4;
    int n_max = 8;
    double rtol = 1e-9;
    double atol = 1e-12;
    std::string output;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const char* default_output,
                bool with_tuple_length = true) {
    cmd->add_option("--seed", flags.seed, "Base seed")->envname("GRUSS_SEED");
    cmd->add_option("--k", flags.k_max, "Largest algebra dimension");
    cmd->add_option("--m-dim", flags.m_dim_max, "Largest module row count");
    if (with_tuple_length)
        cmd->add_option("--n", flags.n_max, "Largest tuple length");
    cmd->add_option("--rtol", flags.rtol, "Relative tolerance");
    cmd->add_option("--atol", flags.atol, "Absolute tolerance");
    cmd->add_option("--output", flags.output, "Report file path");
    cmd->add_flag("--quiet", flags.quiet, "Suppress the stdout summary");
    flags.output = default_output;
}

Json make_manifest(const std::string& command, Json parameters,
                   std::uint64_t seed, const std::string& started) {
    return Json{{"command", command},
                {"parameters", std::move(parameters)},
                {"seed", seed},
                {"tool_version", gruss::tool_version},
                {"started", started},
                {"finished", ""},
                {"summary", Json::object()}};
}

void write_report(const std::string& path, const Json& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file: " + path);
    out << report.dump(2) << '\n';
}

// One campaign row of a verify report.
struct SuiteResult {
    std::string id;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double min_slack = 0.0;
};

Json suite_result_to_json(const SuiteResult& r) {
    return Json{{"inequality_id", r.id},
                {"trials", r.trials},
                {"failures", r.failures},
                {"min_slack", r.min_slack},
                {"holds", r.failures == 0}};
}

void print_suite_result(const SuiteResult& r, bool quiet) {
    if (quiet) return;
    std::printf("[%s] %-22s trials=%-6zu failures=%-4zu min_slack=% .3e\n",
                r.failures == 0 ? "PASS" : "FAIL", r.id.c_str(), r.trials,
                r.failures, r.min_slack);
}

// The closed-form kernel sum against direct summation on the verification
// grid; guard-band points are skipped.
SuiteResult kernel_grid_result(int n_max) {
    SuiteResult r{"kernel.closed_form", 0, 0,
                  std::numeric_limits<double>::infinity()};
    for (int tenth = 1; tenth <= 15; ++tenth) {
        const double omega = 0.1 * tenth;
        for (int n = 1; n <= n_max; ++n)
            for (int m = 1; m <= n; ++m) {
                const gruss::TransformParams params{omega, m, n};
                gruss::Complex closed;
                try {
                    closed = gruss::fourier_kernel_sum(params);
                } catch (const gruss::SingularKernelError&) {
                    continue;
                }
                ++r.trials;
                const double diff =
                    std::abs(closed - gruss::fourier_kernel_direct(params));
                const double slack = 1e-12 * n - diff;
                r.min_slack = std::min(r.min_slack, slack);
                if (slack < 0.0) ++r.failures;
            }
    }
    return r;
}

// Exact power-sum coefficients: nonnegativity over a triangle of (m, n) and
// the two closed-form factorizations.
SuiteResult coefficient_result(int n_max) {
    SuiteResult r{"mellin.coefficients", 0, 0, 0.0};
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= n; ++m) {
            ++r.trials;
            if (gruss::mellin_coefficient(m, n) < 0) ++r.failures;
        }
    for (int n = 1; n <= n_max; ++n) {
        ++r.trials;
        const mpz_class nz(n);
        const mpz_class quad = nz * nz * (nz - 1) * (nz + 1) / 12;
        if (gruss::mellin_coefficient(2, n) != quad) ++r.failures;
        ++r.trials;
        const mpz_class sext =
            nz * nz * (nz - 1) * (nz + 1) * (2 * nz + 1) * (8 * nz + 11) / 180;
        if (gruss::mellin_coefficient(3, n) != sext) ++r.failures;
    }
    if (r.failures > 0) r.min_slack = -1.0;
    return r;
}

int run_campaign_list(const std::string& command,
                      const std::vector<std::pair<std::string, std::size_t>>& plan,
                      const CommonFlags& flags, bool with_kernel_extras) {
    const std::string started = iso_timestamp();
    const gruss::Tolerance tol{flags.rtol, flags.atol};
    const gruss::DimRanges dims{flags.k_max, flags.m_dim_max, flags.n_max};

    std::vector<SuiteResult> results;
    Json verdicts = Json::array();
    for (const auto& [id, trials] : plan) {
        const gruss::FuzzReport rep =
            gruss::fuzz_campaign(id, trials, flags.seed, dims, tol);
        SuiteResult r{id, rep.trials, rep.failures, rep.min_slack};
        print_suite_result(r, flags.quiet);
        verdicts.push_back(suite_result_to_json(r));
        results.push_back(r);
    }
    if (with_kernel_extras) {
        for (SuiteResult r : {kernel_grid_result(32), coefficient_result(200)}) {
            print_suite_result(r, flags.quiet);
            verdicts.push_back(suite_result_to_json(r));
            results.push_back(r);
        }
    }

    std::size_t total_failures = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (const SuiteResult& r : results) {
        total_failures += r.failures;
        min_slack = std::min(min_slack, r.min_slack);
    }

    Json parameters{{"suites", Json::array()}, {"seed", flags.seed},
                    {"k", flags.k_max},        {"m_dim", flags.m_dim_max},
                    {"n", flags.n_max},        {"rtol", flags.rtol},
                    {"atol", flags.atol}};
    for (const auto& [id, trials] : plan)
        parameters["suites"].push_back(Json{{"id", id}, {"trials", trials}});

    Json manifest = make_manifest(command, parameters, flags.seed, started);
    manifest["finished"] = iso_timestamp();
    manifest["summary"] = Json{{"campaigns", results.size()},
                               {"failures", total_failures},
                               {"min_slack", min_slack}};
    write_report(flags.output,
                 Json{{"schema_version", 1}, {"manifest", manifest}, {"verdicts", verdicts}});
    if (!flags.quiet)
        std::printf("report written to %s\n", flags.output.c_str());
    return total_failures == 0 ? 0 : 1;
}

int run_replay(const std::string& path, const CommonFlags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "cannot open replay file: %s\n", path.c_str());
        return 1;
    }
    Json report = Json::parse(in);
    const Json& worst = report.contains("fuzz") ? report["fuzz"]["worst_case"]
                                                : report["worst_case"];
    if (worst.is_null()) {
        std::fprintf(stderr, "replay file has no worst_case record\n");
        return 1;
    }
    const std::string id = worst.at("inequality_id").get<std::string>();
    const double recorded = worst.at("verdict").at("slack").get<double>();
    const gruss::Tolerance tol{flags.rtol, flags.atol};
    const gruss::Verdict v = gruss::evaluate_instance(id, worst.at("instance"), tol);
    const double drift = std::abs(v.slack - recorded);
    if (!flags.quiet)
        std::printf("[%s] replay %-16s slack=% .6e recorded=% .6e drift=%.2e\n",
                    v.holds && drift <= 1e-12 ? "PASS" : "FAIL", id.c_str(),
                    v.slack, recorded, drift);
    return v.holds && drift <= 1e-12 ? 0 : 1;
}

const std::vector<std::pair<std::string, std::size_t>>& suite_plan(
    const std::string& suite, std::size_t trials_override) {
    static std::vector<std::pair<std::string, std::size_t>> plan;
    plan.clear();
    auto add = [&](const std::string& id, std::size_t trials) {
        plan.emplace_back(id, trials_override > 0 ? trials_override : trials);
    };
    if (suite == "schwarz" || suite == "all") {
        for (const char* id : {"schwarz.module", "schwarz.abs", "schwarz.functional",
                               "schwarz.radius", "schwarz.seminorm"})
            add(id, 1000);
    }
    if (suite == "identities" || suite == "all") {
        add("lemma31", 500);
        add("lemma41", 500);
    }
    if (suite == "gruss" || suite == "all") {
        for (const char* id :
             {"thm31", "thm42", "cor43", "rem44", "alpha43", "alpha44", "scalar12"})
            add(id, 1000);
    }
    if (suite == "transforms" || suite == "all") {
        for (const char* id : {"fourier41", "fourier45", "mellin42", "mellin46"})
            add(id, 500);
    }
    return plan;
}

// ---------------------------------------------------------------------------
// transforms subcommand

struct TransformRow {
    std::string id;
    int n = 0;
    int m = 0;
    double omega = 0.0;
    bool is_fourier = false;
    std::string coefficient;  // exact integer for Mellin, printed double for Fourier
    bool skipped = false;
    gruss::BoundReport report;
};

Json row_to_json(const TransformRow& row) {
    Json j{{"inequality_id", row.id}, {"n", row.n}, {"m", row.m}};
    if (row.is_fourier) j["omega"] = row.omega;
    if (row.skipped) {
        j["status"] = "skipped: singular kernel";
        return j;
    }
    j["status"] = "ok";
    if (!row.coefficient.empty()) j["coefficient"] = row.coefficient;
    j["lhs_norm"] = row.report.lhs_norm;
    j["tightness"] = row.report.tightness;
    j["loewner_holds"] = row.report.loewner_holds;
    j["bound_final"] = row.report.bound_final;
    j["true_error_sq"] = gruss::matrix_to_json(row.report.true_error_sq);
    j["bound_mid"] = gruss::matrix_to_json(row.report.bound_mid);
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string row_to_csv(const TransformRow& row) {
    std::ostringstream os;
    os << row.id << ',' << row.n << ',' << row.m << ',';
    if (row.is_fourier) os << row.omega;
    os << ',' << row.coefficient << ',';
    if (!row.skipped) {
        os << row.report.lhs_norm << ',' << row.report.tightness << ','
           << (row.report.loewner_holds ? "true" : "false") << ",ok";
    } else {
        os << ",,," << csv_escape("skipped: singular kernel");
    }
    return os.str();
}

constexpr const char* kCsvHeader =
    "inequality_id,n,m,omega,coefficient,lhs_norm,tightness,loewner_holds,status";

gruss::Matrix integer_matrix(Eigen::Index rows, Eigen::Index cols,
                             const gruss::GenConfig& cfg) {
    gruss::SplitMix rng(cfg.seed);
    gruss::Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = gruss::Complex(
                static_cast<double>(rng.next_range(0, 6)) - 3.0,
                static_cast<double>(rng.next_range(0, 6)) - 3.0);
    return m;
}

int run_transforms(const std::string& kind, int n_max, int m_fixed, double omega,
                   bool omega_given, const std::string& tuple_mode,
                   const std::string& format, const CommonFlags& flags) {
    const bool is_fourier = kind == "fourier";
    if (is_fourier && !omega_given) {
        std::fprintf(stderr, "transforms fourier requires --omega\n");
        return 2;
    }
    const std::string started = iso_timestamp();
    const gruss::Tolerance tol{flags.rtol, flags.atol};

    std::vector<TransformRow> rows;
    bool any_failed = false;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> ms;
        if (m_fixed > 0) {
            if (m_fixed <= n) ms.push_back(m_fixed);
        } else {
            for (int m = 1; m <= n; ++m) ms.push_back(m);
        }
        for (int m : ms) {
            const gruss::GenConfig point{
                gruss::substream({flags.seed, 1.0, 64}, kind,
                                 static_cast<std::uint64_t>(n) * 1000 + m)
                    .seed,
                1.0, 64};
            gruss::ModuleTuple as, bs;
            if (tuple_mode == "constant") {
                const gruss::Matrix a0 = integer_matrix(
                    flags.m_dim_max, flags.k_max, gruss::substream(point, "A0", 0));
                const gruss::Matrix b0 = integer_matrix(
                    flags.m_dim_max, flags.k_max, gruss::substream(point, "B0", 0));
                as.assign(n, a0);
                bs.assign(n, b0);
            } else {
                for (int i = 0; i < n; ++i) {
                    as.push_back(gruss::random_matrix(
                        flags.m_dim_max, flags.k_max, gruss::substream(point, "As", i)));
                    bs.push_back(gruss::random_matrix(
                        flags.m_dim_max, flags.k_max, gruss::substream(point, "Bs", i)));
                }
            }
            const gruss::Matrix ca = gruss::random_matrix(
                flags.m_dim_max, flags.k_max, gruss::substream(point, "A", 0));
            const gruss::Matrix cb = gruss::random_matrix(
                flags.m_dim_max, flags.k_max, gruss::substream(point, "B", 0));

            TransformRow chain{is_fourier ? "fourier41" : "mellin42", n, m, omega,
                               is_fourier, "", false, {}};
            TransformRow surrogate{is_fourier ? "fourier45" : "mellin46", n, m,
                                   omega, is_fourier, "", false, {}};
            if (is_fourier) {
                const gruss::TransformParams params{omega, m, n};
                chain.report = gruss::fourier_chain_check(as, bs, ca, cb, params, tol);
                try {
                    surrogate.report = gruss::fourier_surrogate_check(as, params, tol);
                    const double ratio =
                        std::sin(omega * m * n) / std::sin(omega * m);
                    std::ostringstream c;
                    c << static_cast<double>(n) * n - ratio * ratio;
                    surrogate.coefficient = c.str();
                } catch (const gruss::SingularKernelError&) {
                    surrogate.skipped = true;
                }
            } else {
                chain.report = gruss::mellin_chain_check(as, bs, ca, cb, m, tol);
                surrogate.report = gruss::mellin_surrogate_check(as, m, tol);
                surrogate.coefficient = gruss::mellin_coefficient(m, n).get_str();
            }
            for (const TransformRow& row : {chain, surrogate})
                if (!row.skipped && !row.report.loewner_holds) any_failed = true;
            rows.push_back(std::move(chain));
            rows.push_back(std::move(surrogate));
        }
    }

    Json parameters{{"kind", kind},   {"n", n_max},
                    {"m", m_fixed},   {"tuple", tuple_mode},
                    {"k", flags.k_max}, {"m_dim", flags.m_dim_max},
                    {"rtol", flags.rtol}, {"atol", flags.atol}};
    if (is_fourier) parameters["omega"] = omega;
    Json manifest = make_manifest("transforms", parameters, flags.seed, started);

    std::size_t skipped = 0, failed = 0;
    for (const TransformRow& r : rows) {
        skipped += r.skipped ? 1 : 0;
        failed += (!r.skipped && !r.report.loewner_holds) ? 1 : 0;
    }
    manifest["finished"] = iso_timestamp();
    manifest["summary"] =
        Json{{"rows", rows.size()}, {"failures", failed}, {"skipped", skipped}};

    if (format == "csv") {
        std::ofstream out(flags.output);
        if (!out) throw std::runtime_error("cannot open report file: " + flags.output);
        out << kCsvHeader << '\n';
        for (const TransformRow& r : rows) out << row_to_csv(r) << '\n';
    } else {
        Json jrows = Json::array();
        for (const TransformRow& r : rows) jrows.push_back(row_to_json(r));
        write_report(flags.output, Json{{"schema_version", 1},
                                        {"manifest", manifest},
                                        {"rows", jrows}});
    }

    if (!flags.quiet) {
        std::printf("%zu rows (%zu skipped), %zu failures; written to %s\n",
                    rows.size(), skipped, failed, flags.output.c_str());
        for (const TransformRow& r : rows) {
            if (r.skipped) {
                std::printf("[SKIP] %-10s n=%-3d m=%-3d singular kernel\n",
                            r.id.c_str(), r.n, r.m);
            }
        }
    }
    return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of covariance-type operator "
                 "inequalities in finite-dimensional Hilbert C*-modules"};
    app.require_subcommand(0, 1);

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    CommonFlags vf;
    std::string suite = "all";
    std::size_t vtrials = 0;
    std::string replay_path;
    verify->add_option("--suite", suite, "One of schwarz|identities|gruss|transforms|all")
        ->check(CLI::IsMember({"schwarz", "identities", "gruss", "transforms", "all"}));
    verify->add_option("--trials", vtrials, "Override the per-inequality trial count");
    verify->add_option("--replay", replay_path, "Re-evaluate a report's worst case");
    add_common(verify, vf, "verify-report.json");

    // fuzz ----------------------------------------------------------------
    auto* fuzz = app.add_subcommand("fuzz", "Fuzz one inequality");
    CommonFlags ff;
    std::string fuzz_id;
    std::size_t ftrials = 0;
    fuzz->add_option("inequality_id", fuzz_id, "Which inequality to fuzz")->required();
    fuzz->add_option("--trials", ftrials, "Number of trials")->required();
    add_common(fuzz, ff, "fuzz-report.json");

    // transforms ----------------------------------------------------------
    auto* transforms = app.add_subcommand("transforms", "Transform bound tables");
    CommonFlags tf;
    std::string kind;
    int tn = 8;
    int tm = 0;
    double omega = 0.0;
    std::string format = "json";
    std::string tuple_mode = "random";
    transforms->add_option("kind", kind, "fourier or mellin")
        ->required()
        ->check(CLI::IsMember({"fourier", "mellin"}));
    transforms->add_option("--n", tn, "Largest tuple length in the grid");
    transforms->add_option("--m", tm, "Fixed transform index (default: all 1..n)");
    auto* omega_opt = transforms->add_option("--omega", omega, "Fourier frequency (radians)");
    transforms->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    transforms->add_option("--tuple", tuple_mode, "random or constant tuples")
        ->check(CLI::IsMember({"random", "constant"}));
    add_common(transforms, tf, "", /*with_tuple_length=*/false);
    tf.k_max = 2;
    tf.m_dim_max = 2;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!replay_path.empty()) return run_replay(replay_path, vf);
            return run_campaign_list(
                "verify", suite_plan(suite, vtrials), vf,
                suite == "transforms" || suite == "all");
        }
        if (fuzz->parsed()) {
            bool known = false;
            for (const std::string& id : gruss::known_inequality_ids())
                known = known || id == fuzz_id;
            if (!known) {
                std::fprintf(stderr, "unknown inequality id: %s\n", fuzz_id.c_str());
                return 2;
            }
            if (ftrials == 0) {
                std::fprintf(stderr, "fuzz requires --trials >= 1\n");
                return 2;
            }
            const std::string started = iso_timestamp();
            const gruss::Tolerance tol{ff.rtol, ff.atol};
            const gruss::DimRanges dims{ff.k_max, ff.m_dim_max, ff.n_max};
            const gruss::FuzzReport rep =
                gruss::fuzz_campaign(fuzz_id, ftrials, ff.seed, dims, tol);
            SuiteResult r{fuzz_id, rep.trials, rep.failures, rep.min_slack};
            print_suite_result(r, ff.quiet);
            Json manifest = make_manifest(
                "fuzz",
                Json{{"inequality_id", fuzz_id}, {"trials", ftrials},
                     {"seed", ff.seed},          {"k", ff.k_max},
                     {"m_dim", ff.m_dim_max},    {"n", ff.n_max},
                     {"rtol", ff.rtol},          {"atol", ff.atol}},
                ff.seed, started);
            manifest["finished"] = iso_timestamp();
            manifest["summary"] = Json{{"trials", rep.trials},
                                       {"failures", rep.failures},
                                       {"min_slack", rep.min_slack}};
            write_report(ff.output, Json{{"schema_version", 1},
                                         {"manifest", manifest},
                                         {"fuzz", gruss::fuzz_report_to_json(rep)}});
            if (!ff.quiet)
                std::printf("report written to %s\n", ff.output.c_str());
            return rep.failures == 0 ? 0 : 1;
        }
        if (transforms->parsed()) {
            if (tf.output.empty())
                tf.output = format == "csv" ? "transforms-report.csv"
                                            : "transforms-report.json";
            return run_transforms(kind, tn, tm, omega, omega_opt->count() > 0,
                                  tuple_mode, format, tf);
        }
        std::fprintf(stderr, "a subcommand is required; try --help\n");
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
