/*
   Copyright 2026 The ratcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "ratcurve/certify.hpp"
#include "ratcurve/dims.hpp"
#include "ratcurve/errors.hpp"
#include "ratcurve/oracle.hpp"
#include "ratcurve/pipeline.hpp"
#include "ratcurve/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ratcurve;

namespace {

enum ExitCode : int { kOk = 0, kVerdictDiffers = 2, kInputError = 3, kInternalError = 4 };

std::string out_dir_default() {
    if (const char* env = std::getenv("RATCURVE_OUT_DIR"); env != nullptr && *env != '\0') return env;
    return "ratcurve-out";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

/// Writes to --out when given, else to RATCURVE_OUT_DIR/<fallback> when that is set, else stdout.
void emit(const json& j, const std::string& out, const std::string& fallback) {
    std::string target = out;
    if (target.empty()) {
        if (const char* env = std::getenv("RATCURVE_OUT_DIR"); env != nullptr && *env != '\0')
            target = (fs::path(env) / fallback).string();
    }
    if (target.empty()) {
        std::cout << dump(j);
    } else {
        write_file(target, dump(j));
        std::cerr << "wrote " << target << "\n";
    }
}

FieldChoice parse_field(const std::string& name, std::uint64_t prime) {
    if (name == "q") return FieldChoice::rationals();
    if (name == "fp") return FieldChoice::prime_field(prime);
    throw InputError("unknown field '" + name + "', expected q or fp");
}

/// The verdict the source result asserts for a relation run, when it asserts one.
std::optional<Verdict> expected_relation(int n) {
    if (n >= 4 && n <= 8) return Verdict::RelationDetected;
    if (n == 3) return Verdict::NoRelationDetected;  // (3, 4) lies on the dominance grid
    return std::nullopt;
}

// -------------------------------------------------------------------------------------------

int cmd_dims(int n, int d) {
    const ProblemDims dims = compute_dims(n, d);
    std::cout << describe(dims) << "\n";
    return kOk;
}

int cmd_example(const std::string& file, const std::string& format) {
    const auto params = load_params_file(file);
    const auto trace = run_pipeline(params);
    if (format == "json") {
        json j = to_json(trace);
        j["n"] = params.dims().n;
        j["d"] = params.dims().d;
        std::cout << dump(j);
    } else {
        std::cout << describe(params.dims()) << "\n" << render_text(trace);
    }
    return kOk;
}

struct CertifyArgs {
    int n = 2;
    int d = 3;
    std::string field = "q";
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    int trials = 1;
    bool all_trials = false;
    std::int64_t bound = 99;
    std::string out;
};

int cmd_certify(const CertifyArgs& a) {
    DominanceOptions opts;
    opts.n = a.n;
    opts.d = a.d;
    opts.field = parse_field(a.field, a.prime);
    opts.seed = a.seed;
    opts.points = a.trials;
    opts.stop_on_full_rank = !a.all_trials;
    opts.coeff_bound = a.bound;
    const Certificate cert = certify_dominance(opts);
    emit(to_json(cert), a.out, "certify_n" + std::to_string(a.n) + "_d" + std::to_string(a.d) + "_seed" +
                                   std::to_string(a.seed) + ".json");
    std::cerr << to_string(cert.verdict) << " rank " << cert.observed_rank << "/" << cert.target_rank << "\n";
    if (!cert.identity_battery_passed) return kInternalError;
    return cert.verdict == Verdict::DominantCertified ? kOk : kVerdictDiffers;
}

struct RelationArgs {
    int n = 4;
    std::string field = "both";
    int trials = 20;
    int rational_trials = 5;
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = 0;
    std::int64_t bound = 99;
    bool symbolic = false;
    std::size_t budget = 4'000'000;
    std::string out;
};

int cmd_relations(const RelationArgs& a) {
    const std::string stem = "relations_n" + std::to_string(a.n) + "_seed" + std::to_string(a.seed);
    if (a.symbolic) {
        const SymbolicRelationResult r = relation_symbolic(a.n, a.budget, a.seed);
        emit(to_json(r), a.out, stem + "_symbolic.json");
        std::cerr << to_string(r.status) << " (" << r.minors_proved_zero << "/" << r.total_minors
                  << " minors proved zero)\n";
        const auto expected = expected_relation(a.n);
        if (!expected) return kOk;
        const bool relation = r.status == SymbolicRelationResult::Status::AllMinorsZero;
        if (r.status == SymbolicRelationResult::Status::BudgetExceeded) return kVerdictDiffers;
        return relation == (*expected == Verdict::RelationDetected) ? kOk : kVerdictDiffers;
    }
    RelationOptions opts;
    opts.n = a.n;
    opts.seed = a.seed;
    opts.coeff_bound = a.bound;
    opts.primes = a.primes;
    if (a.field == "q") {
        opts.rational_trials = std::max(a.rational_trials, 1);
        opts.prime_trials = 0;
        opts.prime_count = 0;
        opts.primes.clear();
    } else if (a.field == "fp") {
        opts.rational_trials = 0;
        opts.prime_trials = a.trials;
    } else if (a.field == "both") {
        opts.rational_trials = a.rational_trials;
        opts.prime_trials = a.trials;
    } else {
        throw InputError("unknown field '" + a.field + "', expected q, fp or both");
    }
    const Certificate cert = detect_relation(opts);
    emit(to_json(cert), a.out, stem + ".json");
    std::cerr << to_string(cert.verdict) << ", coefficient rank " << cert.observed_rank << ", two-column rank "
              << cert.two_column_rank << "\n";
    if (!cert.identity_battery_passed) return kInternalError;
    const auto expected = expected_relation(a.n);
    return !expected || cert.verdict == *expected ? kOk : kVerdictDiffers;
}

// -------------------------------------------------------------------------------------------
// Batch runs

struct ReproduceConfig {
    std::uint64_t seed = 1;
    int trials = 1;
    unsigned parallelism = 0;  ///< 0: number of cells capped by available cores
    std::string field = "q";
    std::int64_t coeff_bound = 99;
    bool symbolic = false;     ///< also run the symbolic relation check (n = 4, 5)
    int relation_prime_trials = 20;
    int relation_rational_trials = 5;
};

ReproduceConfig load_config(const std::string& path) {
    ReproduceConfig c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config " + path);
    json j;
    try {
        j = json::parse(in);
        c.seed = j.value("seed", c.seed);
        c.trials = j.value("trials", c.trials);
        c.parallelism = j.value("parallelism", c.parallelism);
        c.field = j.value("field", c.field);
        c.coeff_bound = j.value("coeff_bound", c.coeff_bound);
        c.symbolic = j.value("symbolic", c.symbolic);
        c.relation_prime_trials = j.value("relation_prime_trials", c.relation_prime_trials);
        c.relation_rational_trials = j.value("relation_rational_trials", c.relation_rational_trials);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    return c;
}

struct CellOutcome {
    json certificate;
    std::string csv;
    bool matches = false;
    std::string status;
};

template <class Job>
std::vector<CellOutcome> run_cells(std::size_t count, unsigned parallelism, Job job) {
    std::vector<CellOutcome> results(count);
    unsigned workers = parallelism != 0 ? parallelism : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            results[i] = job(i);
            std::lock_guard<std::mutex> lock(log_mutex);
            std::cerr << "[" << i + 1 << "/" << count << "] " << results[i].status << "\n";
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

std::vector<std::pair<int, int>> dominance_grid() {
    std::vector<std::pair<int, int>> cells;
    for (int d = 3; d <= 25; ++d) cells.emplace_back(2, d);
    for (int d = 4; d <= 17; ++d) cells.emplace_back(3, d);
    for (int d = 6; d <= 12; ++d) cells.emplace_back(4, d);
    for (int d = 7; d <= 9; ++d) cells.emplace_back(5, d);
    return cells;
}

CellOutcome failed_cell(int n, int d, const std::exception& e) {
    CellOutcome o;
    o.certificate = json{{"n", n}, {"d", d}, {"error", e.what()}};
    o.csv = "error," + std::to_string(n) + "," + std::to_string(d) + ",,,,,,error,,,";
    o.status = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " error: " + e.what();
    return o;
}

int cmd_reproduce(int thm, const std::string& config_path, const std::string& out) {
    const ReproduceConfig cfg = load_config(config_path);
    const fs::path dir = out.empty() ? fs::path(out_dir_default()) : fs::path(out);
    std::vector<CellOutcome> cells;
    json summary;
    summary["schema_version"] = Certificate::kSchemaVersion;
    summary["artifact_version"] = artifact_version();
    summary["seed"] = cfg.seed;

    if (thm == 12) {
        const auto grid = dominance_grid();
        const FieldChoice field = parse_field(cfg.field, 0);
        cells = run_cells(grid.size(), cfg.parallelism, [&](std::size_t i) {
            const auto [n, d] = grid[i];
            try {
                DominanceOptions opts;
                opts.n = n;
                opts.d = d;
                opts.field = field;
                opts.seed = cfg.seed;
                opts.points = cfg.trials;
                opts.coeff_bound = cfg.coeff_bound;
                const Certificate cert = certify_dominance(opts);
                CellOutcome o;
                o.certificate = to_json(cert);
                o.csv = csv_row(cert);
                o.matches = cert.verdict == Verdict::DominantCertified && cert.identity_battery_passed;
                o.status = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + to_string(cert.verdict) + " " +
                           std::to_string(cert.observed_rank) + "/" + std::to_string(cert.target_rank);
                return o;
            } catch (const std::exception& e) {
                return failed_cell(n, d, e);
            }
        });
        json rows = json::object();
        for (const auto& [n, d] : grid) rows[std::to_string(n)] = rows.value(std::to_string(n), 0) + 1;
        summary["cells_per_n"] = rows;
    } else if (thm == 13) {
        std::vector<int> ns{4, 5, 6, 7, 8};
        cells = run_cells(ns.size(), cfg.parallelism, [&](std::size_t i) {
            const int n = ns[i];
            try {
                RelationOptions opts;
                opts.n = n;
                opts.seed = cfg.seed;
                opts.coeff_bound = cfg.coeff_bound;
                opts.prime_trials = cfg.relation_prime_trials;
                opts.rational_trials = cfg.relation_rational_trials;
                const Certificate cert = detect_relation(opts);
                CellOutcome o;
                o.certificate = to_json(cert);
                o.csv = csv_row(cert);
                o.matches = cert.verdict == Verdict::RelationDetected && cert.identity_battery_passed;
                o.status = "n=" + std::to_string(n) + " " + to_string(cert.verdict) + " coefficient rank " +
                           std::to_string(cert.observed_rank) + ", two-column rank " +
                           std::to_string(cert.two_column_rank);
                if (cfg.symbolic && n <= 5) {
                    const auto sym = relation_symbolic(n, 4'000'000, cfg.seed);
                    o.certificate["symbolic"] = to_json(sym);
                    o.matches = o.matches && sym.status == SymbolicRelationResult::Status::AllMinorsZero;
                    o.status += ", symbolic " + to_string(sym.status);
                }
                return o;
            } catch (const std::exception& e) {
                return failed_cell(n, n + 1, e);
            }
        });
    } else {
        throw InputError("--thm must be 12 or 13");
    }

    std::string csv = csv_header() + "\n";
    json certs = json::array();
    int matched = 0;
    for (const auto& c : cells) {
        csv += c.csv + "\n";
        certs.push_back(c.certificate);
        matched += c.matches ? 1 : 0;
    }
    summary["theorem"] = thm;
    summary["cells"] = cells.size();
    summary["cells_matching"] = matched;
    summary["certificates"] = certs;
    const std::string stem = "thm" + std::to_string(thm);
    write_file(dir / (stem + ".csv"), csv);
    write_file(dir / (stem + ".json"), dump(summary));
    std::cout << stem << ": " << cells.size() << " cells, " << matched << " match the expected verdict\n";
    std::cout << "wrote " << (dir / (stem + ".csv")).string() << " and " << (dir / (stem + ".json")).string() << "\n";
    return matched == static_cast<int>(cells.size()) ? kOk : kVerdictDiffers;
}

int cmd_compare(const std::string& example, const std::string& fixture, int samples, std::uint64_t seed,
                const std::string& format) {
    const FormulaReport r = paper_formula_compare(example, fixture, samples, seed);
    if (format == "json") {
        std::cout << dump(to_json(r));
    } else {
        std::cout << "example " << r.example << ", global sign " << (r.sign > 0 ? "+1" : "-1") << "\n";
        for (const auto& v : r.verdicts) {
            std::cout << (v.symbolic_match ? "  match     " : "  MISMATCH  ") << v.name << "  (" << v.numeric_agreements
                      << "/" << v.numeric_samples << " sample points agree)\n";
            for (const auto& t : v.missing_terms) std::cout << "      computed only: " << t << "\n";
            for (const auto& t : v.extra_terms) std::cout << "      printed only:  " << t << "\n";
        }
        std::cout << r.matches() << "/" << r.verdicts.size() << " formulas match\n";
    }
    return r.matches() == static_cast<int>(r.verdicts.size()) ? kOk : kVerdictDiffers;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact syzygy-to-morphism pipeline, dominance certificates and relation checks"};
    app.set_version_flag("--version", artifact_version());
    app.require_subcommand(1);

    int dims_n = 0;
    int dims_d = 0;
    auto* dims = app.add_subcommand("dims", "Print the bookkeeping for (n, d)");
    dims->add_option("--n", dims_n, "Ambient dimension")->required();
    dims->add_option("--d", dims_d, "Curve degree")->required();

    std::string example_file;
    std::string example_format = "text";
    auto* example = app.add_subcommand("example", "Run the pipeline on a params file and print every stage");
    example->add_option("params_file", example_file, "JSON params file")->required();
    example->add_option("--format", example_format)->check(CLI::IsMember({"text", "json"}));

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "Certify dominance by an exact Jacobian rank");
    certify->add_option("--n", ca.n)->required();
    certify->add_option("--d", ca.d)->required();
    certify->add_option("--field", ca.field, "q or fp")->check(CLI::IsMember({"q", "fp"}));
    certify->add_option("--prime", ca.prime, "Prime for --field fp (default: seeded random prime)");
    certify->add_option("--seed", ca.seed);
    certify->add_option("--trials", ca.trials, "Nondegenerate points to evaluate")->check(CLI::PositiveNumber);
    certify->add_flag("--all-trials", ca.all_trials, "Keep sampling after a full-rank point");
    certify->add_option("--bound", ca.bound, "Integer coefficients lie in [-bound, bound]")->check(CLI::PositiveNumber);
    certify->add_option("--out", ca.out, "Certificate path");

    RelationArgs ra;
    auto* relations = app.add_subcommand("relations", "Look for a first-order relation among the F_i (d = n+1)");
    relations->add_option("--n", ra.n)->required();
    relations->add_option("--field", ra.field, "q, fp or both")->check(CLI::IsMember({"q", "fp", "both"}));
    relations->add_option("--trials", ra.trials, "Trials per prime");
    relations->add_option("--rational-trials", ra.rational_trials);
    relations->add_option("--primes", ra.primes, "Explicit primes (default: two seeded primes)");
    relations->add_option("--seed", ra.seed);
    relations->add_option("--bound", ra.bound)->check(CLI::PositiveNumber);
    relations->add_flag("--symbolic", ra.symbolic, "Decide every 2x2 minor symbolically");
    relations->add_option("--budget", ra.budget, "Term budget for --symbolic");
    relations->add_option("--out", ra.out, "Certificate path");

    int thm = 12;
    std::string config;
    std::string reproduce_out;
    auto* reproduce = app.add_subcommand("reproduce", "Run a whole grid and write CSV and JSON reports");
    reproduce->add_option("--thm", thm, "12 (dominance grid) or 13 (relations, n = 4..8)")
        ->check(CLI::IsMember({12, 13}));
    reproduce->add_option("--config", config, "JSON config: seed, trials, parallelism, field, coeff_bound, symbolic");
    reproduce->add_option("--out", reproduce_out, "Output directory (default: RATCURVE_OUT_DIR or ./ratcurve-out)");

    std::string cmp_example = "4.2";
    std::string cmp_fixture = RATCURVE_FIXTURE_DIR "/reference_formulas.json";
    int cmp_samples = 10;
    std::uint64_t cmp_seed = 1;
    std::string cmp_format = "text";
    auto* compare = app.add_subcommand("compare", "Compare transcribed formulas with the pipeline");
    compare->add_option("--example", cmp_example)->check(CLI::IsMember({"3.2", "4.2"}));
    compare->add_option("--fixture", cmp_fixture);
    compare->add_option("--samples", cmp_samples)->check(CLI::PositiveNumber);
    compare->add_option("--seed", cmp_seed);
    compare->add_option("--format", cmp_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*dims) return cmd_dims(dims_n, dims_d);
        if (*example) return cmd_example(example_file, example_format);
        if (*certify) return cmd_certify(ca);
        if (*relations) return cmd_relations(ra);
        if (*reproduce) return cmd_reproduce(thm, config, reproduce_out);
        if (*compare) return cmd_compare(cmp_example, cmp_fixture, cmp_samples, cmp_seed, cmp_format);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DegenerateParameters& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return kVerdictDiffers;
    } catch (const AllTrialsDegenerate& e) {
        std::cerr << e.what() << "\n";
        return kVerdictDiffers;
    } catch (const Error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}
