#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robindisk/config.hpp"
#include "robindisk/reports.hpp"

namespace {

// Exit codes: 0 ok, 2 schema violation, 3 invalid partition, 4 non-convergence,
// 5 internal error, 6 malformed JSON.
constexpr int kExitOk = 0;
constexpr int kExitSchema = 2;
constexpr int kExitPartition = 3;
constexpr int kExitNoConvergence = 4;
constexpr int kExitInternal = 5;
constexpr int kExitMalformedJson = 6;

struct GlobalOptions {
    std::string config_path;
    std::string out_dir;  // overrides output.directory when nonempty
    long long seed = 20240817;
    std::string guarantee_mode = "on";
};

int config_error_code(const robindisk::ConfigError& e) {
    switch (e.kind) {
        case robindisk::ConfigErrorKind::MalformedJson: return kExitMalformedJson;
        case robindisk::ConfigErrorKind::Partition: return kExitPartition;
        case robindisk::ConfigErrorKind::Io:
        case robindisk::ConfigErrorKind::Schema: return kExitSchema;
    }
    return kExitInternal;
}

std::string output_dir(const robindisk::RunConfig& config, const GlobalOptions& opts) {
    return opts.out_dir.empty() ? config.output.directory : opts.out_dir;
}

robindisk::ConstantsReport constants_for(const robindisk::RunConfig& config) {
    robindisk::ProblemInstance inst = robindisk::make_instance(config);
    auto [phi_l2, g_l2] = robindisk::data_norms(inst);
    return robindisk::build_constants_report(phi_l2, g_l2, config.xi);
}

robindisk::Admissibility admissibility_for(const robindisk::RunConfig& config,
                                           const robindisk::ConstantsReport& constants) {
    robindisk::ProblemInstance inst = robindisk::make_instance(config);
    robindisk::ArcQuadrature qr = robindisk::robin_quadrature(inst);
    std::vector<double> samples(qr.nodes.size());
    for (size_t j = 0; j < samples.size(); ++j) samples[j] = config.varphi(qr.nodes[j]);
    double lambda = std::isfinite(constants.Lambda) ? constants.Lambda
                                                    : std::numeric_limits<double>::max();
    return robindisk::check_admissible(samples, config.xi, lambda);
}

int run_solve(const robindisk::RunConfig& config, const GlobalOptions& opts) {
    robindisk::ConstantsReport constants = constants_for(config);
    if (opts.guarantee_mode == "on") {
        robindisk::Admissibility verdict = admissibility_for(config, constants);
        if (!verdict.admissible) {
            std::fprintf(stderr,
                         "solve: varphi is not admissible (max %.6g > bound %.6g); "
                         "rerun with --guarantee-mode off to explore anyway\n",
                         verdict.max_sample, verdict.bound);
            return kExitSchema;
        }
    }
    robindisk::ProblemInstance inst = robindisk::make_instance(config);
    auto [trace, report] = robindisk::run_picard(inst, config.solver.tol, config.solver.max_iter);
    (void)trace;

    std::string dir = output_dir(config, opts);
    if (config.output.json)
        robindisk::write_json_file(dir + "/report.json",
                                   robindisk::make_document("robindisk-report/1",
                                                            robindisk::solver_report_to_json(report)));
    if (config.output.csv)
        robindisk::write_text_file(dir + "/iterations.csv", robindisk::iterations_csv(report));

    std::printf("solve: %s after %d iteration(s); final increment %.3e; residuals D %.3e N %.3e R %.3e\n",
                report.converged ? "converged" : "NOT converged", report.iterations,
                report.increments.empty() ? 0.0 : report.increments.back(),
                report.final_residuals.dirichlet, report.final_residuals.neumann,
                report.final_residuals.robin);
    return report.converged ? kExitOk : kExitNoConvergence;
}

int run_constants(const robindisk::RunConfig& config, const GlobalOptions& opts) {
    robindisk::ConstantsReport constants = constants_for(config);
    std::string dir = output_dir(config, opts);
    if (config.output.json)
        robindisk::write_json_file(dir + "/constants.json",
                                   robindisk::make_document("robindisk-constants/1",
                                                            robindisk::constants_report_to_json(constants)));
    if (config.output.csv)
        robindisk::write_text_file(dir + "/lambda_table.csv", robindisk::lambda_table_csv());
    std::printf("constants: M0 %.12g, Lambda %.6g (log10 %.6g), C %.12g, K %.3g\n", constants.M0,
                constants.Lambda, constants.Lambda_log10, constants.majorant_C, constants.K);
    return kExitOk;
}

int run_check_admissible(const robindisk::RunConfig& config, const GlobalOptions& opts) {
    robindisk::ConstantsReport constants = constants_for(config);
    robindisk::Admissibility verdict = admissibility_for(config, constants);
    std::string dir = output_dir(config, opts);
    if (config.output.json)
        robindisk::write_json_file(dir + "/admissible.json",
                                   robindisk::make_document("robindisk-admissible/1",
                                                            robindisk::admissibility_to_json(verdict)));
    std::printf("check-admissible: %s (max sample %.6g, bound %.6g, margin %.6g)\n",
                verdict.admissible ? "admissible" : "NOT admissible", verdict.max_sample,
                verdict.bound, verdict.margin);
    return kExitOk;
}

int run_verify(const robindisk::RunConfig& config, const GlobalOptions& opts) {
    using nlohmann::ordered_json;
    robindisk::EmbeddingReport embedding = robindisk::embedding_sampler(
        10000, 64, {3.0, 4.0, 6.0, 8.0, 12.0}, static_cast<unsigned long long>(opts.seed));
    robindisk::HarmonicSumReport harmonic =
        robindisk::harmonic_sum_check({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 10000);

    // V-norm oracle agreement on random traces.
    robindisk::RandomTrigPolyStream stream(static_cast<unsigned long long>(opts.seed) + 1);
    double max_rel = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        robindisk::TrigPoly f = stream.next(16);
        double direct = robindisk::v_norm(f);
        double oracle = robindisk::vnorm_2d_oracle(f, 40, 80);
        if (direct > 0.0) max_rel = std::max(max_rel, std::abs(direct - oracle) / direct);
    }

    ordered_json payload;
    payload["embedding"] = robindisk::embedding_report_to_json(embedding);
    payload["harmonic_sum"] = robindisk::harmonic_report_to_json(harmonic);
    payload["v_norm_oracle"] = {{"trials", 100}, {"degree", 16}, {"max_rel_error", max_rel}};
    bool ok = embedding.total_violations == 0 && harmonic.all_hold && max_rel <= 1e-6;
    payload["all_passed"] = ok;

    std::string dir = output_dir(config, opts);
    if (config.output.json)
        robindisk::write_json_file(dir + "/verify.json",
                                   robindisk::make_document("robindisk-verify/1", payload));
    std::printf("verify: embedding violations %d, harmonic-sum %s, v-norm oracle max rel %.3e -> %s\n",
                embedding.total_violations, harmonic.all_hold ? "ok" : "FAILED", max_rel,
                ok ? "ok" : "FAILED");
    return ok ? kExitOk : kExitInternal;
}

int dispatch_one(const std::string& subcommand, const std::string& config_path,
                 const GlobalOptions& opts);

int run_sweep(const std::string& sweep_path, const GlobalOptions& opts) {
    std::ifstream in(sweep_path);
    if (!in) {
        std::fprintf(stderr, "sweep: cannot read %s\n", sweep_path.c_str());
        return kExitSchema;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        std::fprintf(stderr, "sweep: malformed JSON: %s\n", e.what());
        return kExitMalformedJson;
    }
    if (!doc.is_object() || !doc.contains("schema") ||
        doc["schema"] != "robindisk-sweep/1" || !doc.contains("configs") ||
        !doc["configs"].is_array()) {
        std::fprintf(stderr,
                     "sweep: expected {\"schema\": \"robindisk-sweep/1\", \"configs\": [paths]}\n");
        return kExitSchema;
    }
    std::filesystem::path base = std::filesystem::path(sweep_path).parent_path();
    int status = kExitOk;
    for (const auto& entry : doc["configs"]) {
        if (!entry.is_string()) {
            std::fprintf(stderr, "sweep: configs entries must be path strings\n");
            return kExitSchema;
        }
        std::filesystem::path member = entry.get<std::string>();
        if (member.is_relative()) member = base / member;
        GlobalOptions member_opts = opts;
        std::string stem = member.stem().string();
        member_opts.out_dir =
            (opts.out_dir.empty() ? std::string("out") : opts.out_dir) + "/" + stem;
        std::printf("sweep: running %s -> %s\n", member.string().c_str(),
                    member_opts.out_dir.c_str());
        int code = dispatch_one("solve", member.string(), member_opts);
        if (code != kExitOk && status == kExitOk) status = code;
    }
    return status;
}

int dispatch_one(const std::string& subcommand, const std::string& config_path,
                 const GlobalOptions& opts) {
    try {
        robindisk::RunConfig config = robindisk::parse_config(config_path);
        if (subcommand == "solve") return run_solve(config, opts);
        if (subcommand == "constants") return run_constants(config, opts);
        if (subcommand == "check-admissible") return run_check_admissible(config, opts);
        if (subcommand == "verify") return run_verify(config, opts);
        std::fprintf(stderr, "unknown subcommand: %s\n", subcommand.c_str());
        return kExitInternal;
    } catch (const robindisk::ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return config_error_code(e);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return kExitSchema;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "robindisk: spectral solver for the Laplace problem on the unit disk with an\n"
        "exponential Robin boundary condition, plus its constants and verification tools"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "Path to a JSON config")
        ->required();
    app.add_option("--out", opts.out_dir, "Output directory (overrides output.directory)");
    app.add_option("--seed", opts.seed, "Seed for randomized verification suites");
    app.add_option("--guarantee-mode", opts.guarantee_mode,
                   "Require varphi admissibility before solving (on|off)")
        ->check(CLI::IsMember({"on", "off"}));

    auto* solve = app.add_subcommand("solve", "Run the fixed-point iteration and write the solver report");
    auto* constants = app.add_subcommand("constants", "Write the constants report");
    auto* check = app.add_subcommand("check-admissible", "Check varphi against the xi*Lambda bound");
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    auto* sweep = app.add_subcommand(
        "sweep", "Solve each config listed in a {schema: robindisk-sweep/1, configs: [...]} file");
    // Accept the shared options in either position:
    // "robindisk --config ... solve" and "robindisk solve --config ...".
    for (auto* sub : {solve, constants, check, verify, sweep}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    std::string name;
    if (solve->parsed()) name = "solve";
    if (constants->parsed()) name = "constants";
    if (check->parsed()) name = "check-admissible";
    if (verify->parsed()) name = "verify";
    if (sweep->parsed()) return run_sweep(opts.config_path, opts);
    return dispatch_one(name, opts.config_path, opts);
}
