#include "robindisk/reports.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace robindisk {

namespace {

using nlohmann::ordered_json;

// JSON numbers cannot carry infinities; report them as null alongside the
// always-finite log10 companions.
ordered_json finite_or_null(double value) {
    if (std::isfinite(value)) return value;
    return nullptr;
}

std::string timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buffer;
}

}  // namespace

ordered_json make_document(const std::string& schema, const ordered_json& payload) {
    ordered_json doc;
    doc["schema"] = schema;
    doc["metadata"] = {{"generated_at", timestamp_utc()}, {"tool", "robindisk"}, {"version", "1.0.0"}};
    doc["report"] = payload;
    return doc;
}

ordered_json solver_report_to_json(const SolverReport& report) {
    ordered_json j;
    j["converged"] = report.converged;
    j["iterations"] = report.iterations;
    j["tol"] = report.tol;
    j["max_iter"] = report.max_iter;
    j["theoretical_K"] = report.theoretical_K;
    j["M0"] = report.M0;
    j["dirichlet_tol"] = report.dirichlet_tol;
    j["v_norms"] = report.v_norms;
    j["increments"] = report.increments;
    j["ratios"] = report.ratios;
    j["in_ball"] = report.in_ball;
    j["in_ball_all"] = ball_check(report);
    j["final_residuals"] = {{"dirichlet", report.final_residuals.dirichlet},
                            {"neumann", report.final_residuals.neumann},
                            {"robin", report.final_residuals.robin}};
    return j;
}

ordered_json constants_report_to_json(const ConstantsReport& report) {
    ordered_json lambda = ordered_json::object();
    for (const auto& [p, value] : report.lambda_table) lambda[std::to_string(p)] = value;
    ordered_json j;
    j["lambda_table"] = lambda;
    j["majorant_C"] = report.majorant_C;
    j["M0"] = report.M0;
    j["Lambda"] = finite_or_null(report.Lambda);
    j["Lambda_log10"] = finite_or_null(report.Lambda_log10);
    j["xi"] = report.xi;
    j["K"] = report.K;
    j["R_at_CM0"] = finite_or_null(report.R_at_CM0);
    j["R_at_CM0_log10"] = finite_or_null(report.R_at_CM0_log10);
    return j;
}

ordered_json admissibility_to_json(const Admissibility& verdict) {
    ordered_json j;
    j["admissible"] = verdict.admissible;
    j["bound"] = verdict.bound;
    j["min_sample"] = verdict.min_sample;
    j["max_sample"] = verdict.max_sample;
    j["margin"] = verdict.margin;
    return j;
}

ordered_json embedding_report_to_json(const EmbeddingReport& report) {
    ordered_json per_p = ordered_json::array();
    for (const auto& entry : report.per_p)
        per_p.push_back({{"p", entry.p},
                         {"lambda_p", entry.lambda},
                         {"max_ratio", entry.max_ratio},
                         {"violations", entry.violations}});
    ordered_json j;
    j["trials"] = report.trials;
    j["degree"] = report.degree;
    j["seed"] = report.seed;
    j["per_p"] = per_p;
    j["total_violations"] = report.total_violations;
    return j;
}

ordered_json harmonic_report_to_json(const HarmonicSumReport& report) {
    ordered_json j;
    j["all_hold"] = report.all_hold;
    j["cases_checked"] = report.cases_checked;
    j["min_upper_slack"] = report.min_upper_slack;
    j["min_outer_slack"] = report.min_outer_slack;
    return j;
}

std::string iterations_csv(const SolverReport& report) {
    std::ostringstream out;
    out << "k,v_norm,increment,ratio\n";
    out.precision(17);
    for (size_t k = 0; k < report.v_norms.size(); ++k) {
        out << (k + 1) << ',' << report.v_norms[k] << ',' << report.increments[k] << ',';
        if (k >= 1 && k - 1 < report.ratios.size()) out << report.ratios[k - 1];
        out << '\n';
    }
    return out.str();
}

std::string lambda_table_csv() {
    std::ostringstream out;
    out << "p,tilde_R,lambda_p\n";
    out.precision(17);
    for (int p = 3; p <= 12; ++p)
        out << p << ',' << tilde_R(p) << ',' << lambda_p(p) << '\n';
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path fs_path(path);
    if (fs_path.has_parent_path()) std::filesystem::create_directories(fs_path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

void write_json_file(const std::string& path, const ordered_json& doc) {
    write_text_file(path, doc.dump(2) + "\n");
}

}  // namespace robindisk
