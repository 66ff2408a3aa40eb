#include "robindisk/config.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <set>
#include <vector>

namespace robindisk {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
    throw ConfigError(ConfigErrorKind::Schema, "config schema: " + message);
}

void require_object(const json& j, const std::string& context) {
    if (!j.is_object()) schema_error(context + " must be an object");
}

void check_keys(const json& obj, const std::string& context,
                const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            schema_error(context + ": unknown key \"" + it.key() + "\"");
}

double require_number(const json& obj, const std::string& context, const std::string& key) {
    if (!obj.contains(key)) schema_error(context + ": missing key \"" + key + "\"");
    if (!obj[key].is_number()) schema_error(context + "." + key + " must be a number");
    return obj[key].get<double>();
}

double optional_number(const json& obj, const std::string& context, const std::string& key,
                       double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) schema_error(context + "." + key + " must be a number");
    return obj[key].get<double>();
}

std::vector<AngularArc> arcs_from_json(const json& j, const std::string& context) {
    if (!j.is_array()) throw ConfigError(ConfigErrorKind::Partition,
                                         "partition: " + context + " must be an array of [start, end] pairs");
    std::vector<AngularArc> arcs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ConfigError(ConfigErrorKind::Partition,
                              "partition: " + context + " entries must be [start, end] number pairs");
        AngularArc a{pair[0].get<double>(), pair[1].get<double>()};
        if (!arc_well_formed(a))
            throw ConfigError(ConfigErrorKind::Partition,
                              "partition: malformed arc in " + context +
                                  " (need start in [0,2pi) and 0 < end-start < 2pi)");
        arcs.push_back(a);
    }
    return arcs;
}

}  // namespace

BoundaryFn boundary_fn_from_json(const json& spec, const std::string& context) {
    require_object(spec, context);
    if (!spec.contains("kind") || !spec["kind"].is_string())
        schema_error(context + ": missing string key \"kind\"");
    std::string kind = spec["kind"].get<std::string>();
    if (kind == "constant") {
        check_keys(spec, context, {"kind", "value"});
        double value = require_number(spec, context, "value");
        return [value](double) { return value; };
    }
    if (kind == "cosine") {
        check_keys(spec, context, {"kind", "amplitude", "frequency", "phase"});
        double amplitude = require_number(spec, context, "amplitude");
        double frequency = require_number(spec, context, "frequency");
        double phase = optional_number(spec, context, "phase", 0.0);
        return [amplitude, frequency, phase](double theta) {
            return amplitude * std::cos(frequency * theta + phase);
        };
    }
    if (kind == "gaussian-bump") {
        check_keys(spec, context, {"kind", "amplitude", "center", "width"});
        double amplitude = require_number(spec, context, "amplitude");
        double center = require_number(spec, context, "center");
        double width = require_number(spec, context, "width");
        if (!(width > 0.0)) schema_error(context + ".width must be > 0");
        return [amplitude, center, width](double theta) {
            // Wrapped angular distance keeps the bump periodic.
            double d = std::fmod(theta - center, kTwoPi);
            if (d < -kPi) d += kTwoPi;
            if (d > kPi) d -= kTwoPi;
            return amplitude * std::exp(-0.5 * d * d / (width * width));
        };
    }
    if (kind == "samples") {
        check_keys(spec, context, {"kind", "values"});
        if (!spec.contains("values") || !spec["values"].is_array())
            schema_error(context + ": samples need an array key \"values\"");
        auto values = std::make_shared<std::vector<double>>();
        for (const auto& v : spec["values"]) {
            if (!v.is_number()) schema_error(context + ".values must be numbers");
            values->push_back(v.get<double>());
        }
        if (values->size() < 2) schema_error(context + ".values needs at least 2 samples");
        // Samples at uniform angles 2 pi j / M, periodic linear interpolation.
        return [values](double theta) {
            const size_t M = values->size();
            double pos = std::fmod(theta, kTwoPi);
            if (pos < 0.0) pos += kTwoPi;
            pos = pos / kTwoPi * M;
            size_t j = static_cast<size_t>(pos) % M;
            double frac = pos - std::floor(pos);
            return (*values)[j] * (1.0 - frac) + (*values)[(j + 1) % M] * frac;
        };
    }
    schema_error(context + ": unknown boundary function kind \"" + kind + "\"");
}

RunConfig config_from_json(const json& doc) {
    require_object(doc, "document");
    check_keys(doc, "document", {"schema", "problem", "solver", "output"});
    if (!doc.contains("schema") || !doc["schema"].is_string() ||
        doc["schema"].get<std::string>() != "robindisk-config/1")
        schema_error("expected \"schema\": \"robindisk-config/1\"");
    if (!doc.contains("problem")) schema_error("missing \"problem\" section");

    RunConfig config;
    const json& problem = doc["problem"];
    require_object(problem, "problem");
    check_keys(problem, "problem", {"alpha", "partition", "phi", "g", "varphi", "xi"});
    config.alpha = require_number(problem, "problem", "alpha");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        schema_error("problem.alpha must lie in (0,1)");
    config.xi = require_number(problem, "problem", "xi");
    if (!(config.xi > 0.0 && config.xi < 1.0)) schema_error("problem.xi must lie in (0,1)");

    if (!problem.contains("partition")) schema_error("missing problem.partition");
    const json& part = problem["partition"];
    require_object(part, "problem.partition");
    check_keys(part, "problem.partition", {"dirichlet", "neumann", "robin"});
    for (const char* key : {"dirichlet", "neumann", "robin"})
        if (!part.contains(key))
            throw ConfigError(ConfigErrorKind::Partition,
                              std::string("partition: missing group \"") + key + "\"");
    config.partition.dirichlet = arcs_from_json(part["dirichlet"], "dirichlet");
    config.partition.neumann = arcs_from_json(part["neumann"], "neumann");
    config.partition.robin = arcs_from_json(part["robin"], "robin");
    auto vr = validate_partition(config.partition);
    if (!vr.ok) throw ConfigError(ConfigErrorKind::Partition, "partition: " + vr.message);

    for (const char* key : {"phi", "g", "varphi"})
        if (!problem.contains(key))
            schema_error(std::string("missing problem.") + key);
    config.phi = boundary_fn_from_json(problem["phi"], "problem.phi");
    config.g = boundary_fn_from_json(problem["g"], "problem.g");
    config.varphi = boundary_fn_from_json(problem["varphi"], "problem.varphi");

    if (doc.contains("solver")) {
        const json& solver = doc["solver"];
        require_object(solver, "solver");
        check_keys(solver, "solver", {"N", "tol", "max_iter", "quadrature", "penalty_eta"});
        double n = optional_number(solver, "solver", "N", config.solver.N);
        if (n != std::floor(n) || n < 4) schema_error("solver.N must be an integer >= 4");
        config.solver.N = static_cast<int>(n);
        config.solver.tol = optional_number(solver, "solver", "tol", config.solver.tol);
        if (!(config.solver.tol > 0.0)) schema_error("solver.tol must be > 0");
        double mi = optional_number(solver, "solver", "max_iter", config.solver.max_iter);
        if (mi != std::floor(mi) || mi < 1) schema_error("solver.max_iter must be an integer >= 1");
        config.solver.max_iter = static_cast<int>(mi);
        if (solver.contains("penalty_eta")) {
            if (solver["penalty_eta"].is_string()) {
                if (solver["penalty_eta"].get<std::string>() != "auto")
                    schema_error("solver.penalty_eta must be a positive number or \"auto\"");
            } else {
                double eta = require_number(solver, "solver", "penalty_eta");
                if (!(eta > 0.0)) schema_error("solver.penalty_eta must be > 0");
                config.solver.penalty_eta = eta;
            }
        }
        if (solver.contains("quadrature")) {
            const json& quad = solver["quadrature"];
            require_object(quad, "solver.quadrature");
            check_keys(quad, "solver.quadrature", {"points_per_panel", "min_panels_per_arc"});
            double pts = optional_number(quad, "solver.quadrature", "points_per_panel",
                                         config.solver.quad.points_per_panel);
            if (pts != std::floor(pts) || pts < 2)
                schema_error("solver.quadrature.points_per_panel must be an integer >= 2");
            config.solver.quad.points_per_panel = static_cast<int>(pts);
            double panels = optional_number(quad, "solver.quadrature", "min_panels_per_arc",
                                            config.solver.quad.min_panels_per_arc);
            if (panels != std::floor(panels) || panels < 1)
                schema_error("solver.quadrature.min_panels_per_arc must be an integer >= 1");
            config.solver.quad.min_panels_per_arc = static_cast<int>(panels);
        }
    }

    if (doc.contains("output")) {
        const json& output = doc["output"];
        require_object(output, "output");
        check_keys(output, "output", {"directory", "formats"});
        if (output.contains("directory")) {
            if (!output["directory"].is_string()) schema_error("output.directory must be a string");
            config.output.directory = output["directory"].get<std::string>();
        }
        if (output.contains("formats")) {
            if (!output["formats"].is_array()) schema_error("output.formats must be an array");
            config.output.json = false;
            config.output.csv = false;
            for (const auto& f : output["formats"]) {
                if (!f.is_string()) schema_error("output.formats entries must be strings");
                std::string name = f.get<std::string>();
                if (name == "json")
                    config.output.json = true;
                else if (name == "csv")
                    config.output.csv = true;
                else
                    schema_error("output.formats: unknown format \"" + name + "\"");
            }
        }
    }
    return config;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(ConfigErrorKind::Io, "cannot read config file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(ConfigErrorKind::MalformedJson,
                          std::string("malformed JSON: ") + e.what());
    }
    return config_from_json(doc);
}

ProblemInstance make_instance(const RunConfig& config) {
    ProblemInstance inst{Alpha(config.alpha),
                         config.partition,
                         config.phi,
                         config.g,
                         config.varphi,
                         config.xi,
                         config.solver.N,
                         config.solver.quad,
                         config.solver.penalty_eta,
                         0.0};
    if (inst.penalty_eta == 0.0) inst.penalty_eta = default_penalty_eta(inst.N);
    return inst;
}

}  // namespace robindisk
