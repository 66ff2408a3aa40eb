#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "robindisk/linear_step.hpp"

namespace robindisk {

enum class ConfigErrorKind { Io, MalformedJson, Schema, Partition };

class ConfigError : public std::runtime_error {
  public:
    ConfigError(ConfigErrorKind k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
    ConfigErrorKind kind;
};

struct SolverSettings {
    int N = 128;
    double tol = 1e-10;
    int max_iter = 200;
    QuadratureSettings quad;
    double penalty_eta = 0.0;  // 0 selects the automatic default 1e6 * pi * N
};

struct OutputSettings {
    std::string directory = "out";
    bool json = true;
    bool csv = true;
};

struct RunConfig {
    double alpha = 0.0;
    double xi = 0.0;
    ArcPartition partition;
    BoundaryFn phi;
    BoundaryFn g;
    BoundaryFn varphi;
    SolverSettings solver;
    OutputSettings output;
};

// Reads and validates a JSON config. Unknown keys are rejected. Throws
// ConfigError with kind Io (unreadable file), MalformedJson (parse failure),
// Schema (shape or range violation), or Partition (invalid arc partition).
RunConfig parse_config(const std::string& path);

// Same, from an already-parsed document (testing convenience).
RunConfig config_from_json(const nlohmann::json& doc);

// Builds the solver-facing instance; fills defaulted penalty.
ProblemInstance make_instance(const RunConfig& config);

// Boundary function from its serialized form: named built-ins
// (constant | cosine | gaussian-bump) or a periodic sample table at uniform
// angles with linear interpolation.
BoundaryFn boundary_fn_from_json(const nlohmann::json& spec, const std::string& context);

}  // namespace robindisk
