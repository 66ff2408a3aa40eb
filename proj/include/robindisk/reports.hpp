#pragma once

#include <string>

#include <json.hpp>

#include "robindisk/constants.hpp"
#include "robindisk/picard.hpp"
#include "robindisk/verification.hpp"

namespace robindisk {

// Wraps a payload as {"schema": ..., "metadata": {...}, "report": payload}.
// Reports are deterministic except for the metadata block, which carries the
// timestamp and is excluded from reproducibility comparisons.
nlohmann::ordered_json make_document(const std::string& schema,
                                     const nlohmann::ordered_json& payload);

nlohmann::ordered_json solver_report_to_json(const SolverReport& report);
nlohmann::ordered_json constants_report_to_json(const ConstantsReport& report);
nlohmann::ordered_json admissibility_to_json(const Admissibility& verdict);
nlohmann::ordered_json embedding_report_to_json(const EmbeddingReport& report);
nlohmann::ordered_json harmonic_report_to_json(const HarmonicSumReport& report);

// Per-iteration table "k,v_norm,increment,ratio" (ratio blank for k = 1).
std::string iterations_csv(const SolverReport& report);

// Embedding-constant table "p,tilde_R,lambda_p" for integer p in [3, 12].
std::string lambda_table_csv();

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::ordered_json& doc);

}  // namespace robindisk
