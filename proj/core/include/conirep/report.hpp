#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "conirep/evaluator.hpp"
#include "conirep/oracle.hpp"

namespace conirep {

inline constexpr int kReportSchemaVersion = 1;

/// Evaluation report; see schema/evaluation-report.schema.json.
nlohmann::ordered_json to_json(const EvaluationResult& result);
nlohmann::ordered_json to_json(const QuadratureResult& result, std::size_t states);

void write_csv(std::ostream& out, const EvaluationResult& result);
void write_text(std::ostream& out, const EvaluationResult& result);

void write_csv(std::ostream& out, const QuadratureResult& result);
void write_text(std::ostream& out, const QuadratureResult& result);

/// "n,ir_num,abs_error" header plus one row per resolution.
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);

}  // namespace conirep
