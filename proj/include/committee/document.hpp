#pragma once

// JSON instance documents and the solve/check entry points used by the CLI.
//
// Instance:
//   {"candidates": [...], "voters": [[...]], "k": int,
//    "labels": {name: [...]},
//    "constraints": [{"type": "interval", "label", "min", "max"} |
//                    {"type": "dominance", "over", "under"}],
//    "rule": {"type": "weakly_separable", "gamma": "sntv"|"borda"|"bloc"|[numbers]} |
//            {"type": "stv", "variant": "simple"|"droop_gregory"},
//    "order": "score"|"leximax"|"leximin",
//    "reference": [...]}                       (optional)
//
// Result:
//   {"status": "optimal"|"infeasible", "committee": [...]|null,
//    "score": number|null, "solver": string}

#include "committee/instance.hpp"
#include "committee/oracle.hpp"

#include <string>
#include <string_view>

namespace committee {

enum class DiagnosticCode {
  malformed,
  unknown_candidate,
  unknown_label,
  invalid_bounds,
  non_permutation,
  illegal_combination,
};

std::string_view to_string(DiagnosticCode code);

/// Rejected document. `field` is a JSON path such as "voters[2]" or, for
/// syntax errors, "line N".
struct ParseError : InputError {
  ParseError(DiagnosticCode code, std::string field, const std::string& message);
  DiagnosticCode code;
  std::string field;
};

ElectionInstance parse_instance(std::string_view text);

/// Canonical document: candidates in identifier order, labels by name.
/// Scoring values that are not exact doubles are written as "p/q" strings,
/// which parse_instance also accepts.
std::string serialize_instance(const ElectionInstance& instance);

enum class SolverChoice { automatic, dp, region, oracle };

SolverChoice parse_solver_choice(std::string_view name);

/// The solver `automatic` would pick for this instance.
SolverChoice route(const ElectionInstance& instance);

struct SolveOutcome {
  /// 0 optimal, 1 infeasible, 2 contract or budget error.
  int exit_code = 2;
  SolveResult result;
  /// Explanation when exit_code is 2.
  std::string error;
};

/// Dispatches to the chosen solver and re-verifies any committee it returns.
SolveOutcome run_solve(const ElectionInstance& instance, SolverChoice choice,
                       const OracleBudget& budget = {});

std::string result_document(const ElectionInstance& instance, const SolveResult& result);

struct CheckOutcome {
  /// 0 valid, 1 violations found, 2 unknown or repeated candidate.
  int exit_code = 2;
  ValidationReport report;
  /// JSON report: {"valid": bool, "violations": [...]} or {"error": ...}.
  std::string document;
};

CheckOutcome run_check(const ElectionInstance& instance, const std::vector<std::string>& committee);

}  // namespace committee
