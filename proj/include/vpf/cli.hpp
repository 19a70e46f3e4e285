#pragma once

/// @file cli.hpp
/// @brief Problem descriptions in JSON and the batch commands built on them.
///
/// A problem is a single JSON object:
///
///   {
///     "matrix": [[1, 0, 1], [0, 1, 1]],        // n rows of N integers
///     "weight": {"type": "lattice_path_count"},
///     "c":      ["1/4", "1/4", "1/2"],         // exact rationals: "p/q" or integers
///     "bound":  4,                             // degree bound D
///     "target": [2, 1]                         // λ or μ
///   }
///
/// Weight objects: {"type": "constant_one" | "lattice_path_count", "arity"?: k},
/// {"type": "geometric", "q": [...]}, {"type": "multinomial_monomial", "c": [...], "j": k}
/// with 1-based j, and {"type": "table", "box": [...], "values": [...]} with
/// values row-major over 0 <= x <= box, last coordinate fastest.

#include "vpf/core_types.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpf::cli {

/// Input error annotated with a JSON pointer (e.g. "/weight/q/1") or a byte offset.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct ProblemSpec {
  std::optional<StepMatrix> matrix;
  std::optional<WeightFunction> weight;
  std::optional<std::vector<Scalar>> c;
  std::optional<std::int64_t> bound;
  std::optional<LatticeVector> target;
};

ProblemSpec parse_problem(const nlohmann::json& doc);
ProblemSpec parse_problem_text(const std::string& text);

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

CommandResult cmd_pointed(const ProblemSpec& spec, bool json);
CommandResult cmd_count(const ProblemSpec& spec, bool json);
CommandResult cmd_series(const ProblemSpec& spec, bool json);
CommandResult cmd_paths(const ProblemSpec& spec, bool json);
/// which ∈ {thm1, rec, prop1, prop2, prop3, cb, cb1d}.
CommandResult cmd_verify(const ProblemSpec& spec, const std::string& which, bool json);

/// Parses `input` and runs `command` ("pointed", "count", "series", "paths",
/// "verify"), converting every error into a message and an exit code.
CommandResult run_command(const std::string& command, const std::string& which, const std::string& input, bool json);

}  // namespace vpf::cli
