#include "vpf/cli.hpp"

#include "vpf/cone.hpp"
#include "vpf/enumeration.hpp"
#include "vpf/identities.hpp"
#include "vpf/series.hpp"

#include <set>
#include <sstream>

namespace vpf::cli {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

std::int64_t parse_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    throw SpecError(path, "expected an integer");
  }
  return j.get<std::int64_t>();
}

Scalar parse_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return Scalar(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (!j.is_string()) {
    throw SpecError(path, "expected an exact rational as \"p/q\" or an integer");
  }
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) {
    throw SpecError(path, "expected an array");
  }
  return j;
}

std::vector<Scalar> parse_rationals(const json& j, const std::string& path) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < require_array(j, path).size(); ++i) {
    out.push_back(parse_rational(j[i], child(path, i)));
  }
  return out;
}

LatticeVector parse_vector(const json& j, const std::string& path) {
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < require_array(j, path).size(); ++i) {
    coords.push_back(parse_integer(j[i], child(path, i)));
  }
  if (coords.empty()) {
    throw SpecError(path, "vector must not be empty");
  }
  return LatticeVector(std::move(coords));
}

StepMatrix parse_matrix(const json& j, const std::string& path) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < require_array(j, path).size(); ++r) {
    const std::string row_path = child(path, r);
    std::vector<std::int64_t> row;
    for (std::size_t c = 0; c < require_array(j[r], row_path).size(); ++c) {
      row.push_back(parse_integer(j[r][c], child(row_path, c)));
    }
    rows.push_back(std::move(row));
  }
  try {
    return StepMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
}

void reject_unknown_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw SpecError(child(path, key), "unknown field");
    }
  }
}

WeightFunction parse_weight(const json& j, const std::string& path, std::optional<std::size_t> default_arity) {
  if (!j.is_object()) {
    throw SpecError(path, "expected a weight object");
  }
  if (!j.contains("type") || !j["type"].is_string()) {
    throw SpecError(child(path, "type"), "missing weight type");
  }
  const std::string type = j["type"].get<std::string>();
  const auto arity = [&]() -> std::size_t {
    if (j.contains("arity")) {
      const auto a = parse_integer(j["arity"], child(path, "arity"));
      if (a < 1) {
        throw SpecError(child(path, "arity"), "arity must be positive");
      }
      return static_cast<std::size_t>(a);
    }
    if (!default_arity) {
      throw SpecError(child(path, "arity"), "arity is required when no matrix is given");
    }
    return *default_arity;
  };
  try {
    if (type == "constant_one") {
      reject_unknown_keys(j, path, {"type", "arity"});
      return WeightFunction(ConstantOne{arity()});
    }
    if (type == "lattice_path_count") {
      reject_unknown_keys(j, path, {"type", "arity"});
      return WeightFunction(LatticePathCount{arity()});
    }
    if (type == "geometric") {
      reject_unknown_keys(j, path, {"type", "q"});
      if (!j.contains("q")) {
        throw SpecError(child(path, "q"), "missing ratios");
      }
      return WeightFunction(GeometricWeights{parse_rationals(j["q"], child(path, "q"))});
    }
    if (type == "multinomial_monomial") {
      reject_unknown_keys(j, path, {"type", "c", "j"});
      if (!j.contains("c") || !j.contains("j")) {
        throw SpecError(path, "multinomial_monomial needs \"c\" and \"j\"");
      }
      const auto index = parse_integer(j["j"], child(path, "j"));
      auto c = parse_rationals(j["c"], child(path, "c"));
      if (index < 1 || static_cast<std::size_t>(index) > c.size()) {
        throw SpecError(child(path, "j"), "index must lie in 1.." + std::to_string(c.size()));
      }
      return WeightFunction(MultinomialMonomial{std::move(c), static_cast<std::size_t>(index - 1)});
    }
    if (type == "table") {
      reject_unknown_keys(j, path, {"type", "box", "values"});
      if (!j.contains("box") || !j.contains("values")) {
        throw SpecError(path, "table needs \"box\" and \"values\"");
      }
      return WeightFunction(
          Table{parse_vector(j["box"], child(path, "box")), parse_rationals(j["values"], child(path, "values"))});
    }
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
  throw SpecError(child(path, "type"), "unknown weight type \"" + type + "\"");
}

template <typename T>
const T& require(const std::optional<T>& field, const char* name) {
  if (!field) {
    throw SpecError(std::string("/") + name, "required by this command");
  }
  return *field;
}

json to_json(const LatticeVector& v) { return json(std::vector<std::int64_t>(v.begin(), v.end())); }

json to_json(const TruncatedSeries& s) {
  json terms = json::array();
  for (const auto& [key, value] : s.terms()) {
    terms.push_back({{"exponent", to_json(key.exponent)}, {"coefficient", to_fraction_string(value)}});
  }
  return {{"nvars", s.nvars()}, {"grading", to_json(s.grading())}, {"bound", s.bound()}, {"terms", terms}};
}

json to_json(const VerificationReport& r) {
  json out = {{"identity", r.identity},
              {"window", r.window},
              {"holds", r.holds},
              {"checked_terms", r.checked_terms},
              {"residual_terms", r.residual_terms},
              {"first_violation", nullptr}};
  if (r.first_violation) {
    out["first_violation"] = {{"location", r.first_violation->location},
                              {"lhs", to_fraction_string(r.first_violation->lhs)},
                              {"rhs", to_fraction_string(r.first_violation->rhs)}};
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CommandResult report_result(const VerificationReport& report, bool json_output) {
  CommandResult result;
  result.exit_code = report.holds ? kOk : kViolated;
  result.out = json_output ? dump(to_json(report)) : to_text(report) + "\n";
  return result;
}

}  // namespace

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) {
    throw SpecError("/", "problem must be a JSON object");
  }
  reject_unknown_keys(doc, "", {"matrix", "weight", "c", "bound", "target"});
  ProblemSpec spec;
  if (doc.contains("matrix")) {
    spec.matrix = parse_matrix(doc["matrix"], "/matrix");
  }
  if (doc.contains("weight")) {
    std::optional<std::size_t> arity;
    if (spec.matrix) {
      arity = spec.matrix->cols();
    }
    spec.weight = parse_weight(doc["weight"], "/weight", arity);
    if (spec.matrix && spec.weight->arity() != spec.matrix->cols()) {
      throw SpecError("/weight", "weight arity " + std::to_string(spec.weight->arity()) + " does not match " +
                                     std::to_string(spec.matrix->cols()) + " matrix columns");
    }
  }
  if (doc.contains("c")) {
    spec.c = parse_rationals(doc["c"], "/c");
  }
  if (doc.contains("bound")) {
    spec.bound = parse_integer(doc["bound"], "/bound");
    if (*spec.bound < 0) {
      throw SpecError("/bound", "bound must be nonnegative");
    }
  }
  if (doc.contains("target")) {
    spec.target = parse_vector(doc["target"], "/target");
  }
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("byte " + std::to_string(e.byte), e.what());
  }
  return parse_problem(doc);
}

CommandResult cmd_pointed(const ProblemSpec& spec, bool json_output) {
  const auto& matrix = require(spec.matrix, "matrix");
  CommandResult result;
  try {
    const auto cert = certify_pointed(matrix);
    if (json_output) {
      result.out = dump({{"pointed", true}, {"ell", to_json(cert.ell())}, {"step_degrees", cert.step_degrees()}});
    } else {
      result.out = "ell = " + to_spaced_string(cert.ell()) + "\n" +
                   "step degrees = " + to_spaced_string(LatticeVector(cert.step_degrees())) + "\n";
    }
  } catch (const NotPointed& e) {
    result.exit_code = kViolated;
    if (json_output) {
      result.out = dump({{"pointed", false}, {"combination", e.combination()}});
    } else {
      result.out = "not pointed: zero combination = " + to_spaced_string(LatticeVector(e.combination())) + "\n";
    }
  }
  return result;
}

CommandResult cmd_count(const ProblemSpec& spec, bool json_output) {
  const auto& matrix = require(spec.matrix, "matrix");
  const auto& target = require(spec.target, "target");
  const auto cert = certify_pointed(matrix);
  const Scalar value = spec.weight ? generalized_vp(matrix, cert, target, *spec.weight)
                                   : vector_partition(matrix, cert, target);
  CommandResult result;
  result.out = json_output ? dump({{"target", to_json(target)}, {"value", to_fraction_string(value)}})
                           : value.get_str() + "\n";
  return result;
}

CommandResult cmd_series(const ProblemSpec& spec, bool json_output) {
  const auto& matrix = require(spec.matrix, "matrix");
  const auto bound = require(spec.bound, "bound");
  const auto cert = certify_pointed(matrix);
  const TruncatedSeries series =
      spec.weight ? substitute_monomial(weight_series(*spec.weight, matrix.cols(), bound), matrix, cert, bound)
                  : geometric_inverse(matrix, cert, bound);
  CommandResult result;
  result.out = json_output ? dump(to_json(series)) : render(series);
  return result;
}

CommandResult cmd_paths(const ProblemSpec& spec, bool json_output) {
  const auto& matrix = require(spec.matrix, "matrix");
  const auto bound = require(spec.bound, "bound");
  const auto cert = certify_pointed(matrix);
  const auto table = generalized_vp_table(matrix, cert, LatticePathCount{matrix.cols()}, bound);
  CommandResult result;
  if (json_output) {
    json rows = json::array();
    for (const auto& [key, value] : table) {
      rows.push_back({{"target", to_json(key.exponent)}, {"degree", key.degree}, {"paths", value.get_str()}});
    }
    result.out = dump({{"ell", to_json(cert.ell())}, {"bound", bound}, {"paths", rows}});
  } else {
    std::ostringstream os;
    for (const auto& [key, value] : table) {
      os << to_string(key.exponent) << " : " << value.get_str() << '\n';
    }
    result.out = os.str();
  }
  return result;
}

CommandResult cmd_verify(const ProblemSpec& spec, const std::string& which, bool json_output) {
  if (which == "thm1") {
    const auto& matrix = require(spec.matrix, "matrix");
    return report_result(verify_theorem1(matrix, certify_pointed(matrix), require(spec.weight, "weight"),
                                         require(spec.c, "c"), require(spec.bound, "bound")),
                         json_output);
  }
  if (which == "rec") {
    const auto& weight = require(spec.weight, "weight");
    return report_result(verify_basic_recurrence(weight, weight.arity(), require(spec.bound, "bound")), json_output);
  }
  if (which == "prop1") {
    const auto& matrix = require(spec.matrix, "matrix");
    const WeightFunction weight = spec.weight ? *spec.weight : WeightFunction(LatticePathCount{matrix.cols()});
    return report_result(verify_prop1(matrix, certify_pointed(matrix), weight, require(spec.bound, "bound")),
                         json_output);
  }
  if (which == "prop2") {
    const auto& matrix = require(spec.matrix, "matrix");
    return report_result(verify_prop2(matrix, certify_pointed(matrix), require(spec.bound, "bound")), json_output);
  }
  if (which == "prop3") {
    const auto& matrix = require(spec.matrix, "matrix");
    return report_result(
        verify_prop3(matrix, certify_pointed(matrix), require(spec.c, "c"), require(spec.target, "target")),
        json_output);
  }
  if (which == "cb") {
    return report_result(verify_cb_multidim(require(spec.c, "c"), require(spec.target, "target")), json_output);
  }
  if (which == "cb1d") {
    const auto& c = require(spec.c, "c");
    const auto& mu = require(spec.target, "target");
    if (c.size() != 2 || mu.dim() != 2) {
      throw SpecError("/c", "cb1d needs exactly two coefficients and a two-component target");
    }
    return report_result(verify_cb_1d(c[0], c[1], mu[0], mu[1]), json_output);
  }
  throw SpecError("verify", "unknown identity \"" + which + "\" (expected thm1, rec, prop1, prop2, prop3, cb, cb1d)");
}

CommandResult run_command(const std::string& command, const std::string& which, const std::string& input,
                          bool json_output) {
  CommandResult result;
  try {
    const ProblemSpec spec = parse_problem_text(input);
    if (command == "pointed") {
      return cmd_pointed(spec, json_output);
    }
    if (command == "count") {
      return cmd_count(spec, json_output);
    }
    if (command == "series") {
      return cmd_series(spec, json_output);
    }
    if (command == "paths") {
      return cmd_paths(spec, json_output);
    }
    if (command == "verify") {
      return cmd_verify(spec, which, json_output);
    }
    result.exit_code = kUsage;
    result.err = "unknown command \"" + command + "\"\n";
  } catch (const NotPointed& e) {
    result.exit_code = kViolated;
    result.err = std::string(e.what()) + "\n";
  } catch (const SpecError& e) {
    result.exit_code = kUsage;
    result.err = std::string("input error at ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    result.exit_code = kUsage;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace vpf::cli
