#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semient/coincidence.hpp"
#include "semient/estimator.hpp"
#include "semient/report.hpp"

namespace semient::cli {

struct RunConfig {
  std::string space = "P1";
  int n = 1;
  // P1 only. For symbolic Pn spaces only `degrees` is given.
  std::vector<RationalMap> generators;
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> multiplicities;

  EstimatorConfig estimator;
  int per_word_nu = 3;
  std::uint64_t seed = 0;

  int depth = 12;
  FriedlandOptions friedland;

  int word_length = 2;
  WordBudget word_budget;

  std::string report_path;
  std::string csv_path;

  // Normalized configuration with every default filled in.
  Json echo;
};

RunConfig parse_config_json(const Json& doc);
// Throws UnreadableFile, SchemaViolation or BadScalarLiteral; the error
// pointer names the offending field.
RunConfig parse_config(const std::string& path);

// Parses a scalar: a string literal, a JSON number, or {"re": .., "im": ..}.
// Sets *is_float when a JSON floating-point number was used.
ExactScalar parse_scalar(const Json& j, const std::string& pointer, bool* is_float);

}  // namespace semient::cli
