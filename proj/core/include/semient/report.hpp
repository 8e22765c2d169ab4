#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semient/coincidence.hpp"
#include "semient/estimator.hpp"
#include "semient/formulas.hpp"

namespace semient {

using Json = nlohmann::ordered_json;

struct PerWordRow {
  double epsilon = 0.0;
  SumUpResult result;
};

struct PerWordSection {
  int nu = 0;
  std::int64_t pool_size = 0;
  std::vector<PerWordRow> rows;
};

struct Provenance {
  std::uint64_t seed = 0;
  std::string version;
  Json budgets = Json::object();
  std::optional<double> wall_time_seconds;  // omitted unless requested
};

struct ReportInputs {
  Json config = Json::object();
  ExactEntropyRecord exact;
  std::optional<EntropyEstimate> dinh_sibony;
  std::optional<EntropyEstimate> friedland;
  std::optional<PerWordSection> per_word;
  std::optional<FriedlandBounds> bounds;
  // Coincidence points with their recurrence certificates, reported on
  // their own when no bounds were computed.
  std::optional<std::pair<std::vector<CoincidencePoint>, std::vector<RecurrenceCertificate>>> coincidence;
  std::optional<WordLedger> relations;
  Provenance provenance;
};

Json scalar_json(const ExactScalar& s);
Json point_json(const ProjPoint& p);
Json point_json(const ExactPoint& p);
Json estimate_json(const EntropyEstimate& e);

// Deterministic report: fixed key order, absent sections marked, and
// flags for estimates above a proven upper bound by more than their stderr.
Json build_report(const ReportInputs& in);

// Names of raised flags in a built report.
std::vector<std::string> report_flags(const Json& report);

}  // namespace semient
