#pragma once

#include <string>

#include "config.hpp"
#include "semient/error.hpp"

namespace semient::cli {

enum class Method { DinhSibony, Friedland, Both };

struct RunOptions {
  Method method = Method::Both;
  int word_length = 0;  // 0 keeps the configured value
  unsigned threads = 1;
  bool wall_time = false;
};

struct RunResult {
  Json report;
  std::string csv;  // empty when no counts were produced
};

// Subcommands: exact, estimate, friedland-bounds, coincidence, relations,
// report.
RunResult run_command(const std::string& command, const RunConfig& cfg, const RunOptions& opt);

std::string csv_of(const std::vector<EntropyEstimate>& estimates);

Json error_json(const Error& e);

}  // namespace semient::cli
