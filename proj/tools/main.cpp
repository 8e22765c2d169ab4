#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "semient/error.hpp"

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw semient::Error(semient::ErrorCode::UnreadableFile, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace semient::cli;
  CLI::App app{"Entropy of rational semigroups and holomorphic correspondences on the Riemann sphere"};
  app.require_subcommand(1);

  std::string config_path, output_path, csv_path, method = "both";
  std::optional<std::uint64_t> seed;
  bool strict = false;
  RunOptions opt;

  app.add_option("-c,--config", config_path, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("-o,--output", output_path, "Report path (default: config output.report, else stdout)");
  app.add_option("--csv", csv_path, "Count table path (default: config output.csv)");
  app.add_option("--seed", seed, "Override the configured seed");
  app.add_option("--threads", opt.threads, "Worker threads for estimator cells")->check(CLI::PositiveNumber);
  app.add_flag("--strict", strict, "Exit with status 1 when the report raises a flag");
  app.add_flag("--wall-time", opt.wall_time, "Record wall time in the report provenance");

  app.add_subcommand("exact", "Closed-form entropy and degree data");
  auto* est = app.add_subcommand("estimate", "Separated-set entropy estimates");
  est->add_option("--method", method, "ds, friedland or both")
      ->check(CLI::IsMember({"ds", "friedland", "both"}));
  app.add_subcommand("friedland-bounds", "Lower and upper bounds on Friedland entropy");
  app.add_subcommand("coincidence", "Coincidence set and recurrence certificates");
  auto* rel = app.add_subcommand("relations", "Relations among words of a fixed length");
  rel->add_option("--word-length", opt.word_length, "Word length")->check(CLI::PositiveNumber);
  app.add_subcommand("report", "Every section");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  opt.method = method == "ds" ? Method::DinhSibony : method == "friedland" ? Method::Friedland : Method::Both;
  try {
    RunConfig cfg = parse_config(config_path);
    if (seed) {
      cfg.seed = *seed;
      cfg.estimator.seed = *seed;
      cfg.echo["seed"] = *seed;
    }
    const RunResult result = run_command(command, cfg, opt);
    const std::string report = result.report.dump(2) + "\n";
    const std::string out = output_path.empty() ? cfg.report_path : output_path;
    if (out.empty())
      std::cout << report;
    else
      write_file(out, report);
    const std::string csv = csv_path.empty() ? cfg.csv_path : csv_path;
    if (!csv.empty() && !result.csv.empty()) write_file(csv, result.csv);
    if (strict && !result.report["flags"].empty()) return 1;
    return 0;
  } catch (const semient::Error& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << semient::Json{{"error", {{"code", "Internal"}, {"message", e.what()}, {"pointer", ""}}}}.dump(2)
              << "\n";
    return 3;
  }
}
