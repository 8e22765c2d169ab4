#include "commands.hpp"

#include <charconv>
#include <chrono>

#include "semient/error.hpp"

#ifndef SEMIENT_VERSION
#define SEMIENT_VERSION "0.0.0"
#endif

namespace semient::cli {

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void require_p1(const RunConfig& cfg, const std::string& command) {
  if (cfg.n != 1)
    throw Error(ErrorCode::SchemaViolation, "'" + command + "' needs explicit generators on P1", "/space");
}

PerWordSection per_word_section(const Correspondence& c, const RunConfig& cfg) {
  PerWordSection s;
  s.nu = cfg.per_word_nu;
  const std::size_t terms = ladder_terminals(c, {s.nu}, cfg.estimator);
  const OrbitPool pool = build_estimator_pool(c, s.nu, terms, cfg.estimator);
  s.pool_size = static_cast<std::int64_t>(pool.size());
  CountOptions copt;
  copt.exact_limit = cfg.estimator.exact_limit;
  for (double eps : cfg.estimator.eps_grid) s.rows.push_back({eps, sum_up_partition(pool, eps, copt)});
  return s;
}

}  // namespace

std::string csv_of(const std::vector<EntropyEstimate>& estimates) {
  std::string out = "method,epsilon,nu,count,exact_flag,pool_size\n";
  for (const auto& e : estimates)
    for (const auto& c : e.counts)
      out += std::string(to_string(e.method)) + "," + shortest(c.epsilon) + "," + std::to_string(c.nu) + "," +
             std::to_string(c.count) + "," + (c.exact ? "1" : "0") + "," + std::to_string(c.pool_size) + "\n";
  return out;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.message()}, {"pointer", e.pointer()}};
  return j;
}

RunResult run_command(const std::string& command, const RunConfig& cfg, const RunOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig local = cfg;
  local.estimator.threads = opt.threads;
  if (opt.word_length > 0) local.word_length = opt.word_length;

  ReportInputs in;
  in.config = cfg.echo;
  in.config["relations"]["word_length"] = local.word_length;
  in.provenance.seed = cfg.seed;
  in.provenance.version = SEMIENT_VERSION;
  in.provenance.budgets = {{"max_forward", cfg.estimator.max_forward},
                           {"max_tree", cfg.estimator.max_tree},
                           {"exact_limit", cfg.estimator.exact_limit},
                           {"coincidence_depth", cfg.depth},
                           {"max_nodes", cfg.friedland.max_nodes},
                           {"max_words", cfg.word_budget.max_words},
                           {"max_degree", cfg.word_budget.max_degree}};

  std::vector<std::int64_t> expanded;
  for (std::size_t i = 0; i < cfg.degrees.size(); ++i)
    for (std::int64_t k = 0; k < cfg.multiplicities[i]; ++k) expanded.push_back(cfg.degrees[i]);
  in.exact = exact_record(expanded, cfg.n);

  const bool all = command == "report";
  std::vector<EntropyEstimate> estimates;
  if (command == "exact") {
    // formulas only
  } else if (command == "estimate" || all) {
    require_p1(cfg, command);
    const GeneratorSet gens(cfg.generators);
    const Correspondence c = build_correspondence(gens, cfg.multiplicities);
    const Method m = all ? Method::Both : opt.method;
    if (m != Method::Friedland) in.dinh_sibony = estimate_entropy(c, SeparationMode::DinhSibony, local.estimator);
    if (m != Method::DinhSibony) in.friedland = estimate_entropy(c, SeparationMode::Friedland, local.estimator);
    if (in.dinh_sibony) estimates.push_back(*in.dinh_sibony);
    if (in.friedland) estimates.push_back(*in.friedland);
    if (all) in.per_word = per_word_section(c, local);
  } else if (command != "friedland-bounds" && command != "coincidence" && command != "relations") {
    throw Error(ErrorCode::SchemaViolation, "unknown command '" + command + "'");
  }

  if (command == "friedland-bounds" || all) {
    require_p1(cfg, command);
    in.bounds = friedland_bounds(GeneratorSet(cfg.generators), cfg.depth, cfg.friedland);
  }
  if (command == "coincidence") {
    require_p1(cfg, command);
    const GeneratorSet gens(cfg.generators);
    const Correspondence c = build_correspondence(gens, cfg.multiplicities);
    auto points = coincidence_set(gens);
    std::vector<RecurrenceCertificate> certs;
    for (const auto& p : points)
      certs.push_back(p.exact_point ? is_recurrent(c, *p.exact_point, cfg.depth, cfg.friedland.recurrence)
                                    : is_recurrent(c, p.point, cfg.depth, cfg.friedland.recurrence));
    in.coincidence = std::make_pair(std::move(points), std::move(certs));
  }
  if (command == "relations" || all) {
    require_p1(cfg, command);
    in.relations = enumerate_words(GeneratorSet(cfg.generators), local.word_length, cfg.word_budget);
  }

  if (opt.wall_time)
    in.provenance.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  RunResult r;
  r.report = build_report(in);
  if (!estimates.empty()) r.csv = csv_of(estimates);
  return r;
}

}  // namespace semient::cli
