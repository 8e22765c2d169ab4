#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "semient/error.hpp"

namespace semient::cli {

namespace {

[[noreturn]] void violation(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, what, pointer);
}

void only_keys(const Json& obj, const std::string& pointer, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) violation(pointer.empty() ? "/" : pointer, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) violation(pointer + "/" + k, "unknown field");
}

template <class T>
T get_integer(const Json& obj, const char* key, const std::string& pointer, T def, T min_value) {
  if (!obj.contains(key)) return def;
  const Json& v = obj[key];
  if (!v.is_number_integer()) violation(pointer + "/" + key, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < static_cast<std::int64_t>(min_value)) violation(pointer + "/" + key, "value too small");
  return static_cast<T>(x);
}

double get_real(const Json& obj, const char* key, const std::string& pointer, double def, double lo, double hi) {
  if (!obj.contains(key)) return def;
  const Json& v = obj[key];
  if (!v.is_number()) violation(pointer + "/" + key, "expected a number");
  const double x = v.get<double>();
  if (!(x > lo && x <= hi)) violation(pointer + "/" + key, "value out of range");
  return x;
}

std::string get_string(const Json& obj, const char* key, const std::string& pointer, std::string def) {
  if (!obj.contains(key)) return def;
  if (!obj[key].is_string()) violation(pointer + "/" + key, "expected a string");
  return obj[key].get<std::string>();
}

Json scalar_echo(const ExactScalar& s, bool is_float) {
  if (is_float) return Json{{"re", s.re().get_d()}, {"im", s.im().get_d()}};
  return scalar_json(s);
}

}  // namespace

ExactScalar parse_scalar(const Json& j, const std::string& pointer, bool* is_float) {
  auto part = [&](const Json& v, const std::string& ptr) -> ExactScalar {
    if (v.is_number_integer()) return ExactScalar(mpq_class(v.dump()), 0);
    if (v.is_number_float()) {
      *is_float = true;
      return ExactScalar(mpq_class(v.get<double>()), 0);
    }
    if (v.is_string()) {
      try {
        return ExactScalar::parse(v.get<std::string>());
      } catch (const Error& e) {
        throw Error(ErrorCode::BadScalarLiteral, e.message(), ptr);
      }
    }
    throw Error(ErrorCode::BadScalarLiteral, "expected a number or a numeric string", ptr);
  };
  if (j.is_object()) {
    only_keys(j, pointer, {"re", "im"});
    const ExactScalar re = j.contains("re") ? part(j["re"], pointer + "/re") : ExactScalar(0);
    const ExactScalar im = j.contains("im") ? part(j["im"], pointer + "/im") : ExactScalar(0);
    return ExactScalar(re.re(), im.re());
  }
  return part(j, pointer);
}

RunConfig parse_config_json(const Json& doc) {
  only_keys(doc, "", {"space", "generators", "degrees", "multiplicities", "seed", "estimator", "coincidence",
                      "relations", "output"});
  RunConfig cfg;
  Json echo;

  cfg.space = get_string(doc, "space", "", "P1");
  if (cfg.space.size() < 2 || cfg.space[0] != 'P' || cfg.space.find_first_not_of("0123456789", 1) != std::string::npos)
    violation("/space", "expected \"P<n>\"");
  cfg.n = std::stoi(cfg.space.substr(1));
  if (cfg.n < 1) violation("/space", "dimension must be positive");
  echo["space"] = cfg.space;

  if (cfg.n == 1) {
    if (!doc.contains("generators")) violation("/generators", "missing required field");
    if (doc.contains("degrees")) violation("/degrees", "degrees are derived from generators on P1");
    const Json& gens = doc["generators"];
    if (!gens.is_array() || gens.empty()) violation("/generators", "expected a nonempty array");
    Json gen_echo = Json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string ptr = "/generators/" + std::to_string(i);
      only_keys(gens[i], ptr, {"num", "den"});
      if (!gens[i].contains("num")) violation(ptr + "/num", "missing required field");
      bool is_float = false;
      auto poly = [&](const char* key) {
        std::vector<ExactScalar> out;
        if (!gens[i].contains(key)) return std::vector<ExactScalar>{ExactScalar(1)};
        const Json& arr = gens[i][key];
        if (!arr.is_array() || arr.empty()) violation(ptr + "/" + key, "expected a nonempty array");
        for (std::size_t k = 0; k < arr.size(); ++k)
          out.push_back(parse_scalar(arr[k], ptr + "/" + key + "/" + std::to_string(k), &is_float));
        return out;
      };
      const auto num = poly("num");
      const auto den = poly("den");
      try {
        RationalMap f = RationalMap::from_affine(num, den);
        if (is_float) f = RationalMap::make_float(f.num_float(), f.den_float());
        cfg.generators.push_back(f);
      } catch (const Error& e) {
        throw Error(ErrorCode::SchemaViolation, std::string(to_string(e.code())) + ": " + e.message(), ptr);
      }
      Json ge;
      Json jn = Json::array(), jd = Json::array();
      for (const auto& s : num) jn.push_back(scalar_echo(s, is_float));
      for (const auto& s : den) jd.push_back(scalar_echo(s, is_float));
      ge["num"] = jn;
      ge["den"] = jd;
      ge["map"] = cfg.generators.back().to_string();
      gen_echo.push_back(ge);
    }
    try {
      GeneratorSet check(cfg.generators);
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaViolation, e.message(), e.pointer());
    }
    for (const auto& f : cfg.generators) cfg.degrees.push_back(f.degree());
    echo["generators"] = gen_echo;
  } else {
    if (doc.contains("generators")) violation("/generators", "explicit generators are supported on P1 only");
    if (!doc.contains("degrees") || !doc["degrees"].is_array() || doc["degrees"].empty())
      violation("/degrees", "expected a nonempty array of degrees");
    for (std::size_t i = 0; i < doc["degrees"].size(); ++i) {
      const Json& d = doc["degrees"][i];
      if (!d.is_number_integer() || d.get<std::int64_t>() < 1)
        violation("/degrees/" + std::to_string(i), "expected a positive integer");
      cfg.degrees.push_back(d.get<std::int64_t>());
    }
    echo["degrees"] = cfg.degrees;
  }

  if (doc.contains("multiplicities")) {
    const Json& m = doc["multiplicities"];
    if (!m.is_array()) violation("/multiplicities", "expected an array");
    if (m.size() != cfg.degrees.size())
      throw Error(ErrorCode::SchemaViolation, "one multiplicity per generator is required", "/multiplicities");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].is_number_integer() || m[i].get<std::int64_t>() < 1)
        violation("/multiplicities/" + std::to_string(i), "expected a positive integer");
      cfg.multiplicities.push_back(m[i].get<std::int64_t>());
    }
  } else {
    cfg.multiplicities.assign(cfg.degrees.size(), 1);
  }
  echo["multiplicities"] = cfg.multiplicities;

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer() || (!doc["seed"].is_number_unsigned() && doc["seed"].get<std::int64_t>() < 0)) violation("/seed", "expected a nonnegative integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  echo["seed"] = cfg.seed;

  const Json est = doc.contains("estimator") ? doc["estimator"] : Json::object();
  only_keys(est, "/estimator", {"eps_grid", "nu_ladder", "start_pool", "terminals", "max_forward", "max_tree",
                                "exact_limit", "fit_window", "per_word_nu"});
  EstimatorConfig& e = cfg.estimator;
  if (est.contains("eps_grid")) {
    const Json& g = est["eps_grid"];
    if (!g.is_array() || g.empty()) violation("/estimator/eps_grid", "expected a nonempty array");
    e.eps_grid.clear();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string ptr = "/estimator/eps_grid/" + std::to_string(i);
      if (!g[i].is_number()) violation(ptr, "expected a number");
      const double x = g[i].get<double>();
      if (!(x > 0.0 && x < 1.0)) violation(ptr, "epsilon must lie in (0, 1)");
      e.eps_grid.push_back(x);
    }
  }
  if (est.contains("nu_ladder")) {
    const Json& l = est["nu_ladder"];
    if (!l.is_array() || l.empty()) violation("/estimator/nu_ladder", "expected a nonempty array");
    e.nu_ladder.clear();
    for (std::size_t i = 0; i < l.size(); ++i) {
      const std::string ptr = "/estimator/nu_ladder/" + std::to_string(i);
      if (!l[i].is_number_integer() || l[i].get<int>() < 1) violation(ptr, "expected a positive integer");
      if (!e.nu_ladder.empty() && l[i].get<int>() <= e.nu_ladder.back()) violation(ptr, "ladder must increase");
      e.nu_ladder.push_back(l[i].get<int>());
    }
  }
  e.start_pool = get_integer<std::size_t>(est, "start_pool", "/estimator", e.start_pool, 1);
  e.terminals = get_integer<std::size_t>(est, "terminals", "/estimator", e.terminals, 0);
  e.max_forward = get_real(est, "max_forward", "/estimator", e.max_forward, 0.0, 1e9);
  e.max_tree = get_real(est, "max_tree", "/estimator", e.max_tree, 0.0, 1e9);
  e.exact_limit = get_integer<std::size_t>(est, "exact_limit", "/estimator", e.exact_limit, 0);
  if (e.exact_limit > 64) violation("/estimator/exact_limit", "exact counting supports at most 64 orbits");
  e.fit_window = get_integer<int>(est, "fit_window", "/estimator", e.fit_window, 0);
  if (e.fit_window > 0 && e.fit_window < 3) violation("/estimator/fit_window", "a fit needs at least 3 values");
  cfg.per_word_nu = get_integer<int>(est, "per_word_nu", "/estimator", cfg.per_word_nu, 1);
  e.seed = cfg.seed;
  echo["estimator"] = {{"eps_grid", e.eps_grid},     {"nu_ladder", e.nu_ladder},     {"start_pool", e.start_pool},
                       {"terminals", e.terminals},   {"max_forward", e.max_forward}, {"max_tree", e.max_tree},
                       {"exact_limit", e.exact_limit}, {"fit_window", e.fit_window}, {"per_word_nu", cfg.per_word_nu}};

  const Json co = doc.contains("coincidence") ? doc["coincidence"] : Json::object();
  only_keys(co, "/coincidence", {"depth", "tol", "max_nodes", "max_frontier", "max_exact_bits"});
  cfg.depth = get_integer<int>(co, "depth", "/coincidence", cfg.depth, 1);
  auto& ro = cfg.friedland.recurrence;
  ro.tol = get_real(co, "tol", "/coincidence", ro.tol, 0.0, 0.5);
  cfg.friedland.max_nodes = get_integer<std::size_t>(co, "max_nodes", "/coincidence", cfg.friedland.max_nodes, 1);
  ro.max_frontier = get_integer<std::size_t>(co, "max_frontier", "/coincidence", ro.max_frontier, 1);
  ro.max_exact_bits = get_integer<std::size_t>(co, "max_exact_bits", "/coincidence", ro.max_exact_bits, 1);
  echo["coincidence"] = {{"depth", cfg.depth},
                         {"tol", ro.tol},
                         {"max_nodes", cfg.friedland.max_nodes},
                         {"max_frontier", ro.max_frontier},
                         {"max_exact_bits", ro.max_exact_bits}};

  const Json rel = doc.contains("relations") ? doc["relations"] : Json::object();
  only_keys(rel, "/relations", {"word_length", "max_words", "max_degree"});
  cfg.word_length = get_integer<int>(rel, "word_length", "/relations", cfg.word_length, 1);
  cfg.word_budget.max_words = get_real(rel, "max_words", "/relations", cfg.word_budget.max_words, 0.0, 1e9);
  cfg.word_budget.max_degree = get_real(rel, "max_degree", "/relations", cfg.word_budget.max_degree, 0.0, 1e9);
  echo["relations"] = {{"word_length", cfg.word_length},
                       {"max_words", cfg.word_budget.max_words},
                       {"max_degree", cfg.word_budget.max_degree}};

  const Json out = doc.contains("output") ? doc["output"] : Json::object();
  only_keys(out, "/output", {"report", "csv"});
  cfg.report_path = get_string(out, "report", "/output", "");
  cfg.csv_path = get_string(out, "csv", "/output", "");
  echo["output"] = {{"report", cfg.report_path}, {"csv", cfg.csv_path}};

  cfg.echo = echo;
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UnreadableFile, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::UnreadableFile, std::string("invalid JSON: ") + e.what());
  }
  return parse_config_json(doc);
}

}  // namespace semient::cli
