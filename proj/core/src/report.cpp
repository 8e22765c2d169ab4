#include "semient/report.hpp"

#include <cmath>

namespace semient {

namespace {

double log2_of(double nats) { return nats / std::log(2.0); }

Json absent() { return Json{{"absent", true}}; }

Json word_json(const std::vector<int>& w) { return Json(w); }

}  // namespace

Json scalar_json(const ExactScalar& s) { return Json{{"re", s.re().get_str()}, {"im", s.im().get_str()}}; }

Json point_json(const ProjPoint& p) {
  return Json{{"h0", {{"re", p.h0().real()}, {"im", p.h0().imag()}}},
              {"h1", {{"re", p.h1().real()}, {"im", p.h1().imag()}}}};
}

Json point_json(const ExactPoint& p) { return Json{{"h0", scalar_json(p.h0())}, {"h1", scalar_json(p.h1())}}; }

Json estimate_json(const EntropyEstimate& e) {
  Json j;
  j["method"] = to_string(e.method);
  j["value"] = e.value;
  j["value_log2"] = log2_of(e.value);
  j["stderr"] = e.slope_stderr;
  j["best_epsilon"] = e.best_epsilon;
  j["eps_grid"] = e.eps_grid;
  j["nu_range"] = {e.nu_range.first, e.nu_range.second};
  j["seed"] = e.seed;
  j["all_exact"] = e.all_exact;
  j["pool_sizes"] = e.pool_sizes;
  Json fits = Json::array();
  for (const auto& f : e.per_epsilon)
    fits.push_back({{"epsilon", f.epsilon}, {"slope", f.slope}, {"stderr", f.stderr_}, {"nus", f.nus}});
  j["per_epsilon"] = fits;
  Json rows = Json::array();
  for (const auto& c : e.counts)
    rows.push_back({{"epsilon", c.epsilon},
                    {"nu", c.nu},
                    {"count", c.count},
                    {"exact", c.exact},
                    {"pool_size", c.pool_size}});
  j["counts"] = rows;
  return j;
}

namespace {

Json exact_json(const ExactEntropyRecord& r) {
  Json j;
  j["method"] = "closed_form";
  j["n"] = r.n;
  j["degrees"] = r.degrees;
  j["h_top_exact"] = r.h_top_exact;
  j["h_top_exact_log2"] = log2_of(r.h_top_exact);
  Json dp = Json::array();
  for (const auto& d : r.dynamical_degrees) dp.push_back(d.get_str());
  j["dynamical_degrees"] = dp;
  j["d_top"] = r.d_top;
  j["bounds"] = {{"method", "general_bounds"}, {"lower", r.lower}, {"upper", r.upper}};
  return j;
}

Json coincidence_json(const std::vector<CoincidencePoint>& points, const std::vector<RecurrenceCertificate>& rec) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& cp = points[i];
    Json p;
    p["point"] = point_json(cp.point);
    if (cp.exact_point) p["exact_point"] = point_json(*cp.exact_point);
    Json w = Json::array();
    for (const auto& [a, c] : cp.witnesses) w.push_back({a, c});
    p["witnesses"] = w;
    p["exact"] = cp.exact();
    if (i < rec.size()) {
      const auto& rc = rec[i];
      p["recurrence"] = {{"status", rc.recurrent ? "recurrent" : "not_found_within_depth"},
                         {"return_depths", rc.return_depths},
                         {"searched_depth", rc.searched_depth},
                         {"exact", rc.exact}};
    }
    pts.push_back(p);
  }
  return pts;
}

Json bounds_json(const FriedlandBounds& b) {
  Json j;
  j["method"] = "max_mean_cycle";
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["s_hat"] = b.s_hat;
  j["lower_log2"] = log2_of(b.lower);
  j["upper_log2"] = log2_of(b.upper);
  j["exact"] = b.exact;
  j["depth_cap_hit"] = b.depth_cap_hit;
  j["coincidence"] = coincidence_json(b.coincidence, b.recurrence);
  Json nodes = Json::array();
  for (const auto& n : b.nodes) nodes.push_back(point_json(n));
  Json edges = Json::array();
  for (const auto& e : b.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity}});
  j["graph"] = {{"nodes", nodes}, {"edges", edges}};
  return j;
}

Json relations_json(const WordLedger& l) {
  Json j;
  j["word_length"] = l.length;
  j["total_words"] = l.total_words;
  j["distinct_maps"] = l.entries.size();
  j["relation_detection"] = l.relation_detection;
  j["relation_count"] = l.relation_count();
  Json entries = Json::array();
  for (const auto& e : l.entries) {
    Json w = Json::array();
    for (const auto& word : e.witnesses) w.push_back(word_json(word));
    entries.push_back({{"map", e.map.to_string()}, {"multiplicity", e.multiplicity}, {"witnesses", w}});
  }
  j["entries"] = entries;
  return j;
}

Json per_word_json(const PerWordSection& s) {
  Json j;
  j["method"] = "per_word";
  j["nu"] = s.nu;
  j["pool_size"] = s.pool_size;
  Json rows = Json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"epsilon", r.epsilon},
                    {"words", r.result.words.size()},
                    {"per_word_sum", r.result.per_word_sum},
                    {"joint", r.result.joint},
                    {"exact", r.result.exact},
                    {"identity_holds", r.result.identity_holds}});
  j["rows"] = rows;
  return j;
}

}  // namespace

Json build_report(const ReportInputs& in) {
  Json r;
  r["config"] = in.config;
  r["exact"] = exact_json(in.exact);

  Json flags = Json::array();
  auto estimate_section = [&](const std::optional<EntropyEstimate>& e, const char* name) {
    if (!e) return absent();
    Json j = estimate_json(*e);
    const double delta = e->value - in.exact.h_top_exact;
    j["delta_vs_exact"] = delta;
    const bool over = delta > e->slope_stderr;
    j["exceeds_upper_bound"] = over;
    if (over) flags.push_back(std::string(name) + "_exceeds_upper_bound");
    return j;
  };
  Json est;
  est["dinh_sibony"] = estimate_section(in.dinh_sibony, "dinh_sibony");
  est["friedland"] = estimate_section(in.friedland, "friedland");
  est["per_word"] = in.per_word ? per_word_json(*in.per_word) : absent();
  if (in.per_word)
    for (const auto& row : in.per_word->rows)
      if (row.result.exact && !row.result.identity_holds) {
        flags.push_back("per_word_sum_up_mismatch");
        break;
      }
  r["estimates"] = est;

  if (in.bounds) {
    Json b = bounds_json(*in.bounds);
    // A truncated exploration can miss cycles, so the lower bound is heuristic.
    b["lower_is_heuristic"] = in.bounds->depth_cap_hit;
    if (in.bounds->depth_cap_hit) flags.push_back("friedland_bounds_depth_cap_hit");
    if (in.friedland) {
      const double v = in.friedland->value;
      const bool outside = v < in.bounds->lower - 0.1 || v > in.bounds->upper + 0.1;
      b["friedland_estimate_within_bounds"] = !outside;
      if (outside) flags.push_back("friedland_estimate_outside_bounds");
    }
    r["friedland_bounds"] = b;
  } else {
    r["friedland_bounds"] = absent();
  }
  if (in.coincidence)
    r["coincidence"] = {{"points", coincidence_json(in.coincidence->first, in.coincidence->second)}};
  else if (in.bounds)
    r["coincidence"] = {{"see", "friedland_bounds"}};
  else
    r["coincidence"] = absent();
  r["relations"] = in.relations ? relations_json(*in.relations) : absent();
  r["flags"] = flags;

  Json prov;
  prov["seed"] = in.provenance.seed;
  prov["version"] = in.provenance.version;
  prov["budgets"] = in.provenance.budgets;
  if (in.provenance.wall_time_seconds) prov["wall_time_seconds"] = *in.provenance.wall_time_seconds;
  r["provenance"] = prov;
  return r;
}

std::vector<std::string> report_flags(const Json& report) {
  std::vector<std::string> out;
  if (report.contains("flags"))
    for (const auto& f : report["flags"]) out.push_back(f.get<std::string>());
  return out;
}

}  // namespace semient
