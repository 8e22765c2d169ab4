#include "semient/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "semient/error.hpp"

namespace semient {

namespace {

struct MapLess {
  bool operator()(const RationalMap& a, const RationalMap& b) const { return compare_maps(a, b) < 0; }
};

}  // namespace

GeneratorSet::GeneratorSet(std::vector<RationalMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  for (std::size_t i = 0; i < maps_.size(); ++i)
    for (std::size_t j = i + 1; j < maps_.size(); ++j)
      if (maps_equal(maps_[i], maps_[j]))
        throw Error(ErrorCode::DuplicateGenerator,
                    "generators " + std::to_string(i) + " and " + std::to_string(j) +
                        " coincide; use a multiplicity instead",
                    "/generators/" + std::to_string(j));
}

bool GeneratorSet::exact() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const RationalMap& f) { return f.exact(); });
}

std::vector<int> GeneratorSet::degrees() const {
  std::vector<int> out;
  for (const auto& f : maps_) out.push_back(f.degree());
  return out;
}

Correspondence::Correspondence(std::vector<Component> components, bool merged)
    : components_(std::move(components)), merged_(merged) {}

std::int64_t Correspondence::total_multiplicity() const {
  std::int64_t m = 0;
  for (const auto& c : components_) m += c.multiplicity;
  return m;
}

std::vector<int> Correspondence::symbol_components() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < components_.size(); ++j)
    for (std::int64_t k = 0; k < components_[j].multiplicity; ++k) out.push_back(static_cast<int>(j));
  return out;
}

Correspondence build_correspondence(const GeneratorSet& gens, const std::vector<std::int64_t>& mults) {
  if (mults.size() != gens.size())
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(gens.size()) + " multiplicities",
                "/multiplicities");
  std::vector<Component> comps;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (mults[j] < 1)
      throw Error(ErrorCode::SchemaViolation, "multiplicities must be positive",
                  "/multiplicities/" + std::to_string(j));
    comps.push_back({gens[j], mults[j]});
  }
  return Correspondence(std::move(comps), gens.exact());
}

Correspondence build_correspondence(const GeneratorSet& gens) {
  return build_correspondence(gens, std::vector<std::int64_t>(gens.size(), 1));
}

Correspondence compose_corr(const Correspondence& a, const Correspondence& b) {
  const bool merge = a.relations_certified() && b.relations_certified();
  std::vector<Component> out;
  std::map<RationalMap, std::size_t, MapLess> index;
  for (const auto& ca : a.components()) {
    for (const auto& cb : b.components()) {
      RationalMap h = compose(cb.map, ca.map);
      const std::int64_t m = ca.multiplicity * cb.multiplicity;
      if (merge) {
        auto [it, inserted] = index.emplace(h, out.size());
        if (!inserted) {
          out[it->second].multiplicity += m;
          continue;
        }
      }
      out.push_back({std::move(h), m});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Component& x, const Component& y) { return compare_maps(x.map, y.map) < 0; });
  return Correspondence(std::move(out), merge);
}

Correspondence power(const Correspondence& c, int k) {
  if (k < 1) throw Error(ErrorCode::SchemaViolation, "power must be at least 1");
  Correspondence out = c;
  for (int i = 1; i < k; ++i) out = compose_corr(out, c);
  return out;
}

std::int64_t d_top(const Correspondence& c) {
  std::int64_t s = 0;
  for (const auto& comp : c.components()) s += comp.multiplicity * comp.map.degree();
  return s;
}

std::int64_t support_degree(const Correspondence& c) {
  std::int64_t s = 0;
  for (const auto& comp : c.components()) s += comp.map.degree();
  return s;
}

RationalMap word_map(const GeneratorSet& gens, const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyPath, "empty word");
  RationalMap h = gens[w[0]];
  for (std::size_t i = 1; i < w.size(); ++i) h = compose(gens[w[i]], h);
  return h;
}

WordLedger enumerate_words(const GeneratorSet& gens, int nu, const WordBudget& budget) {
  if (nu < 1) throw Error(ErrorCode::SchemaViolation, "word length must be at least 1");
  const double n = static_cast<double>(gens.size());
  if (nu * std::log(n) > std::log(budget.max_words) + 1e-9)
    throw Error(ErrorCode::BudgetExceeded, "N^nu exceeds the word budget");
  const auto degs = gens.degrees();
  const int max_deg = *std::max_element(degs.begin(), degs.end());
  if (nu * std::log(static_cast<double>(max_deg)) > std::log(budget.max_degree) + 1e-9)
    throw Error(ErrorCode::BudgetExceeded, "composed degree exceeds the degree budget");

  WordLedger ledger;
  ledger.length = nu;
  ledger.relation_detection = gens.exact();
  std::map<RationalMap, std::size_t, MapLess> index;

  // Depth-first over words with the composed prefix kept on a stack.
  Word word;
  std::vector<RationalMap> stack;
  auto visit = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == nu) {
      ++ledger.total_words;
      const RationalMap& h = stack.back();
      if (ledger.relation_detection) {
        auto [it, inserted] = index.emplace(h, ledger.entries.size());
        if (!inserted) {
          LedgerEntry& e = ledger.entries[it->second];
          ++e.multiplicity;
          if (e.witnesses.size() < WordLedger::kMaxWitnesses) e.witnesses.push_back(word);
          return;
        }
      }
      ledger.entries.push_back({h, 1, {word}});
      return;
    }
    for (int s = 0; s < static_cast<int>(gens.size()); ++s) {
      word.push_back(s);
      stack.push_back(stack.empty() ? gens[s] : compose(gens[s], stack.back()));
      self(self);
      stack.pop_back();
      word.pop_back();
    }
  };
  visit(visit);
  std::stable_sort(ledger.entries.begin(), ledger.entries.end(),
                   [](const LedgerEntry& x, const LedgerEntry& y) { return compare_maps(x.map, y.map) < 0; });
  return ledger;
}

}  // namespace semient
