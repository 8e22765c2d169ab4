#pragma once

#include <cstdint>
#include <vector>

#include "semient/rational_map.hpp"

namespace semient {

using Word = std::vector<int>;  // 0-based generator labels, applied left to right

// Pairwise distinct generators f_1..f_N.
class GeneratorSet {
 public:
  // Throws DuplicateGenerator if two maps are equal, EmptyInput if none.
  explicit GeneratorSet(std::vector<RationalMap> maps);

  std::size_t size() const { return maps_.size(); }
  const RationalMap& operator[](std::size_t i) const { return maps_[i]; }
  const std::vector<RationalMap>& maps() const { return maps_; }
  // False if any generator has floating coefficients.
  bool exact() const;
  std::vector<int> degrees() const;

 private:
  std::vector<RationalMap> maps_;
};

struct Component {
  RationalMap map;
  std::int64_t multiplicity;
};

// A multiset of graphs sum m_j graph(f_j).
class Correspondence {
 public:
  Correspondence(std::vector<Component> components, bool merged);

  const std::vector<Component>& components() const { return components_; }
  // Total multiplicity M.
  std::int64_t total_multiplicity() const;
  // One entry per symbol 1..M (0-based here): the component index it uses.
  // Symbols of component j are consecutive.
  std::vector<int> symbol_components() const;
  // False when equal compositions could not be certified and were kept
  // as separate components.
  bool relations_certified() const { return merged_; }

 private:
  std::vector<Component> components_;
  bool merged_;
};

// Keeps the generator order; throws LengthMismatch or SchemaViolation on a
// nonpositive multiplicity.
Correspondence build_correspondence(const GeneratorSet& gens, const std::vector<std::int64_t>& mults);
Correspondence build_correspondence(const GeneratorSet& gens);

// Components g o f for f in a, g in b, multiplicities multiplied and equal
// maps merged. Sorted by (degree, coefficients).
Correspondence compose_corr(const Correspondence& a, const Correspondence& b);
Correspondence power(const Correspondence& c, int k);

std::int64_t d_top(const Correspondence& c);
std::int64_t support_degree(const Correspondence& c);

struct WordBudget {
  double max_words = 1e6;
  double max_degree = 1e4;
};

struct LedgerEntry {
  RationalMap map;
  std::int64_t multiplicity;
  // The first few words composing to this map (at most kMaxWitnesses).
  std::vector<Word> witnesses;
};

struct WordLedger {
  static constexpr std::size_t kMaxWitnesses = 8;
  int length = 0;
  std::int64_t total_words = 0;
  std::vector<LedgerEntry> entries;
  bool relation_detection = true;

  std::int64_t relation_count() const {
    return total_words - static_cast<std::int64_t>(entries.size());
  }
};

// The composed map of a word: f_{w[n-1]} o ... o f_{w[0]}.
RationalMap word_map(const GeneratorSet& gens, const Word& w);

// All N^nu words grouped by exact equality of the composed map. Throws
// BudgetExceeded when N^nu or the composed degree exceeds the budget.
WordLedger enumerate_words(const GeneratorSet& gens, int nu, const WordBudget& budget = {});

}  // namespace semient
