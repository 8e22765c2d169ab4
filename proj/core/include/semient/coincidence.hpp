#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "semient/semigroup.hpp"

namespace semient {

struct CoincidencePoint {
  ProjPoint point;
  std::optional<ExactPoint> exact_point;
  // Unordered generator pairs (i < j) with f_i(point) = f_j(point).
  std::set<std::pair<int, int>> witnesses;
  bool exact() const { return exact_point.has_value(); }
};

// Roots of P_i Q_j - P_j Q_i over all pairs i < j, merged across pairs.
// Gaussian-rational roots are certified exactly; the rest are numeric.
std::vector<CoincidencePoint> coincidence_set(const GeneratorSet& gens);

struct RecurrenceOptions {
  double tol = 1e-9;
  std::size_t max_frontier = 200000;
  // Exact search switches to floating point once a coordinate needs more
  // bits than this.
  std::size_t max_exact_bits = 1 << 15;
};

struct RecurrenceCertificate {
  ProjPoint point = ProjPoint::infinity();
  std::vector<int> return_depths;
  int searched_depth = 0;
  bool recurrent = false;
  bool exact = false;
};

// Breadth-first search of F^nu(x), nu = 1..depth, recording the depths at
// which x reappears. Exact when every map and the point are Gaussian
// rational. Throws BudgetExceeded when a frontier outgrows max_frontier.
RecurrenceCertificate is_recurrent(const Correspondence& c, const ProjPoint& x, int depth,
                                   const RecurrenceOptions& opt = {});
RecurrenceCertificate is_recurrent(const Correspondence& c, const ExactPoint& x, int depth,
                                   const RecurrenceOptions& opt = {});

// An eventually periodic itinerary: preperiod points followed by a cycle
// that repeats forever (the last cycle point maps back to the first).
struct Itinerary {
  std::vector<ProjPoint> preperiod;
  std::vector<ProjPoint> cycle;
};

struct ExactItinerary {
  std::vector<ExactPoint> preperiod;
  std::vector<ExactPoint> cycle;
};

struct FiberEntropyValue {
  // m_k = #{j : f_j(x_k) = x_{k+1}} along the preperiod, then the cycle.
  std::vector<int> preperiod_multiplicities;
  std::vector<int> cycle_multiplicities;
  double value = 0.0;
  // Some cycle step admits two or more generators, so the fiber is infinite.
  bool infinite_fiber = false;
};

// Cycle average of log m_k. Throws InconsistentItinerary if some step is
// realized by no generator (within tol, or exactly for the exact overload).
FiberEntropyValue fiber_entropy(const GeneratorSet& gens, const Itinerary& it, double tol = 1e-9);
FiberEntropyValue fiber_entropy(const GeneratorSet& gens, const ExactItinerary& it);

struct TransitionEdge {
  int from;
  int to;
  int multiplicity;
};

struct FriedlandBounds {
  double lower = 0.0;
  double upper = 0.0;
  double s_hat = 0.0;
  std::vector<CoincidencePoint> coincidence;
  std::vector<RecurrenceCertificate> recurrence;  // one per coincidence point
  std::vector<ProjPoint> nodes;                   // visited points
  std::vector<TransitionEdge> edges;
  bool depth_cap_hit = false;
  bool exact = false;
};

struct FriedlandOptions {
  RecurrenceOptions recurrence;
  std::size_t max_nodes = 20000;
};

// upper = log sum deg f_j. s_hat is the maximum mean cycle weight (edge
// weight log m) over the strongly connected parts of the transition graph
// explored from recurrent coincidence points up to `depth` steps;
// lower = max(0, upper - s_hat).
FriedlandBounds friedland_bounds(const GeneratorSet& gens, int depth, const FriedlandOptions& opt = {});

}  // namespace semient
