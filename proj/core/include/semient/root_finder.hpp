#pragma once

#include <vector>

#include "semient/binary_form.hpp"
#include "semient/proj_point.hpp"

namespace semient {

struct Root {
  ProjPoint point;
  int multiplicity;
};

struct ExactRoot {
  ExactPoint point;
  int multiplicity;
};

struct RootFinderOptions {
  double residual_tol = 1e-12;
  int max_sweeps = 200;
  double cluster_tol = 1e-7;
};

// All roots on the sphere of a nonzero binary form, counted with
// multiplicity (the multiplicities sum to the degree). A z1 factor gives a
// root at infinity, a z0 factor a root at 0; both are split off exactly.
// The rest is solved by Aberth-Ehrlich iteration in the chart where the
// polynomial is better scaled, followed by a Newton polish. Roots closer
// than cluster_tol (chordal) are merged. Throws RootFindingFailure if the
// iteration does not reach the residual tolerance.
std::vector<Root> solve_form(const FloatForm& f, const RootFinderOptions& opt = {});

struct ExactRootSplit {
  std::vector<ExactRoot> exact;
  // Roots of the cofactor left after removing the exact ones.
  std::vector<Root> numeric;
};

// Splits off every Gaussian-rational root (with denominators found by
// rationalizing numeric roots) and certifies each by exact evaluation and
// deflation.
ExactRootSplit solve_form_exact(const ExactForm& f, const RootFinderOptions& opt = {});

}  // namespace semient
