#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semient/binary_form.hpp"
#include "semient/proj_point.hpp"
#include "semient/root_finder.hpp"

namespace semient {

// A holomorphic self-map [P : Q] of the sphere given by coprime binary
// forms of equal degree d >= 1 with Gaussian-rational coefficients. The
// pair is scaled so that the first nonzero coefficient of (P, Q) is 1.
//
// Maps built from floating-point input carry the exact binary expansion of
// the doubles but are flagged inexact; equality between inexact maps is
// not trusted for multiplicity bookkeeping.
class RationalMap {
 public:
  // Homogeneous input; coefficient k multiplies z0^(d-k) z1^k.
  static RationalMap make(ExactForm num, ExactForm den);
  // Affine input: num and den are polynomials in z, highest power first.
  static RationalMap from_affine(const std::vector<ExactScalar>& num,
                                 const std::vector<ExactScalar>& den);
  // Floating coefficients, homogeneous layout. The result is inexact.
  static RationalMap make_float(const FloatForm& num, const FloatForm& den);

  int degree() const { return static_cast<int>(num_.size()) - 1; }
  bool exact() const { return exact_; }
  const ExactForm& num() const { return num_; }
  const ExactForm& den() const { return den_; }
  const FloatForm& num_float() const { return num_f_; }
  const FloatForm& den_float() const { return den_f_; }

  // Canonical text form, e.g. "[z0^2 : z1^2]".
  std::string to_string() const;

 private:
  RationalMap(ExactForm num, ExactForm den, bool exact);

  ExactForm num_;
  ExactForm den_;
  bool exact_ = true;
  FloatForm num_f_;
  FloatForm den_f_;
  // Jacobian determinant dP/dz0 dQ/dz1 - dP/dz1 dQ/dz0, degree 2d - 2.
  FloatForm jac_det_f_;

  friend double fs_jacobian(const RationalMap& f, const ProjPoint& p);
};

// f o g.
RationalMap compose(const RationalMap& f, const RationalMap& g);

bool maps_equal(const RationalMap& f, const RationalMap& g);

// Total order by degree, then lexicographically on canonical coefficients
// (P before Q). Returns <0, 0, >0.
int compare_maps(const RationalMap& f, const RationalMap& g);

ProjPoint evaluate(const RationalMap& f, const ProjPoint& p);
ExactPoint evaluate(const RationalMap& f, const ExactPoint& p);

// Roots of q1 P - q0 Q with multiplicities summing to deg f. Every root r
// is checked to satisfy chordal_dist(f(r), q) <= 1e-9.
std::vector<Root> preimages(const RationalMap& f, const ProjPoint& q,
                            const RootFinderOptions& opt = {});

// Fubini-Study area distortion (|D| |z|^2 / (d |F(z)|^2))^2 where D is the
// Jacobian determinant of the homogeneous lift; independent of the chart.
double fs_jacobian(const RationalMap& f, const ProjPoint& p);

}  // namespace semient
