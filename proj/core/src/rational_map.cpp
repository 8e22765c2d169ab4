#include "semient/rational_map.hpp"

#include <cmath>
#include <sstream>

#include "semient/error.hpp"

namespace semient {

namespace {

void canonicalize(ExactForm& num, ExactForm& den) {
  const ExactScalar* first = nullptr;
  for (const auto& c : num)
    if (!c.is_zero()) { first = &c; break; }
  if (!first)
    for (const auto& c : den)
      if (!c.is_zero()) { first = &c; break; }
  const ExactScalar inv = ExactScalar(1) / *first;
  for (auto& c : num) c *= inv;
  for (auto& c : den) c *= inv;
}

void check_forms(const ExactForm& num, const ExactForm& den) {
  if (num.size() != den.size())
    throw Error(ErrorCode::DegreeMismatch, "numerator and denominator forms differ in degree");
  if (num.size() < 2) throw Error(ErrorCode::DegenerateMap, "degree must be at least 1");
  if (is_zero(num) || is_zero(den))
    throw Error(ErrorCode::DegenerateMap, "a homogeneous component vanishes identically");
  if (gcd(num, den).size() > 1)
    throw Error(ErrorCode::CommonFactor, "numerator and denominator share a common factor");
}

std::string form_to_string(const ExactForm& f) {
  const int d = static_cast<int>(f.size()) - 1;
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k <= d; ++k) {
    if (f[k].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    const std::string c = f[k].to_string();
    const bool unit = f[k] == ExactScalar(1);
    if (!unit) os << '(' << c << ')';
    auto mono = [&](const char* var, int e) {
      if (e == 0) return;
      if (!unit) os << '*';
      os << var;
      if (e > 1) os << '^' << e;
    };
    mono("z0", d - k);
    if (d - k > 0 && k > 0) os << '*';
    if (k > 0) {
      if (d - k == 0 && !unit) os << '*';
      os << "z1";
      if (k > 1) os << '^' << k;
    }
  }
  return any ? os.str() : "0";
}

}  // namespace

RationalMap::RationalMap(ExactForm num, ExactForm den, bool exact)
    : num_(std::move(num)), den_(std::move(den)), exact_(exact) {
  num_f_ = to_float(num_);
  den_f_ = to_float(den_);
  const ExactForm jac =
      add(multiply(d_dz0(num_), d_dz1(den_)), scale(multiply(d_dz1(num_), d_dz0(den_)), ExactScalar(-1)));
  jac_det_f_ = to_float(jac);
}

RationalMap RationalMap::make(ExactForm num, ExactForm den) {
  check_forms(num, den);
  canonicalize(num, den);
  return RationalMap(std::move(num), std::move(den), true);
}

RationalMap RationalMap::from_affine(const std::vector<ExactScalar>& num,
                                     const std::vector<ExactScalar>& den) {
  auto trimmed = [](const std::vector<ExactScalar>& p) {
    std::size_t first = 0;
    while (first + 1 < p.size() && p[first].is_zero()) ++first;
    return std::vector<ExactScalar>(p.begin() + static_cast<long>(first), p.end());
  };
  const auto n = trimmed(num);
  const auto m = trimmed(den);
  if (n.empty() || m.empty()) throw Error(ErrorCode::DegenerateMap, "empty polynomial");
  const std::size_t d = std::max(n.size(), m.size()) - 1;
  // Homogenize: pad with leading zeros, i.e. multiply by z1^(d - deg).
  auto homogenize = [d](const std::vector<ExactScalar>& p) {
    ExactForm f(d + 1 - p.size(), ExactScalar(0));
    f.insert(f.end(), p.begin(), p.end());
    return f;
  };
  return make(homogenize(n), homogenize(m));
}

RationalMap RationalMap::make_float(const FloatForm& num, const FloatForm& den) {
  auto convert = [](const FloatForm& f) {
    ExactForm out;
    for (const Complex& c : f) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw Error(ErrorCode::BadScalarLiteral, "non-finite coefficient");
      out.emplace_back(mpq_class(c.real()), mpq_class(c.imag()));
    }
    return out;
  };
  ExactForm n = convert(num);
  ExactForm m = convert(den);
  check_forms(n, m);
  // Near-common roots are as bad as exact ones for a floating map.
  const FloatForm nf = to_float(n);
  const FloatForm mf = to_float(m);
  for (const Root& r : solve_form(nf)) {
    const double scale = term_scale(mf, r.point.h0(), r.point.h1());
    if (std::abs(evaluate(mf, r.point.h0(), r.point.h1())) <= 1e-9 * scale)
      throw Error(ErrorCode::CommonFactor, "numerator and denominator share a root numerically");
  }
  canonicalize(n, m);
  return RationalMap(std::move(n), std::move(m), false);
}

std::string RationalMap::to_string() const {
  return "[" + form_to_string(num_) + " : " + form_to_string(den_) + "]";
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  ExactForm num = substitute(f.num(), g.num(), g.den());
  ExactForm den = substitute(f.den(), g.num(), g.den());
  // Coprime inputs compose to a coprime pair (a common root would be a
  // point where g lands on a common root of f's forms), so only the scale
  // needs fixing.
  if (f.exact() && g.exact()) return RationalMap::make(std::move(num), std::move(den));
  FloatForm nf = to_float(num), df = to_float(den);
  return RationalMap::make_float(nf, df);
}

bool maps_equal(const RationalMap& f, const RationalMap& g) {
  return f.degree() == g.degree() && f.num() == g.num() && f.den() == g.den();
}

int compare_maps(const RationalMap& f, const RationalMap& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree() ? -1 : 1;
  for (std::size_t k = 0; k < f.num().size(); ++k)
    if (int c = compare(f.num()[k], g.num()[k]); c != 0) return c;
  for (std::size_t k = 0; k < f.den().size(); ++k)
    if (int c = compare(f.den()[k], g.den()[k]); c != 0) return c;
  return 0;
}

ProjPoint evaluate(const RationalMap& f, const ProjPoint& p) {
  const Complex h0 = p.h0(), h1 = p.h1();
  Complex a = evaluate(f.num_float(), h0, h1);
  Complex b = evaluate(f.den_float(), h0, h1);
  const double sa = term_scale(f.num_float(), h0, h1);
  const double sb = term_scale(f.den_float(), h0, h1);
  // Refine a component in extended precision when its terms cancel.
  constexpr double kCancel = 1e-6;
  if (std::abs(a) < kCancel * sa) {
    const auto ax = evaluate_extended(f.num_float(), h0, h1);
    a = Complex(static_cast<double>(ax.real()), static_cast<double>(ax.imag()));
  }
  if (std::abs(b) < kCancel * sb) {
    const auto bx = evaluate_extended(f.den_float(), h0, h1);
    b = Complex(static_cast<double>(bx.real()), static_cast<double>(bx.imag()));
  }
  return ProjPoint::normalize(a, b);
}

ExactPoint evaluate(const RationalMap& f, const ExactPoint& p) {
  return ExactPoint::normalize(evaluate(f.num(), p.h0(), p.h1()), evaluate(f.den(), p.h0(), p.h1()));
}

std::vector<Root> preimages(const RationalMap& f, const ProjPoint& q, const RootFinderOptions& opt) {
  FloatForm form(f.num_float().size());
  for (std::size_t k = 0; k < form.size(); ++k)
    form[k] = q.h1() * f.num_float()[k] - q.h0() * f.den_float()[k];
  // Exact zeros (for instance q = 0 against a monomial numerator) keep
  // their structural meaning for the root finder.
  for (std::size_t k = 0; k < form.size(); ++k) {
    const double scale = std::abs(q.h1() * f.num_float()[k]) + std::abs(q.h0() * f.den_float()[k]);
    if (std::abs(form[k]) <= 1e-15 * scale) form[k] = 0.0;
  }
  std::vector<Root> roots = solve_form(form, opt);
  for (const Root& r : roots) {
    if (chordal_dist(evaluate(f, r.point), q) > 1e-9)
      throw Error(ErrorCode::RootFindingFailure, "preimage failed validation for " + f.to_string());
  }
  return roots;
}

double fs_jacobian(const RationalMap& f, const ProjPoint& p) {
  const Complex h0 = p.h0(), h1 = p.h1();
  const double z2 = std::norm(h0) + std::norm(h1);
  const double det = std::abs(evaluate(f.jac_det_f_, h0, h1));
  const double fz2 = std::norm(evaluate(f.num_float(), h0, h1)) + std::norm(evaluate(f.den_float(), h0, h1));
  const double r = det * z2 / (f.degree() * fz2);
  return r * r;
}

}  // namespace semient
