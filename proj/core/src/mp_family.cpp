#include "semient/mp_family.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "semient/error.hpp"
#include "semient/separation.hpp"

namespace semient {

double injectivity_radius(const RationalMap& f, const ProjPoint& x, const MpFamilyOptions& opt) {
  constexpr int kAngles = 12;
  const double fractions[] = {1.0, 0.5, 0.0};
  for (double r = opt.max_radius; r >= opt.min_radius; r *= 0.5) {
    bool injective = true;
    for (double frac : fractions) {
      for (int a = 0; a < (frac == 0.0 ? 1 : kAngles) && injective; ++a) {
        const ProjPoint y = point_at_distance(x, frac * r, 2.0 * std::numbers::pi * a / kAngles);
        std::vector<Root> pre;
        try {
          pre = preimages(f, evaluate(f, y));
        } catch (const Error&) {
          injective = false;
          break;
        }
        for (const Root& p : pre) {
          const bool is_y = chordal_dist(p.point, y) <= 1e-9;
          if ((!is_y || p.multiplicity > 1) && chordal_dist(p.point, x) <= r) {
            injective = false;
            break;
          }
        }
      }
      if (!injective) break;
    }
    if (injective) return r;
  }
  return opt.min_radius;
}

bool verify_word_separated(const OrbitPool& family, double eps) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (std::equal(family.symbols_of(i), family.symbols_of(i) + family.nu(), family.symbols_of(j)) &&
          non_separated(family, i, j, eps, false))
        return false;
  return true;
}

MpFamily mp_family(const GeneratorSet& gens, double beta, int nu, std::uint64_t seed, const MpFamilyOptions& opt) {
  if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorCode::SchemaViolation, "beta must lie in (0, 1)");
  if (nu < 1) throw Error(ErrorCode::SchemaViolation, "nu must be positive");
  double total_deg = 0;
  for (int d : gens.degrees()) total_deg += d;
  if (std::pow(total_deg, nu) > opt.max_orbits)
    throw Error(ErrorCode::BudgetExceeded, "(sum of degrees)^nu exceeds the family budget");

  MpFamily out;
  out.beta = beta;
  const auto samples = sample_points(opt.jacobian_samples, seed ^ 0x6d70666d6c79ull);
  double max_jac = 0.0;
  for (const auto& f : gens.maps())
    for (const auto& x : samples) max_jac = std::max(max_jac, fs_jacobian(f, x));
  out.L = std::max(1.05 * max_jac, 1.05);
  out.delta = std::pow(out.L, -beta / (1.0 - beta));

  // Sampled injectivity scale over the regular sets {Jac f_j >= delta}.
  double eps = opt.max_radius;
  const std::size_t stride = std::max<std::size_t>(1, samples.size() / opt.radius_samples);
  for (const auto& f : gens.maps())
    for (std::size_t i = 0; i < samples.size(); i += stride)
      if (fs_jacobian(f, samples[i]) >= out.delta) eps = std::min(eps, injectivity_radius(f, samples[i], opt));
  out.eps_beta = std::max(eps, opt.min_radius);

  const Correspondence c = build_correspondence(gens);
  const ProjPoint terminal = sample_points(1, seed ^ 0x7465726dull).front();
  PreimageTreeOptions topt;
  topt.jac_floor = out.delta;
  topt.max_orbits = opt.max_orbits;
  OrbitPool family(nu);
  const int n = static_cast<int>(gens.size());
  std::vector<int> word(nu, 0);
  while (true) {
    OrbitPool part = preimage_tree_word(c, terminal, word, topt);
    // Post-hoc check: keep a greedy separated subfamily in tree order.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < part.size(); ++i) {
      bool ok = true;
      for (std::size_t j : keep)
        if (non_separated(part, i, j, out.eps_beta, false)) {
          ok = false;
          break;
        }
      if (ok) keep.push_back(i);
    }
    out.dropped += static_cast<std::int64_t>(part.size() - keep.size());
    family.append(part.select(keep));
    int k = nu - 1;
    while (k >= 0 && ++word[k] == n) word[k--] = 0;
    if (k < 0) break;
  }
  out.count = static_cast<std::int64_t>(family.size());
  out.verified = verify_word_separated(family, out.eps_beta);
  out.orbits = std::move(family);
  return out;
}

}  // namespace semient
