#pragma once

#include <array>
#include <string>
#include <vector>

#include "biorat/diffop.hpp"
#include "biorat/report.hpp"

namespace biorat {

/// Raising property on the linear grid: the image of the pole monomial
/// 1/(x - alpha - n) must lie in span{1, 1/(x-alpha), ..., 1/(x-alpha-n-1)}.
/// Checks every n <= n_max and reports the expansion data (constant term and
/// residues along the ladder).
inline CheckResult verify_heun_raising(const DiffOp& op, const std::string& op_label,
                                       const Params& p, int n_max) {
  Stopwatch watch;
  json expansions = json::array();
  for (int n = 0; n <= n_max; ++n) {
    const RatFun image = apply_ratfun(op, RatFun::simple_pole(p.alpha + n));
    json entry{{"n", n}};
    if (image.num().degree() > image.den().degree()) {
      CheckResult r = CheckResult::fail(
          "heun-raising", p,
          json{{"op", op_label}, {"n", n}, {"reason", "polynomial part of degree > 0"}});
      r.elapsed_ms = watch.elapsed_ms();
      return r;
    }
    std::vector<Rational> ladder;
    for (int k = 0; k <= n + 1; ++k) ladder.push_back(p.alpha + k);
    PartialFractions pf;
    try {
      pf = partial_fractions(image, ladder);
    } catch (const error& e) {
      CheckResult r = CheckResult::fail(
          "heun-raising", p,
          json{{"op", op_label}, {"n", n}, {"reason", "stray pole"}, {"detail", e.what()}});
      r.elapsed_ms = watch.elapsed_ms();
      return r;
    }
    entry["constant"] = to_string(pf.constant);
    json res = json::array();
    for (const auto& [pole, value] : pf.residues)
      res.push_back(json{{"pole", to_string(pole)}, {"residue", to_string(value)}});
    entry["residues"] = res;
    expansions.push_back(entry);
  }
  CheckResult r = CheckResult::ok("heun-raising", p, json{{"op", op_label}, {"expansions", expansions}});
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

/// Raw partial-fraction data of Y applied to 1/(x - alpha - n): the constant
/// term and the residues at alpha+n-1, alpha+n, alpha+n+1. An absent pole
/// reports residue zero (at n = 0 the lowest pole drops out on its own; the
/// three-term shape is not forced there).
struct KappaResidues {
  Rational constant;
  Rational k1, k2, k3;
};

inline KappaResidues kappa_residues(const Params& p, int n) {
  const RatFun image = apply_ratfun(make_Y(p), RatFun::simple_pole(p.alpha + n));
  const std::array<Rational, 3> poles{p.alpha + (n - 1), p.alpha + n, p.alpha + (n + 1)};
  const PartialFractions pf = partial_fractions(image, poles);
  return KappaResidues{pf.constant, pf.residue_at(poles[0]), pf.residue_at(poles[1]),
                       pf.residue_at(poles[2])};
}

/// The kappa residues are cubic polynomials in n. Cubic-ness is exactly the
/// vanishing of the 4th finite difference: values at n = 0..3 fix the cubic
/// and the differences ending at n = 4, 5, 6 must vanish.
inline bool verify_kappa_cubic(const Params& p) {
  std::array<std::vector<Rational>, 3> vals;
  for (int n = 0; n <= 6; ++n) {
    const KappaResidues k = kappa_residues(p, n);
    vals[0].push_back(k.k1);
    vals[1].push_back(k.k2);
    vals[2].push_back(k.k3);
  }
  const auto fourth_difference = [](const std::vector<Rational>& v, int start) {
    // sum_{j=0}^{4} (-1)^j C(4,j) v[start+4-j]
    static const long binom[5] = {1, 4, 6, 4, 1};
    Rational acc = 0;
    for (int j = 0; j <= 4; ++j) {
      const Rational term = binom[j] * v[static_cast<std::size_t>(start + 4 - j)];
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  };
  for (const auto& v : vals)
    for (int start = 0; start <= 2; ++start)
      if (fourth_difference(v, start) != 0) return false;
  return true;
}

inline CheckResult verify_kappa_cubic_check(const Params& p) {
  Stopwatch watch;
  CheckResult r = verify_kappa_cubic(p)
                      ? CheckResult::ok("kappa-cubic", p)
                      : CheckResult::fail("kappa-cubic", p,
                                          json{{"reason", "4th finite difference nonzero"}});
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

}  // namespace biorat
