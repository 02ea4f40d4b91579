#pragma once

#include <span>
#include <utility>
#include <vector>

#include "biorat/poly.hpp"

namespace biorat {

/// Reduced rational function num/den with monic denominator and
/// gcd(num, den) = 1, maintained by construction. Canonical form makes
/// equality a coefficient comparison.
class RatFun {
 public:
  RatFun() : den_(Rational(1)) {}
  explicit RatFun(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Rational(1)) {}

  RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw zero_denominator("RatFun: zero denominator");
    if (num.is_zero()) {
      num_ = Poly();
      den_ = Poly(Rational(1));
      return;
    }
    const Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::divmod(num, g).first;
      den = Poly::divmod(den, g).first;
    }
    const Rational lead = den.leading();
    num_ = num / lead;
    den_ = den / lead;
  }

  static RatFun variable() { return RatFun(Poly::variable()); }

  /// 1/(x - pole)
  static RatFun simple_pole(const Rational& pole) {
    return RatFun(Poly(Rational(1)), Poly({-pole, Rational(1)}));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  bool operator==(const RatFun& other) const = default;

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator*(const Rational& s, const RatFun& f) {
    return RatFun(s * f.num_, f.den_);
  }
  friend RatFun operator*(const RatFun& f, const Rational& s) { return s * f; }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw zero_denominator("RatFun: division by zero function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }

  bool has_pole_at(const Rational& x) const { return den_.eval(x) == 0; }

  Rational eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d == 0) throw eval_at_pole("RatFun::eval: pole at x = " + to_string(x));
    return num_.eval(x) / d;
  }

  /// f(a*x + b). Requires a != 0 so reduction stays trivial.
  RatFun compose_linear(const Rational& a, const Rational& b) const {
    if (a == 0) throw invalid_index("RatFun::compose_linear: degenerate substitution");
    Poly n = num_.compose_linear(a, b);
    Poly d = den_.compose_linear(a, b);
    const Rational lead = d.leading();
    return unreduced(n / lead, d / lead);
  }

  /// f(x + delta)
  RatFun shifted(int delta) const { return compose_linear(Rational(1), Rational(delta)); }

  /// f(N - x)
  RatFun reflected(int grid_size) const {
    return compose_linear(Rational(-1), Rational(grid_size));
  }

 private:
  // Invertible substitutions preserve coprimality; skip the gcd.
  static RatFun unreduced(Poly num, Poly den) {
    RatFun f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
  }

  Poly num_;
  Poly den_;
};

/// f = constant + sum residue/(x - pole), all poles simple and distinct.
struct PartialFractions {
  Rational constant;
  std::vector<std::pair<Rational, Rational>> residues;  // (pole, residue)

  RatFun reconstruct() const {
    RatFun acc{constant};
    for (const auto& [pole, res] : residues) acc = acc + res * RatFun::simple_pole(pole);
    return acc;
  }

  /// Residue at a given pole; zero when the pole is absent.
  Rational residue_at(const Rational& pole) const {
    for (const auto& [p, r] : residues)
      if (p == pole) return r;
    return Rational(0);
  }
};

/// Partial-fraction decomposition against a caller-supplied candidate pole
/// ladder. Requires deg(num) <= deg(den). The denominator must split into
/// distinct linear factors x - a with a among the candidates; residues are
/// num(a)/den'(a).
inline PartialFractions partial_fractions(const RatFun& f, std::span<const Rational> candidates) {
  if (f.num().degree() > f.den().degree())
    throw improper_fraction("partial_fractions: numerator degree exceeds denominator degree");
  PartialFractions pf;
  pf.constant = f.num().degree() == f.den().degree() ? f.num().leading() : Rational(0);

  Poly work = f.den();
  std::vector<Rational> seen;
  for (const Rational& a : candidates) {
    bool duplicate = false;
    for (const Rational& s : seen) duplicate = duplicate || s == a;
    if (duplicate) continue;
    seen.push_back(a);
    if (work.eval(a) != 0) continue;
    work = Poly::divmod(work, Poly({-a, Rational(1)})).first;
    if (work.eval(a) == 0)
      throw repeated_pole("partial_fractions: repeated pole at x = " + to_string(a));
    pf.residues.emplace_back(a, f.num().eval(a) / f.den().derivative().eval(a));
  }
  if (work.degree() > 0)
    throw irrational_pole("partial_fractions: denominator factor of degree " +
                          std::to_string(work.degree()) + " not split by candidate poles");
  return pf;
}

}  // namespace biorat
