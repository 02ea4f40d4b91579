#pragma once

#include <span>
#include <utility>
#include <vector>

#include "biorat/rational.hpp"

namespace biorat {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first. The zero polynomial is the empty coefficient list; otherwise the
/// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c0) : coeffs_{std::move(c0)} { normalize(); }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly variable() { return Poly({Rational(0), Rational(1)}); }

  /// prod_r (x - r)
  static Poly from_roots(std::span<const Rational> roots) {
    Poly p(Rational(1));
    for (const Rational& r : roots) p = p * Poly({-r, Rational(1)});
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c) x = -x;
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c = p.coeffs_;
    for (Rational& x : c) x *= s;
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

  friend Poly operator/(const Poly& p, const Rational& s) {
    if (s == 0) throw zero_denominator("Poly: division by zero scalar");
    std::vector<Rational> c = p.coeffs_;
    for (Rational& x : c) x /= s;
    return Poly(std::move(c));
  }

  bool operator==(const Poly& other) const = default;

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Poly(std::move(c));
  }

  /// p(a*x + b), by Horner in the polynomial ring.
  Poly compose_linear(const Rational& a, const Rational& b) const {
    const Poly arg({b, a});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * arg + Poly(*it);
    return acc;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw zero_denominator("Poly::divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational lead = b.leading();
    for (int d = a.degree(); d >= b.degree(); --d) {
      Rational f = rem[static_cast<std::size_t>(d)] / lead;
      if (f == 0) continue;
      quot[static_cast<std::size_t>(d - b.degree())] = f;
      for (int i = 0; i <= b.degree(); ++i)
        rem[static_cast<std::size_t>(d - b.degree() + i)] -= f * b.coeffs_[static_cast<std::size_t>(i)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  /// Monic gcd (the zero polynomial when both inputs are zero).
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace biorat
