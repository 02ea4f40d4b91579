#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "biorat/errors.hpp"

namespace biorat {

/// Exact rational scalar. GMP keeps the canonical form: gcd(|num|, den) = 1
/// and den > 0 after every arithmetic operation on canonical operands.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw zero_denominator("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Canonical text form: "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q" with optional leading '-'. Strict: no whitespace,
/// no empty parts, denominator nonzero.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&] { throw parse_error("parse_rational: invalid rational '" + text + "'"); };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  const auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid_int(num_part, true) || !valid_int(den_part, false)) bad();
  Integer num(num_part), den(den_part);
  if (den == 0) throw zero_denominator("parse_rational: zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Shifted factorial a(a+1)...(a+n-1); empty product = 1.
inline Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw invalid_index("pochhammer: negative index");
  Rational prod = 1;
  Rational factor = a;
  for (int i = 0; i < n; ++i) {
    prod *= factor;
    factor += 1;
  }
  return prod;
}

inline Rational factorial_rat(int n) { return pochhammer(Rational(1), n); }

/// Truncated hypergeometric-type sum
///   sum_{k=0}^{upper_index} prod_i (top_i)_k / (prod_j (bottom_j)_k * k!).
/// The truncation index is explicit: the caller decides where the series
/// stops, including the case where a top/bottom parameter pair cancels.
/// Throws zero_bottom_pochhammer if any (bottom_j)_k vanishes for
/// k <= upper_index.
inline Rational hyp_sum_terminating(std::span<const Rational> top,
                                    std::span<const Rational> bottom,
                                    int upper_index) {
  if (upper_index < 0) throw invalid_index("hyp_sum_terminating: negative index");
  for (const Rational& b : bottom) {
    // (b)_k = 0 for some k <= upper_index iff b is an integer in [1-upper_index, 0].
    if (is_integer(b) && b <= 0 && b >= Rational(1 - upper_index))
      throw zero_bottom_pochhammer("hyp_sum_terminating: bottom parameter " + to_string(b) +
                                   " has vanishing Pochhammer at k <= " + std::to_string(upper_index));
  }
  Rational sum = 1;
  Rational term = 1;
  for (int k = 1; k <= upper_index; ++k) {
    Rational step = 1;
    for (const Rational& t : top) step *= t + (k - 1);
    for (const Rational& b : bottom) step /= b + (k - 1);
    step /= k;
    term *= step;
    sum += term;
  }
  return sum;
}

}  // namespace biorat
