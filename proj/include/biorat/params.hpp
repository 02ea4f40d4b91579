#pragma once

#include <cstdint>
#include <string>

#include "biorat/rational.hpp"

namespace biorat {

/// Parameter triple (alpha, beta, N). Generic parameters keep every
/// denominator of the theory away from zero on the grid x = 0..N:
///   - alpha not an integer,
///   - beta not an integer,
///   - beta - alpha not an integer.
/// Construction with force = true skips the checks; downstream operations
/// then surface division-by-zero conditions as typed errors.
struct Params {
  Rational alpha;
  Rational beta;
  int N = 1;
  bool forced = false;

  Params(Rational a, Rational b, int n, bool force = false)
      : alpha(std::move(a)), beta(std::move(b)), N(n), forced(force) {
    if (N < 1) throw invalid_params("Params: N must be a positive integer");
    if (forced) return;
    if (is_integer(alpha)) throw invalid_params("Params: alpha = " + to_string(alpha) + " is an integer");
    if (is_integer(beta)) throw invalid_params("Params: beta = " + to_string(beta) + " is an integer");
    if (is_integer(beta - alpha))
      throw invalid_params("Params: beta - alpha = " + to_string(beta - alpha) + " is an integer");
  }

  Params with_alpha(const Rational& a) const { return Params(a, beta, N, forced); }
  Params alpha_shifted(int delta) const { return with_alpha(alpha + delta); }

  /// Parameter half of the reflection symmetry: alpha -> beta + 2 - alpha.
  Params s_transformed() const { return with_alpha(beta + 2 - alpha); }

  bool operator==(const Params& other) const {
    return alpha == other.alpha && beta == other.beta && N == other.N;
  }

  std::string describe() const {
    return "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " N=" + std::to_string(N);
  }
};

/// Seeded rejection sampler for generic parameters: small random numerators
/// over small denominators, resampled until all three genericity conditions
/// hold. Raw generator output is mapped by modulus so the sequence depends
/// only on the engine, not on a distribution implementation.
template <class Rng>
Params sample_generic_params(Rng& rng, int N) {
  const auto small_rational = [&rng]() {
    const long den = 2 + static_cast<long>(rng() % 8);   // 2..9
    const long num = static_cast<long>(rng() % 41) - 20; // -20..20
    return rat(num, den);
  };
  for (;;) {
    const Rational a = small_rational();
    const Rational b = small_rational();
    if (is_integer(a) || is_integer(b) || is_integer(b - a)) continue;
    return Params(a, b, N);
  }
}

}  // namespace biorat
