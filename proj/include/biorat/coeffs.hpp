#pragma once

#include <array>

#include "biorat/params.hpp"

namespace biorat {

/// Generalized eigenvalue lambda_n = n(N - n - beta).
inline Rational lambda(int n, const Params& p) {
  return Rational(n) * (Rational(p.N) - n - p.beta);
}

/// Tridiagonal action coefficients in the Pochhammer-ratio basis:
///   Y phi_n = nu1_n phi_{n+1} + nu2_n phi_n + nu3_n phi_{n-1}.
inline std::array<Rational, 3> nu_coeffs(int n, const Params& p) {
  const Rational nn(n), N(p.N), a = p.alpha, b = p.beta;
  const Rational nu1 = nn * nn * (nn + b - N);
  const Rational nu2 =
      -2 * nn * nn * nn + (2 * (1 + N) + a - b) * nn * nn + (-N - 1 + a * (b - N)) * nn;
  const Rational nu3 = nn * (N - nn + 1) * (a - nn + 1);
  return {nu1, nu2, nu3};
}

namespace detail {
inline Rational checked_nonzero(const Rational& d, const char* who) {
  if (d == 0) throw degenerate_denominator(std::string(who) + ": vanishing denominator");
  return d;
}
}  // namespace detail

/// Tridiagonal action coefficients in the rational-function basis,
/// mu[0..8] = mu^(1)..mu^(9):
///   X U_n = mu1 U_{n+1} + mu2 U_n + mu3 U_{n-1}
///   Y U_n = mu4 U_{n+1} + mu5 U_n + mu6 U_{n-1}
///   Z U_n = mu7 U_{n+1} + mu8 U_n + mu9 U_{n-1}
/// with mu^(3+i)_n = lambda_n mu^(i)_n and the finite-dimensional boundary
/// mu1_N = mu4_N = mu7_N = 0.
inline std::array<Rational, 9> mu_coeffs(int n, const Params& p) {
  const Rational nn(n), N(p.N), a = p.alpha, b = p.beta;
  const Rational d0 = detail::checked_nonzero(N - b - 2 * nn, "mu_coeffs");
  const Rational dp = detail::checked_nonzero(N - b - 2 * nn + 1, "mu_coeffs");
  const Rational dm = detail::checked_nonzero(N - b - 2 * nn - 1, "mu_coeffs");

  Rational mu1 = nn * (b + nn + 1) * (N - b - nn) / (d0 * dm);
  const Rational mu2 = -a - nn + nn * (nn - 1) * (b + nn) / dp - nn * (nn + 1) * (b + nn + 1) / dm;
  const Rational mu3 = nn * (N - b - nn) * (N - nn + 1) / (d0 * dp);
  Rational mu7 = -(b + nn + 1) * (N - b - nn) / (d0 * dm);
  const Rational mu8 = (nn + 1) * (b + nn + 1) / dm - nn * (b + nn) / dp;
  const Rational mu9 = -nn * (N - nn + 1) / (d0 * dp);

  if (n == p.N) {
    mu1 = 0;
    mu7 = 0;
  }
  const Rational lam = lambda(n, p);
  return {mu1, mu2, mu3, lam * mu1, lam * mu2, lam * mu3, mu7, mu8, mu9};
}

/// Structure constants of the quadratic algebra.
struct XiParams {
  Rational xi0, xi1, xi2, xi3, xi4;
};

/// Pure arithmetic in (alpha, beta, N); no genericity needed.
inline XiParams xi_for_alpha(const Rational& alpha, const Rational& beta, int N) {
  XiParams xi;
  const Rational nb = Rational(N) - beta;
  xi.xi1 = nb;
  xi.xi0 = alpha * (alpha - beta);
  xi.xi2 = 1 + alpha * (1 + nb);
  xi.xi3 = alpha + (alpha + 1) * nb;
  xi.xi4 = 4 * alpha - 2 * beta - 1;
  return xi;
}

inline XiParams xi_params(const Params& p) { return xi_for_alpha(p.alpha, p.beta, p.N); }

}  // namespace biorat
