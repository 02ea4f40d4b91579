#pragma once

#include <string>
#include <utility>
#include <vector>

#include "biorat/coeffs.hpp"
#include "biorat/grid.hpp"
#include "biorat/matrix.hpp"
#include "biorat/params.hpp"
#include "biorat/ratfun.hpp"
#include "biorat/report.hpp"

namespace biorat {

/// Pochhammer-ratio basis element phi_n(x) = (-x)_n / (alpha - x)_n,
/// i.e. x(x-1)...(x-n+1) / ((x-alpha)...(x-alpha-n+1)).
struct PhiBasisElement {
  int n = 0;
  Rational alpha;
  RatFun fun;
};

inline PhiBasisElement phi(int n, const Params& p) {
  if (n < 0 || n > p.N) throw invalid_index("phi: index out of range 0..N");
  std::vector<Rational> num_roots, den_roots;
  for (int j = 0; j < n; ++j) {
    num_roots.push_back(Rational(j));
    den_roots.push_back(p.alpha + j);
  }
  return PhiBasisElement{n, p.alpha,
                         RatFun(Poly::from_roots(num_roots), Poly::from_roots(den_roots))};
}

/// Prescribed pole ladder of U_n: alpha, alpha+1, ..., alpha+n-1.
inline std::vector<Rational> u_pole_ladder(int n, const Params& p) {
  std::vector<Rational> ladder;
  for (int k = 0; k < n; ++k) ladder.push_back(p.alpha + k);
  return ladder;
}

/// Rational function U_n normalized to 1 at infinity, together with its
/// partial fractions and the expansion coefficients over the phi basis.
struct RationalU {
  int n = 0;
  Params params;
  RatFun fun;
  PartialFractions pfrac;
  std::vector<Rational> coeffs;  // C_{n,k}, k = 0..n
};

namespace detail {

inline RationalU assemble_U(int n, const Params& p, std::vector<Rational> coeffs) {
  RatFun fun;
  for (int k = 0; k <= n; ++k) fun = fun + coeffs[static_cast<std::size_t>(k)] * phi(k, p).fun;
  PartialFractions pf = partial_fractions(fun, u_pole_ladder(n, p));
  if (pf.constant != 1)
    throw error("U_" + std::to_string(n) + ": normalization at infinity is " +
                to_string(pf.constant) + ", expected 1");
  return RationalU{n, p, std::move(fun), std::move(pf), std::move(coeffs)};
}

inline Rational leading_U_coeff(int n, const Params& p) {
  // C_{n,0} = (-1)^n (-N)_n / (beta+1)_n
  const Rational top = pochhammer(Rational(-p.N), n);
  const Rational bottom = detail::checked_nonzero(pochhammer(p.beta + 1, n), "build_U");
  return (n % 2 == 0 ? 1 : -1) * top / bottom;
}

}  // namespace detail

/// Hypergeometric-series route: C_{n,k} = C_{n,0} (-n)_k (beta+n-N)_k / (k! (-N)_k).
/// The sum always runs up to k = n; at n = N the top factor (-n)_k cancels
/// against (-N)_k and the full range is still required.
inline RationalU build_U_series(int n, const Params& p) {
  if (n < 0 || n > p.N) throw invalid_index("build_U_series: index out of range 0..N");
  const Rational c0 = detail::leading_U_coeff(n, p);
  std::vector<Rational> coeffs;
  for (int k = 0; k <= n; ++k) {
    const Rational num = pochhammer(Rational(-n), k) * pochhammer(p.beta + n - p.N, k);
    const Rational den = factorial_rat(k) * pochhammer(Rational(-p.N), k);
    coeffs.push_back(c0 * num / detail::checked_nonzero(den, "build_U_series"));
  }
  return detail::assemble_U(n, p, std::move(coeffs));
}

/// Two-term recurrence route:
///   (k+1)(k-N) C_{n,k+1} = [n(N-beta-n) - k(N-beta-k)] C_{n,k}.
inline RationalU build_U_recurrence(int n, const Params& p) {
  if (n < 0 || n > p.N) throw invalid_index("build_U_recurrence: index out of range 0..N");
  std::vector<Rational> coeffs{detail::leading_U_coeff(n, p)};
  for (int k = 0; k + 1 <= n; ++k) {
    const Rational num = lambda(n, p) - lambda(k, p);
    const Rational den = Rational(k + 1) * (Rational(k) - p.N);
    coeffs.push_back(num / detail::checked_nonzero(den, "build_U_recurrence") * coeffs.back());
  }
  return detail::assemble_U(n, p, std::move(coeffs));
}

/// Biorthogonal partner V_n(x) = U_n(N - x) with alpha -> beta + 2 - alpha;
/// poles at N + alpha - beta - 2 - k, k = 0..n-1.
struct RationalV {
  int n = 0;
  Params params;
  RatFun fun;
};

inline RationalV build_V(int n, const Params& p) {
  const RationalU u = build_U_series(n, p.s_transformed());
  return RationalV{n, p, u.fun.reflected(p.N)};
}

/// Hypergeometric weight
///   w_x = (beta-alpha-N+2)_N / (beta-N+1)_N * (-N)_x (1-alpha)_x / (x! (beta-alpha-N+2)_x),
/// normalized so that sum_x w_x = 1 (it is sign-indefinite in general).
struct Weight {
  GridFun values;
  Params params;
};

inline Weight weight(const Params& p) {
  const Rational base = p.beta - p.alpha - p.N + 2;
  const Rational pref_den = detail::checked_nonzero(pochhammer(p.beta - p.N + 1, p.N), "weight");
  const Rational pref = pochhammer(base, p.N) / pref_den;
  GridFun w = constant_grid(p.N, Rational(0));
  Rational sum = 0;
  for (int x = 0; x <= p.N; ++x) {
    const Rational den =
        detail::checked_nonzero(factorial_rat(x) * pochhammer(base, x), "weight");
    w.at(x) = pref * pochhammer(Rational(-p.N), x) * pochhammer(1 - p.alpha, x) / den;
    sum += w.at(x);
  }
  if (sum != 1) throw error("weight: normalization sum is " + to_string(sum) + ", expected 1");
  return Weight{std::move(w), p};
}

/// (f, g) = sum_x w_x f(x) g(x)
inline Rational inner_product(const GridFun& f, const GridFun& g, const Weight& w) {
  if (f.grid_size() != w.values.grid_size() || g.grid_size() != w.values.grid_size())
    throw dimension_mismatch("inner_product: grid size mismatch");
  Rational acc = 0;
  for (int x = 0; x <= w.values.grid_size(); ++x) acc += w.values.at(x) * f.at(x) * g.at(x);
  return acc;
}

/// Grid samples of the basis functions, as matrix columns.
inline ExactMatrix basis_grid_matrix(BasisKind basis, const Params& p) {
  ExactMatrix b(p.N + 1, basis);
  for (int j = 0; j <= p.N; ++j) {
    GridFun col;
    switch (basis) {
      case BasisKind::delta: col = delta_grid(p.N, j); break;
      case BasisKind::phi: col = grid_values(phi(j, p).fun, p.N); break;
      case BasisKind::u: col = grid_values(build_U_series(j, p).fun, p.N); break;
      case BasisKind::v: col = grid_values(build_V(j, p).fun, p.N); break;
    }
    for (int x = 0; x <= p.N; ++x) b.at(x, j) = col.at(x);
  }
  return b;
}

/// Exact linear solve A c = rhs by Gaussian elimination; pivoting is by
/// nonzero check only, which is all that matters over the rationals.
inline std::vector<Rational> solve_exact(ExactMatrix a, std::vector<Rational> rhs) {
  const int n = a.dim();
  if (static_cast<int>(rhs.size()) != n) throw dimension_mismatch("solve_exact: size mismatch");
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw singular_basis_matrix("solve_exact: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
    }
    const Rational inv = a.at(col, col);
    for (int row = 0; row < n; ++row) {
      if (row == col || a.at(row, col) == 0) continue;
      const Rational f = a.at(row, col) / inv;
      for (int j = col; j < n; ++j) a.at(row, j) -= f * a.at(col, j);
      rhs[static_cast<std::size_t>(row)] -= f * rhs[static_cast<std::size_t>(col)];
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)] / a.at(i, i);
  return out;
}

/// Exact coefficients of f over the chosen basis on the grid.
inline std::vector<Rational> expand_in_basis(const GridFun& f, BasisKind basis, const Params& p) {
  if (f.grid_size() != p.N) throw dimension_mismatch("expand_in_basis: grid size mismatch");
  if (basis == BasisKind::delta) return f.values;
  return solve_exact(basis_grid_matrix(basis, p), f.values);
}

/// Exact biorthogonality: (U_n, V_m) = 0 for all m != n. Diagonal values are
/// reported (no closed form is asserted for them); a vanishing diagonal is
/// flagged in the details.
inline CheckResult verify_biorthogonality(const Params& p) {
  Stopwatch watch;
  const Weight w = weight(p);
  std::vector<GridFun> us, vs;
  for (int n = 0; n <= p.N; ++n) {
    us.push_back(grid_values(build_U_series(n, p).fun, p.N));
    vs.push_back(grid_values(build_V(n, p).fun, p.N));
  }
  json diagonal = json::array();
  for (int n = 0; n <= p.N; ++n)
    for (int m = 0; m <= p.N; ++m) {
      const Rational ip = inner_product(us[static_cast<std::size_t>(n)],
                                        vs[static_cast<std::size_t>(m)], w);
      if (n == m) {
        diagonal.push_back(json{{"n", n}, {"value", to_string(ip)}, {"vanishing", ip == 0}});
      } else if (ip != 0) {
        CheckResult r = CheckResult::fail(
            "biorthogonality", p,
            json{{"n", n}, {"m", m}, {"inner_product", to_string(ip)}});
        r.elapsed_ms = watch.elapsed_ms();
        return r;
      }
    }
  CheckResult r = CheckResult::ok("biorthogonality", p, json{{"diagonal", diagonal}});
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

}  // namespace biorat
