#pragma once

#include <string>
#include <vector>

#include "biorat/bases.hpp"
#include "biorat/coeffs.hpp"
#include "biorat/diffop.hpp"

namespace biorat {

/// Operator matrix over the phi basis, built by applying the operator on the
/// grid and expanding each image exactly.
inline ExactMatrix matrix_in_phi_basis(OpKind kind, const Params& p) {
  const DiffOp op = make_op(kind, p);
  ExactMatrix m(p.N + 1, BasisKind::phi);
  for (int k = 0; k <= p.N; ++k) {
    const GridFun image = apply_grid(op, grid_values(phi(k, p).fun, p.N), p);
    const std::vector<Rational> c = expand_in_basis(image, BasisKind::phi, p);
    for (int i = 0; i <= p.N; ++i) m.at(i, k) = c[static_cast<std::size_t>(i)];
  }
  return m;
}

/// Same over the rational-function basis U_0..U_N.
inline ExactMatrix matrix_in_U_basis(OpKind kind, const Params& p) {
  const DiffOp op = make_op(kind, p);
  ExactMatrix m(p.N + 1, BasisKind::u);
  for (int k = 0; k <= p.N; ++k) {
    const GridFun image = apply_grid(op, grid_values(build_U_series(k, p).fun, p.N), p);
    const std::vector<Rational> c = expand_in_basis(image, BasisKind::u, p);
    for (int i = 0; i <= p.N; ++i) m.at(i, k) = c[static_cast<std::size_t>(i)];
  }
  return m;
}

/// Closed-form phi-basis matrices: X and Z are lower bidiagonal, Y is
/// tridiagonal with the nu coefficients.
inline ExactMatrix phi_matrix_closed(OpKind kind, const Params& p) {
  ExactMatrix m(p.N + 1, BasisKind::phi);
  for (int n = 0; n <= p.N; ++n) {
    switch (kind) {
      case OpKind::X:
        m.at(n, n) = Rational(n) - p.alpha;
        if (n + 1 <= p.N) m.at(n + 1, n) = Rational(-n);
        break;
      case OpKind::Z:
        m.at(n, n) = -1;
        if (n + 1 <= p.N) m.at(n + 1, n) = 1;
        break;
      case OpKind::Y: {
        const auto nu = nu_coeffs(n, p);
        if (n + 1 <= p.N) m.at(n + 1, n) = nu[0];
        m.at(n, n) = nu[1];
        if (n - 1 >= 0) m.at(n - 1, n) = nu[2];
        break;
      }
    }
  }
  return m;
}

/// Closed-form U-basis matrices from the mu families.
inline ExactMatrix u_matrix_closed(OpKind kind, const Params& p) {
  ExactMatrix m(p.N + 1, BasisKind::u);
  const int off = kind == OpKind::X ? 0 : kind == OpKind::Y ? 3 : 6;
  for (int n = 0; n <= p.N; ++n) {
    const auto mu = mu_coeffs(n, p);
    if (n + 1 <= p.N) m.at(n + 1, n) = mu[static_cast<std::size_t>(off)];
    m.at(n, n) = mu[static_cast<std::size_t>(off + 1)];
    if (n - 1 >= 0) m.at(n - 1, n) = mu[static_cast<std::size_t>(off + 2)];
  }
  return m;
}

/// Bidiagonal factor of Y = X * calY over the phi basis:
///   calY phi_n = n(N - beta - n) phi_n + n(n - N - 1) phi_{n-1}.
inline ExactMatrix calY_matrix(const Params& p) {
  ExactMatrix m(p.N + 1, BasisKind::phi);
  for (int n = 0; n <= p.N; ++n) {
    m.at(n, n) = lambda(n, p);
    if (n - 1 >= 0) m.at(n - 1, n) = Rational(n) * (Rational(n) - p.N - 1);
  }
  return m;
}

/// Expansion-built matrices against the closed forms, entry by entry, over
/// both the phi and U bases.
inline CheckResult verify_matrix_realizations(const Params& p) {
  Stopwatch watch;
  for (const OpKind kind : {OpKind::X, OpKind::Y, OpKind::Z}) {
    if (matrix_in_phi_basis(kind, p) != phi_matrix_closed(kind, p)) {
      CheckResult r = CheckResult::fail("matrix-realizations", p,
                                        json{{"op", op_name(kind)}, {"basis", "phi"}});
      r.elapsed_ms = watch.elapsed_ms();
      return r;
    }
    if (matrix_in_U_basis(kind, p) != u_matrix_closed(kind, p)) {
      CheckResult r = CheckResult::fail("matrix-realizations", p,
                                        json{{"op", op_name(kind)}, {"basis", "U"}});
      r.elapsed_ms = watch.elapsed_ms();
      return r;
    }
  }
  CheckResult r = CheckResult::ok("matrix-realizations", p);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

/// Y = X * calY over the phi basis, with calY's diagonal equal to lambda.
inline CheckResult verify_factorization(const Params& p) {
  Stopwatch watch;
  const ExactMatrix my = matrix_in_phi_basis(OpKind::Y, p);
  const ExactMatrix mx = matrix_in_phi_basis(OpKind::X, p);
  const ExactMatrix caly = calY_matrix(p);
  json counterexample;
  if (my != mx * caly) {
    counterexample = json{{"reason", "Y != X * calY in phi basis"}};
  } else {
    for (int n = 0; n <= p.N; ++n)
      if (caly.at(n, n) != lambda(n, p)) {
        counterexample = json{{"reason", "calY diagonal differs from lambda"}, {"n", n}};
        break;
      }
  }
  CheckResult r = counterexample.is_null()
                      ? CheckResult::ok("factorization", p)
                      : CheckResult::fail("factorization", p, counterexample);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

/// Dual construction routes agree exactly for every n.
inline CheckResult verify_dual_route_U(const Params& p) {
  Stopwatch watch;
  for (int n = 0; n <= p.N; ++n) {
    const RationalU a = build_U_series(n, p);
    const RationalU b = build_U_recurrence(n, p);
    if (a.fun != b.fun) {
      CheckResult r = CheckResult::fail("dual-route-U", p, json{{"n", n}});
      r.elapsed_ms = watch.elapsed_ms();
      return r;
    }
  }
  CheckResult r = CheckResult::ok("dual-route-U", p);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

/// Exact rational-function identities generating the shift alpha -> alpha+1:
///   X U_n(.; alpha) = -alpha U_n(.; alpha+1)
///   Y U_n(.; alpha) = alpha n(n+beta-N) U_n(.; alpha+1)
///   Z U_n(.; alpha) = alpha/(x-alpha) U_n(.; alpha+1)
inline CheckResult verify_shift_relations(const Params& p) {
  Stopwatch watch;
  const Params p1 = p.alpha_shifted(1);
  const DiffOp x_op = make_X(p), y_op = make_Y(p), z_op = make_Z(p);
  const RatFun z_factor(Poly({p.alpha}), Poly({-p.alpha, Rational(1)}));
  for (int n = 0; n <= p.N; ++n) {
    const RatFun u = build_U_series(n, p).fun;
    const RatFun u1 = build_U_series(n, p1).fun;
    const char* failed = nullptr;
    if (apply_ratfun(x_op, u) != (-p.alpha) * u1) failed = "X";
    else if (apply_ratfun(y_op, u) != (p.alpha * n * (n + p.beta - p.N)) * u1) failed = "Y";
    else if (apply_ratfun(z_op, u) != z_factor * u1) failed = "Z";
    if (failed) {
      CheckResult r =
          CheckResult::fail("shift-relations", p, json{{"relation", failed}, {"n", n}});
      r.elapsed_ms = watch.elapsed_ms();
      return r;
    }
  }
  CheckResult r = CheckResult::ok("shift-relations", p);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

/// Second-order difference equation, checked pointwise on the grid
///   A1(x) U_n(x+1) + A2(x) U_n(x-1) + A0(x) U_n(x)
///     = lambda_n [ (x-alpha) U_n(x) - x U_n(x-1) ]
/// (off-grid neighbours never contribute: A2(0) = 0, A1(N) = 0) and at the
/// matrix level: the expansion-built M_Y over the U basis equals
/// M_X * diag(lambda), column-wise proportionality.
inline CheckResult verify_difference_equation(const Params& p) {
  Stopwatch watch;
  const DiffOp y_op = make_Y(p);
  for (int n = 0; n <= p.N; ++n) {
    const RatFun u = build_U_series(n, p).fun;
    const Rational lam = lambda(n, p);
    for (int x = 0; x <= p.N; ++x) {
      const Rational xx(x);
      const Rational ux = u.eval(xx);
      Rational lhs = y_op.zero.eval(xx) * ux;
      Rational rhs = lam * (xx - p.alpha) * ux;
      if (x > 0) {
        const Rational um = u.eval(xx - 1);
        lhs += y_op.minus.eval(xx) * um;
        rhs -= lam * xx * um;
      }
      // A2(0) = 0 and A1(N) = 0: the off-grid neighbours never contribute.
      const Rational a_plus = y_op.plus.eval(xx);
      if (a_plus != 0) lhs += a_plus * u.eval(xx + 1);
      if (lhs != rhs) {
        CheckResult r = CheckResult::fail(
            "difference-equation", p,
            json{{"n", n}, {"x", x}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
        r.elapsed_ms = watch.elapsed_ms();
        return r;
      }
    }
  }
  const ExactMatrix my = matrix_in_U_basis(OpKind::Y, p);
  const ExactMatrix mx = matrix_in_U_basis(OpKind::X, p);
  std::vector<Rational> lam;
  for (int n = 0; n <= p.N; ++n) lam.push_back(lambda(n, p));
  if (my != mx * ExactMatrix::diagonal(lam, BasisKind::u)) {
    CheckResult r = CheckResult::fail("difference-equation", p,
                                      json{{"reason", "M_Y != M_X diag(lambda) in U basis"}});
    r.elapsed_ms = watch.elapsed_ms();
    return r;
  }
  CheckResult r = CheckResult::ok("difference-equation", p);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

/// Three-term recurrence in the degree, checked pointwise on the grid:
///   mu1_n U_{n+1} + mu2_n U_n + mu3_n U_{n-1}
///     = (alpha - x) [ mu7_n U_{n+1} + mu8_n U_n + mu9_n U_{n-1} ]
/// with U_{-1} = 0 and the n = N boundary via mu1_N = mu7_N = 0.
inline CheckResult verify_recurrence_relation(const Params& p) {
  Stopwatch watch;
  std::vector<GridFun> u;
  for (int n = 0; n <= p.N; ++n) u.push_back(grid_values(build_U_series(n, p).fun, p.N));
  const auto term = [&](const Rational& c, int index, int x) {
    if (c == 0 || index < 0) return Rational(0);
    return c * u[static_cast<std::size_t>(index)].at(x);
  };
  for (int n = 0; n <= p.N; ++n) {
    const auto mu = mu_coeffs(n, p);
    for (int x = 0; x <= p.N; ++x) {
      const Rational lhs = term(mu[0], n + 1, x) + term(mu[1], n, x) + term(mu[2], n - 1, x);
      const Rational rhs =
          (p.alpha - x) * (term(mu[6], n + 1, x) + term(mu[7], n, x) + term(mu[8], n - 1, x));
      if (lhs != rhs) {
        CheckResult r = CheckResult::fail(
            "recurrence-relation", p,
            json{{"n", n}, {"x", x}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
        r.elapsed_ms = watch.elapsed_ms();
        return r;
      }
    }
  }
  CheckResult r = CheckResult::ok("recurrence-relation", p);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

/// Adjoint identity behind biorthogonality. Written with explicit weights it
/// reads, for L in {X, Y, Z} and alpha* = beta + 2 - alpha:
///   (L^(alpha-1) U_n(.; alpha-1), V_m(.; alpha))_(alpha)
///     = (U_m(.; alpha*), Ltilde^(alpha*+1) V_n(.; alpha*+1))_(alpha*).
/// The reflection sends the scalar product at alpha to the one at alpha* and
/// swaps the roles of the two families, which is where the mirrored
/// parameter and the index swap on the right-hand side come from.
inline CheckResult verify_adjoint_identity(const Params& p) {
  Stopwatch watch;
  const Params p_minus = p.alpha_shifted(-1);
  const Params p_star = p.s_transformed();
  const Params p_star_plus = p_star.alpha_shifted(1);
  const Weight w = weight(p);
  const Weight w_star = weight(p_star);

  std::vector<GridFun> u_minus, v_here, u_star, v_star_plus;
  for (int n = 0; n <= p.N; ++n) {
    u_minus.push_back(grid_values(build_U_series(n, p_minus).fun, p.N));
    v_here.push_back(grid_values(build_V(n, p).fun, p.N));
    u_star.push_back(grid_values(build_U_series(n, p_star).fun, p.N));
    v_star_plus.push_back(grid_values(build_V(n, p_star_plus).fun, p.N));
  }

  for (const OpKind kind : {OpKind::X, OpKind::Y, OpKind::Z}) {
    const DiffOp lhs_op = make_op(kind, p_minus);
    const DiffOp rhs_op = make_tilde(kind, p_star_plus);
    for (int n = 0; n <= p.N; ++n) {
      const GridFun lu = apply_grid(lhs_op, u_minus[static_cast<std::size_t>(n)], p);
      const GridFun lv = apply_grid(rhs_op, v_star_plus[static_cast<std::size_t>(n)], p);
      for (int m = 0; m <= p.N; ++m) {
        const Rational lhs = inner_product(lu, v_here[static_cast<std::size_t>(m)], w);
        const Rational rhs = inner_product(u_star[static_cast<std::size_t>(m)], lv, w_star);
        if (lhs != rhs) {
          CheckResult r = CheckResult::fail(
              "adjoint-identity", p,
              json{{"L", op_name(kind)}, {"n", n}, {"m", m},
                   {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
          r.elapsed_ms = watch.elapsed_ms();
          return r;
        }
      }
    }
  }

  // Combined with the shift relation for X this reproduces
  // (lambda_n - lambda_m)(X^(alpha-1) U_n(.; alpha-1), V_m(.; alpha)) = 0.
  const DiffOp x_minus = make_op(OpKind::X, p_minus);
  for (int n = 0; n <= p.N; ++n) {
    const GridFun xu = apply_grid(x_minus, u_minus[static_cast<std::size_t>(n)], p);
    for (int m = 0; m <= p.N; ++m) {
      const Rational pairing = inner_product(xu, v_here[static_cast<std::size_t>(m)], w);
      if ((lambda(n, p) - lambda(m, p)) * pairing != 0) {
        CheckResult r = CheckResult::fail(
            "adjoint-identity", p,
            json{{"reason", "GEVP chain"}, {"n", n}, {"m", m}, {"pairing", to_string(pairing)}});
        r.elapsed_ms = watch.elapsed_ms();
        return r;
      }
    }
  }

  CheckResult r = CheckResult::ok("adjoint-identity", p);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

}  // namespace biorat
