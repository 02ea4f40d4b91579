#pragma once

#include <string>

#include "biorat/grid.hpp"
#include "biorat/matrix.hpp"
#include "biorat/params.hpp"
#include "biorat/ratfun.hpp"

namespace biorat {

/// Second-order difference operator
///   (W f)(x) = plus(x) f(x+1) + minus(x) f(x-1) + zero(x) f(x)
/// with rational-function coefficients.
struct DiffOp {
  RatFun plus;
  RatFun minus;
  RatFun zero;

  bool operator==(const DiffOp& other) const = default;
};

enum class OpKind { X, Y, Z };

inline const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::X: return "X";
    case OpKind::Y: return "Y";
    case OpKind::Z: return "Z";
  }
  return "?";
}

/// Preservation of the grid space: no dependence on f(-1) or f(N+1), i.e.
/// minus(0) = 0 and plus(N) = 0.
inline bool boundary_preserving(const DiffOp& op, int N) {
  try {
    return op.minus.eval(Rational(0)) == 0 && op.plus.eval(Rational(N)) == 0;
  } catch (const eval_at_pole&) {
    return false;
  }
}

namespace detail {
inline void require_boundary(const DiffOp& op, const Params& p, const char* who) {
  if (!boundary_preserving(op, p.N))
    throw invalid_params(std::string(who) + ": operator does not preserve the grid space for " +
                         p.describe());
}
}  // namespace detail

/// X = (x - alpha) I - x T^-
inline DiffOp make_X(const Params& p) {
  DiffOp op;
  op.plus = RatFun();
  op.minus = RatFun(Poly({Rational(0), Rational(-1)}));
  op.zero = RatFun(Poly({-p.alpha, Rational(1)}));
  detail::require_boundary(op, p, "make_X");
  return op;
}

/// Z = -I + x/(x - alpha) T^-, so that X = (alpha - x) Z.
inline DiffOp make_Z(const Params& p) {
  DiffOp op;
  op.plus = RatFun();
  op.minus = RatFun(Poly({Rational(0), Rational(1)}), Poly({-p.alpha, Rational(1)}));
  op.zero = RatFun(Rational(-1));
  detail::require_boundary(op, p, "make_Z");
  return op;
}

/// Y = A1 T^+ + A2 T^- + A0 I with the cubic coefficients
///   A1 = (x-alpha)(x-N)(x+1-alpha)
///   A2 = x(x-alpha)(x+beta-alpha-N)
///   A0 = (x-alpha)(-2x^2 + (2alpha-1+2N-beta)x - N(alpha-1)).
/// All three carry the global factor (x - alpha).
inline DiffOp make_Y(const Params& p) {
  const Poly x = Poly::variable();
  const Poly x_minus_alpha({-p.alpha, Rational(1)});
  const Rational N(p.N);
  const Poly a1 = x_minus_alpha * Poly({-N, Rational(1)}) * Poly({Rational(1) - p.alpha, Rational(1)});
  const Poly a2 = x * x_minus_alpha * Poly({p.beta - p.alpha - N, Rational(1)});
  const Poly a0 =
      x_minus_alpha * Poly({-N * (p.alpha - 1), 2 * p.alpha - 1 + 2 * N - p.beta, Rational(-2)});
  DiffOp op;
  op.plus = RatFun(a1);
  op.minus = RatFun(a2);
  op.zero = RatFun(a0);
  detail::require_boundary(op, p, "make_Y");
  return op;
}

inline DiffOp make_op(OpKind kind, const Params& p) {
  switch (kind) {
    case OpKind::X: return make_X(p);
    case OpKind::Y: return make_Y(p);
    case OpKind::Z: return make_Z(p);
  }
  throw unknown_selector("make_op: bad kind");
}

/// Conjugation by the grid reflection x -> N - x: substitutes N - x in the
/// coefficients and exchanges T^+ with T^-. Involutive.
inline DiffOp reflect_conjugate(const DiffOp& op, int N) {
  DiffOp out;
  out.plus = op.minus.compose_linear(Rational(-1), Rational(N));
  out.minus = op.plus.compose_linear(Rational(-1), Rational(N));
  out.zero = op.zero.compose_linear(Rational(-1), Rational(N));
  return out;
}

/// Tilde operator: coefficients transformed by x -> N - x together with
/// alpha -> beta + 2 - alpha, and T^+ exchanged with T^-.
inline DiffOp make_tilde(OpKind kind, const Params& p) {
  return reflect_conjugate(make_op(kind, p.s_transformed()), p.N);
}

/// Application on the grid. Boundary preservation guarantees the missing
/// neighbours at x = 0 and x = N never contribute.
inline GridFun apply_grid(const DiffOp& op, const GridFun& f, const Params& p) {
  if (f.grid_size() != p.N) throw dimension_mismatch("apply_grid: grid size mismatch");
  detail::require_boundary(op, p, "apply_grid");
  const auto coeff_at = [](const RatFun& c, int x) {
    try {
      return c.eval(Rational(x));
    } catch (const eval_at_pole&) {
      throw coefficient_pole_on_grid("apply_grid: coefficient pole at grid point x = " +
                                     std::to_string(x));
    }
  };
  GridFun out = constant_grid(p.N, Rational(0));
  for (int x = 0; x <= p.N; ++x) {
    Rational acc = coeff_at(op.zero, x) * f.at(x);
    if (x > 0) acc += coeff_at(op.minus, x) * f.at(x - 1);
    if (x < p.N) acc += coeff_at(op.plus, x) * f.at(x + 1);
    out.at(x) = acc;
  }
  return out;
}

/// Exact symbolic application: plus*f(x+1) + minus*f(x-1) + zero*f(x),
/// with the argument shifts done by polynomial composition.
inline RatFun apply_ratfun(const DiffOp& op, const RatFun& f) {
  return op.plus * f.shifted(1) + op.minus * f.shifted(-1) + op.zero * f;
}

/// Matrix in the delta basis: column k is the operator applied to e_k.
inline ExactMatrix matrix_in_e_basis(const DiffOp& op, const Params& p) {
  ExactMatrix m(p.N + 1, BasisKind::delta);
  for (int k = 0; k <= p.N; ++k) {
    const GridFun col = apply_grid(op, delta_grid(p.N, k), p);
    for (int x = 0; x <= p.N; ++x) m.at(x, k) = col.at(x);
  }
  return m;
}

}  // namespace biorat
