#pragma once

#include <array>
#include <string>
#include <vector>

#include "biorat/coeffs.hpp"
#include "biorat/diffop.hpp"
#include "biorat/ncpoly.hpp"
#include "biorat/report.hpp"

namespace biorat {

/// Defining relations of the quadratic algebra, as elements of the free
/// algebra that must vanish in any realization:
///   [Z,X] - Z^2 - Z
///   [X,Y] - xi1 (X^2 + Z^2) - {X,Z} - {Y,Z} - xi2 X - xi3 Z - Y - xi0
///   [Y,Z] - 3X^2 - Z^2 - xi1 {X,Z} - xi4 X - xi2 Z - xi0
inline NCPoly relation_ZX() {
  const NCPoly x = NCPoly::from_word("X"), z = NCPoly::from_word("Z");
  return nc_commutator(z, x) - z * z - z;
}

inline NCPoly relation_XY(const XiParams& xi) {
  const NCPoly x = NCPoly::from_word("X"), y = NCPoly::from_word("Y"), z = NCPoly::from_word("Z");
  return nc_commutator(x, y) - xi.xi1 * (x * x + z * z) - nc_anticommutator(x, z) -
         nc_anticommutator(y, z) - xi.xi2 * x - xi.xi3 * z - y - xi.xi0 * NCPoly::one();
}

inline NCPoly relation_YZ(const XiParams& xi) {
  const NCPoly x = NCPoly::from_word("X"), y = NCPoly::from_word("Y"), z = NCPoly::from_word("Z");
  return nc_commutator(y, z) - Rational(3) * (x * x) - z * z -
         xi.xi1 * nc_anticommutator(x, z) - xi.xi4 * x - xi.xi2 * z - xi.xi0 * NCPoly::one();
}

/// Casimir element: a cubic polynomial in the generators commuting with all
/// of them.
inline NCPoly casimir_element(const XiParams& xi) {
  const NCPoly x = NCPoly::from_word("X"), y = NCPoly::from_word("Y"), z = NCPoly::from_word("Z");
  const Rational half(1, 2);
  NCPoly q = x * x * x + xi.xi1 * (z * z * z);
  q = q + (xi.xi1 * half) * nc_anticommutator(x * x, z);
  q = q + Rational(2) * nc_anticommutator(x, z * z);
  q = q + half * nc_anticommutator(y, z * z);
  q = q + (xi.xi4 * half) * (x * x);
  q = q + ((xi.xi1 + xi.xi3 + xi.xi4) * half) * (z * z);
  q = q + ((xi.xi2 + 3) * half) * nc_anticommutator(x, z);
  q = q + half * nc_anticommutator(y, z);
  q = q + (xi.xi0 + half) * x;
  q = q + (xi.xi0 + xi.xi4 * half) * z;
  return q;
}

/// Potential whose cyclic derivatives generate the relations:
///   Phi = [XYZ] - [YXZ] - [X^3] - xi1 [X^2 Z] - [XZ^2] - [YZ^2]
///         - xi1/3 [Z^3] - xi4/2 [X^2] - xi2 [XZ] - [YZ] - xi3/2 [Z^2]
///         - xi0 ([X] + [Z])
inline CyclicPoly potential(const XiParams& xi) {
  CyclicPoly phi;
  phi.add("XYZ", 1);
  phi.add("YXZ", -1);
  phi.add("XXX", -1);
  phi.add("XXZ", -xi.xi1);
  phi.add("XZZ", -1);
  phi.add("YZZ", -1);
  phi.add("ZZZ", -xi.xi1 / 3);
  phi.add("XX", -xi.xi4 / 2);
  phi.add("XZ", -xi.xi2);
  phi.add("YZ", -1);
  phi.add("ZZ", -xi.xi3 / 2);
  phi.add("X", -xi.xi0);
  phi.add("Z", -xi.xi0);
  return phi;
}

struct Realization {
  ExactMatrix x, y, z;
};

inline Realization delta_realization(const Params& p) {
  return Realization{matrix_in_e_basis(make_X(p), p), matrix_in_e_basis(make_Y(p), p),
                     matrix_in_e_basis(make_Z(p), p)};
}

inline Realization tilde_realization(const Params& p) {
  return Realization{matrix_in_e_basis(make_tilde(OpKind::X, p), p),
                     matrix_in_e_basis(make_tilde(OpKind::Y, p), p),
                     matrix_in_e_basis(make_tilde(OpKind::Z, p), p)};
}

namespace detail {
inline json residual_payload(const std::string& relation, const ExactMatrix& residual) {
  json rows = json::array();
  for (int i = 0; i < residual.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < residual.dim(); ++j) row.push_back(to_string(residual.at(i, j)));
    rows.push_back(row);
  }
  return json{{"relation", relation}, {"residual", rows}};
}
}  // namespace detail

/// All three defining relations on a matrix realization, exactly.
inline CheckResult verify_RH_relations_on(const Realization& r, const XiParams& xi,
                                          const Params& p, const std::string& check_id) {
  Stopwatch watch;
  const std::array<std::pair<const char*, NCPoly>, 3> relations{
      std::pair<const char*, NCPoly>{"[Z,X]", relation_ZX()},
      std::pair<const char*, NCPoly>{"[X,Y]", relation_XY(xi)},
      std::pair<const char*, NCPoly>{"[Y,Z]", relation_YZ(xi)}};
  for (const auto& [name, rel] : relations) {
    const ExactMatrix residual = rel.evaluate(r.x, r.y, r.z);
    if (!residual.is_zero()) {
      CheckResult res = CheckResult::fail(check_id, p, detail::residual_payload(name, residual));
      res.elapsed_ms = watch.elapsed_ms();
      return res;
    }
  }
  CheckResult res = CheckResult::ok(check_id, p);
  res.elapsed_ms = watch.elapsed_ms();
  return res;
}

inline CheckResult verify_RH_relations(const Params& p) {
  return verify_RH_relations_on(delta_realization(p), xi_params(p), p, "rh-relations");
}

inline ExactMatrix casimir_matrix(const Params& p) {
  const Realization r = delta_realization(p);
  return casimir_element(xi_params(p)).evaluate(r.x, r.y, r.z);
}

/// Casimir evaluates to exactly alpha(beta - alpha)/2 times the identity.
inline CheckResult verify_casimir(const Params& p) {
  Stopwatch watch;
  const ExactMatrix q = casimir_matrix(p);
  const Rational scalar = p.alpha * (p.beta - p.alpha) / 2;
  const ExactMatrix expected = scalar * ExactMatrix::identity(p.N + 1);
  CheckResult res =
      q == expected
          ? CheckResult::ok("casimir", p, json{{"scalar", to_string(scalar)}})
          : CheckResult::fail("casimir", p, detail::residual_payload("Q", q - expected));
  res.elapsed_ms = watch.elapsed_ms();
  return res;
}

/// The cyclic derivatives of the potential reproduce the three relations as
/// free-algebra identities, each up to one overall scalar (recorded).
inline CheckResult verify_potential(const Params& p) {
  Stopwatch watch;
  const XiParams xi = xi_params(p);
  const CyclicPoly phi = potential(xi);
  const std::array<std::tuple<char, const char*, NCPoly>, 3> pairs{
      std::tuple<char, const char*, NCPoly>{'Y', "[Z,X]", relation_ZX()},
      std::tuple<char, const char*, NCPoly>{'Z', "[X,Y]", relation_XY(xi)},
      std::tuple<char, const char*, NCPoly>{'X', "[Y,Z]", relation_YZ(xi)}};
  json scalars = json::object();
  for (const auto& [gen, name, rel] : pairs) {
    const NCPoly derivative = cyclic_derivative(phi, gen);
    const auto scalar = proportionality_scalar(derivative, rel);
    if (!scalar) {
      json mismatch = json::object();
      for (const auto& [w, c] : (derivative - rel).terms())
        mismatch[w.empty() ? "I" : w] = to_string(c);
      CheckResult res = CheckResult::fail(
          "potential", p,
          json{{"generator", std::string(1, gen)}, {"relation", name}, {"mismatch", mismatch}});
      res.elapsed_ms = watch.elapsed_ms();
      return res;
    }
    scalars[std::string("d/d") + gen] = to_string(*scalar);
  }
  CheckResult res = CheckResult::ok("potential", p, json{{"scalars", scalars}});
  res.elapsed_ms = watch.elapsed_ms();
  return res;
}

/// Candidate parameter substitutions for the algebra satisfied by the tilde
/// operators. Both are tested against the tilde realization; the report says
/// which ones pass all three relations and records the Casimir outcome.
inline CheckResult verify_tilde_algebra(const Params& p) {
  Stopwatch watch;
  const Realization tilde = tilde_realization(p);
  const std::array<std::pair<const char*, Rational>, 2> candidates{
      std::pair<const char*, Rational>{"alpha-beta-2", p.alpha - p.beta - 2},
      std::pair<const char*, Rational>{"beta+2-alpha", p.beta + 2 - p.alpha}};

  // The xi-free relation must hold regardless of the substitution.
  if (!relation_ZX().evaluate(tilde.x, tilde.y, tilde.z).is_zero()) {
    CheckResult res = CheckResult::fail("tilde-substitution", p,
                                        json{{"reason", "[Z,X] = Z^2 + Z fails for tilde operators"}});
    res.elapsed_ms = watch.elapsed_ms();
    return res;
  }

  json outcomes = json::array();
  std::vector<std::string> passing;
  for (const auto& [label, alpha_sub] : candidates) {
    const XiParams xi = xi_for_alpha(alpha_sub, p.beta, p.N);
    const bool xy_ok = relation_XY(xi).evaluate(tilde.x, tilde.y, tilde.z).is_zero();
    const bool yz_ok = relation_YZ(xi).evaluate(tilde.x, tilde.y, tilde.z).is_zero();
    const ExactMatrix q = casimir_element(xi).evaluate(tilde.x, tilde.y, tilde.z);
    const Rational expected_scalar = alpha_sub * (p.beta - alpha_sub) / 2;
    const bool q_scalar = q == q.at(0, 0) * ExactMatrix::identity(p.N + 1);
    json entry{{"substitution", label},
               {"alpha_value", to_string(alpha_sub)},
               {"relation_XY", xy_ok},
               {"relation_YZ", yz_ok},
               {"casimir_is_scalar", q_scalar},
               {"casimir_expected", to_string(expected_scalar)}};
    if (q_scalar) entry["casimir_scalar"] = to_string(q.at(0, 0));
    outcomes.push_back(entry);
    if (xy_ok && yz_ok) passing.push_back(label);
  }

  // A definitive report needs exactly one surviving candidate.
  CheckResult res =
      passing.size() == 1
          ? CheckResult::ok("tilde-substitution", p,
                            json{{"passing", passing}, {"outcomes", outcomes}})
          : CheckResult::fail("tilde-substitution", p,
                              json{{"reason", "no unique passing substitution"},
                                   {"passing", passing}, {"outcomes", outcomes}});
  res.elapsed_ms = watch.elapsed_ms();
  return res;
}

}  // namespace biorat
