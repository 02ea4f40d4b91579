#pragma once

#include <utility>
#include <vector>

#include "biorat/params.hpp"
#include "biorat/ratfun.hpp"

namespace biorat {

/// Function on the finite grid x = 0..N, stored as its N+1 values.
struct GridFun {
  std::vector<Rational> values;

  GridFun() = default;
  explicit GridFun(std::vector<Rational> v) : values(std::move(v)) {}

  int grid_size() const { return static_cast<int>(values.size()) - 1; }  // = N

  const Rational& at(int x) const { return values[static_cast<std::size_t>(x)]; }
  Rational& at(int x) { return values[static_cast<std::size_t>(x)]; }

  bool operator==(const GridFun& other) const = default;
};

inline GridFun constant_grid(int N, const Rational& c) {
  return GridFun(std::vector<Rational>(static_cast<std::size_t>(N) + 1, c));
}

/// Standard basis vector e_k (delta at k).
inline GridFun delta_grid(int N, int k) {
  if (k < 0 || k > N) throw invalid_index("delta_grid: index out of range");
  GridFun f = constant_grid(N, Rational(0));
  f.at(k) = 1;
  return f;
}

/// Restriction of a rational function to the grid. Throws eval_at_pole if a
/// pole lands on a grid point.
inline GridFun grid_values(const RatFun& f, int N) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(N) + 1);
  for (int x = 0; x <= N; ++x) v.push_back(f.eval(Rational(x)));
  return GridFun(std::move(v));
}

}  // namespace biorat
