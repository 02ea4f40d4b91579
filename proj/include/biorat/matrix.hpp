#pragma once

#include <span>
#include <utility>
#include <vector>

#include "biorat/grid.hpp"
#include "biorat/rational.hpp"

namespace biorat {

enum class BasisKind { delta, phi, u, v };

inline const char* basis_name(BasisKind b) {
  switch (b) {
    case BasisKind::delta: return "delta";
    case BasisKind::phi: return "phi";
    case BasisKind::u: return "U";
    case BasisKind::v: return "V";
  }
  return "?";
}

/// Dense square matrix over exact rationals; realization of an operator in a
/// chosen basis. The basis tag is bookkeeping only and does not take part in
/// arithmetic or comparison.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int dim, BasisKind basis = BasisKind::delta)
      : dim_(dim), basis_(basis), entries_(static_cast<std::size_t>(dim) * dim, Rational(0)) {}

  static ExactMatrix identity(int dim, BasisKind basis = BasisKind::delta) {
    ExactMatrix m(dim, basis);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  static ExactMatrix diagonal(std::span<const Rational> d, BasisKind basis = BasisKind::delta) {
    ExactMatrix m(static_cast<int>(d.size()), basis);
    for (int i = 0; i < m.dim_; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int dim() const { return dim_; }
  BasisKind basis() const { return basis_; }
  void set_basis(BasisKind b) { basis_ = b; }

  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
  Rational& at(int i, int j) { return entries_[index(i, j)]; }

  bool is_zero() const {
    for (const Rational& e : entries_)
      if (e != 0) return false;
    return true;
  }

  bool operator==(const ExactMatrix& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    check_dims(a, b);
    ExactMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    check_dims(a, b);
    ExactMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
    return c;
  }

  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& m) {
    ExactMatrix c = m;
    for (Rational& e : c.entries_) e *= s;
    return c;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    check_dims(a, b);
    ExactMatrix c(a.dim_, a.basis_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.dim_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  GridFun apply(const GridFun& f) const {
    if (f.grid_size() + 1 != dim_) throw dimension_mismatch("ExactMatrix::apply: size mismatch");
    GridFun out = constant_grid(dim_ - 1, Rational(0));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out.at(i) += at(i, j) * f.at(j);
    return out;
  }

 private:
  static void check_dims(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw dimension_mismatch("ExactMatrix: dimension mismatch");
  }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }

  int dim_ = 0;
  BasisKind basis_ = BasisKind::delta;
  std::vector<Rational> entries_;  // row-major
};

inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }
inline ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

}  // namespace biorat
