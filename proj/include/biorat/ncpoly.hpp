#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "biorat/matrix.hpp"
#include "biorat/rational.hpp"

namespace biorat {

/// Polynomial in the free algebra on the generators X, Y, Z. Terms map words
/// (strings over "XYZ", the empty word being the identity) to coefficients;
/// zero coefficients are never stored.
class NCPoly {
 public:
  NCPoly() = default;

  static NCPoly one() { return from_word("", 1); }

  static NCPoly from_word(const std::string& word, Rational coeff = Rational(1)) {
    NCPoly p;
    p.add(word, coeff);
    return p;
  }

  const std::map<std::string, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::string& word, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(word, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly c = a;
    for (const auto& [w, q] : b.terms_) c.add(w, q);
    return c;
  }

  friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly c = a;
    for (const auto& [w, q] : b.terms_) c.add(w, -q);
    return c;
  }

  friend NCPoly operator*(const Rational& s, const NCPoly& p) {
    NCPoly c;
    for (const auto& [w, q] : p.terms_) c.add(w, s * q);
    return c;
  }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly c;
    for (const auto& [wa, qa] : a.terms_)
      for (const auto& [wb, qb] : b.terms_) c.add(wa + wb, qa * qb);
    return c;
  }

  bool operator==(const NCPoly& other) const = default;

  /// Substitute matrices for the generators; the empty word becomes the
  /// identity matrix.
  ExactMatrix evaluate(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z) const {
    const int dim = x.dim();
    ExactMatrix acc(dim, x.basis());
    for (const auto& [word, coeff] : terms_) {
      ExactMatrix prod = ExactMatrix::identity(dim, x.basis());
      for (const char g : word) {
        switch (g) {
          case 'X': prod = prod * x; break;
          case 'Y': prod = prod * y; break;
          case 'Z': prod = prod * z; break;
          default: throw unknown_selector("NCPoly::evaluate: unknown generator");
        }
      }
      acc = acc + coeff * prod;
    }
    return acc;
  }

 private:
  std::map<std::string, Rational> terms_;
};

inline NCPoly nc_commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }
inline NCPoly nc_anticommutator(const NCPoly& a, const NCPoly& b) { return a * b + b * a; }

/// If a = c * b for a single scalar c (same support, consistent ratios),
/// returns c. Zero polynomials are proportional with scalar 0 only when a
/// itself is zero.
inline std::optional<Rational> proportionality_scalar(const NCPoly& a, const NCPoly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  std::optional<Rational> scalar;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  for (; itb != b.terms().end(); ++ita, ++itb) {
    if (ita->first != itb->first) return std::nullopt;
    const Rational ratio = ita->second / itb->second;
    if (!scalar) scalar = ratio;
    else if (*scalar != ratio) return std::nullopt;
  }
  return scalar;
}

/// Combination of cyclic words: the key is the lexicographically minimal
/// rotation of the word.
class CyclicPoly {
 public:
  CyclicPoly() = default;

  static std::string canonical_rotation(const std::string& word) {
    if (word.size() < 2) return word;
    std::string best = word;
    for (std::size_t s = 1; s < word.size(); ++s) {
      std::string rot = word.substr(s) + word.substr(0, s);
      if (rot < best) best = std::move(rot);
    }
    return best;
  }

  void add(const std::string& word, const Rational& coeff) {
    if (coeff == 0) return;
    const std::string key = canonical_rotation(word);
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<std::string, Rational>& terms() const { return terms_; }

  bool operator==(const CyclicPoly& other) const = default;

 private:
  std::map<std::string, Rational> terms_;
};

/// Cyclic derivative: d[w]/dg = sum over occurrences w[s] = g of the word
/// w[s+1..] w[..s-1], extended linearly.
inline NCPoly cyclic_derivative(const CyclicPoly& phi, char generator) {
  NCPoly out;
  for (const auto& [word, coeff] : phi.terms())
    for (std::size_t s = 0; s < word.size(); ++s)
      if (word[s] == generator) out.add(word.substr(s + 1) + word.substr(0, s), coeff);
  return out;
}

}  // namespace biorat
