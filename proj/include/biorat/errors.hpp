#pragma once

#include <stdexcept>
#include <string>

namespace biorat {

// Base class for every error raised by the library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct zero_denominator : error {
  explicit zero_denominator(const std::string& what) : error(what) {}
};

struct zero_bottom_pochhammer : error {
  explicit zero_bottom_pochhammer(const std::string& what) : error(what) {}
};

struct invalid_params : error {
  explicit invalid_params(const std::string& what) : error(what) {}
};

struct invalid_index : error {
  explicit invalid_index(const std::string& what) : error(what) {}
};

struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// Evaluation of a rational function at one of its poles.
struct eval_at_pole : error {
  explicit eval_at_pole(const std::string& what) : error(what) {}
};

// A difference-operator coefficient has a pole at a grid point
// (excluded under generic parameters, reachable with --force).
struct coefficient_pole_on_grid : error {
  explicit coefficient_pole_on_grid(const std::string& what) : error(what) {}
};

struct repeated_pole : error {
  explicit repeated_pole(const std::string& what) : error(what) {}
};

// Denominator root not among the supplied candidate poles.
struct irrational_pole : error {
  explicit irrational_pole(const std::string& what) : error(what) {}
};

// deg(num) > deg(den): no partial-fraction form with constant part.
struct improper_fraction : error {
  explicit improper_fraction(const std::string& what) : error(what) {}
};

struct singular_basis_matrix : error {
  explicit singular_basis_matrix(const std::string& what) : error(what) {}
};

// A closed-form coefficient denominator vanished (non-generic parameters).
struct degenerate_denominator : error {
  explicit degenerate_denominator(const std::string& what) : error(what) {}
};

struct unknown_selector : error {
  explicit unknown_selector(const std::string& what) : error(what) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace biorat
