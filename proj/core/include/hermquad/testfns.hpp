#pragma once

#include <span>
#include <string>
#include <string_view>

#include "hermquad/hermite_space.hpp"
#include "hermquad/multi_index.hpp"

namespace hermquad {

/// Entire exponential-sum function exp(s^{-1/2} sum_j x_j) with the closed
/// coefficient formula coef(k) = sqrt(e) prod_j 1/sqrt(k_j! s^{k_j}),
/// exact integral sqrt(e).
double appendix_b_eval(int s, std::span<const double> x);
double appendix_b_coefficient(int s, const MultiIndex& k);

/// Closed form of the squared norm of the exponential-sum function in a
/// space with b identically 1: exp(1 + (1/s) sum_j omega^{-a_j}).
/// (The coefficient-sum identity gives the square of the norm; callers
/// wanting the norm itself take the square root.)  Throws when any b_j != 1.
double appendix_b_norm_squared(const WeightedSpace& space);

/// Analytic test function with a known coefficient oracle and exact
/// Gaussian integral.
class TestFunction {
 public:
  enum class Kind { appendix_b, single_hermite, polynomial };

  static TestFunction appendix_b(int s);
  static TestFunction single_hermite(MultiIndex k);
  /// Univariate monomial x^degree, degree <= 60.
  static TestFunction monomial(int degree);

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  double exact_integral() const { return exact_integral_; }
  std::string name() const;

  double eval(std::span<const double> x) const;
  double coefficient(const MultiIndex& k) const;

  /// Expansion with every per-dimension order capped at k_max; exact (all
  /// nonzero terms included) for the finite kinds whenever k_max is large
  /// enough, truncated for the exponential-sum function.
  HermiteSeries truncated_series(int k_max) const;

 private:
  TestFunction(Kind kind, int dimension, double exact_integral)
      : kind_(kind), dimension_(dimension), exact_integral_(exact_integral) {}

  Kind kind_;
  int dimension_;
  double exact_integral_;
  MultiIndex index_ = MultiIndex::zero(1);  // single_hermite
  int degree_ = 0;                          // polynomial
};

/// Parses "appendixB", "hermite:k1,k2,..." or "monomial:d" for a space of
/// dimension s.  Throws std::invalid_argument for unknown names or a
/// dimension clash.
TestFunction parse_test_function(std::string_view name, int s);

}  // namespace hermquad
