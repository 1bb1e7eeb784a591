#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hermquad/multi_index.hpp"

namespace hermquad {

/// Description of one weight sequence: either an explicit list of values
/// (indices beyond the list are errors, never extrapolations) or the power
/// form alpha * j^gamma for j = 1, 2, ...
struct SequenceSpec {
  enum class Kind { explicit_list, power };

  Kind kind = Kind::explicit_list;
  std::vector<double> values;  // explicit_list
  double alpha = 1.0;          // power form
  double gamma = 0.0;

  static SequenceSpec explicit_list(std::vector<double> values);
  static SequenceSpec power(double alpha, double gamma);

  /// Value at 1-based index j.  Throws std::out_of_range for an explicit
  /// list queried past its end.
  double at(int j) const;
};

/// The weighted function space on R^s determined by (a, b, omega): Hermite
/// coefficients of members decay like omega^(sum_j a_j k_j^{b_j}).
/// Invariants: 1 <= a_1 <= ... <= a_s, 1 <= b_1 <= ... <= b_s, and omega in
/// [1e-6, 1 - 1e-6] (the open-interval extremes are numerically
/// meaningless and rejected).
class WeightedSpace {
 public:
  WeightedSpace(int s, double omega, SequenceSpec a, SequenceSpec b);

  int dimension() const { return s_; }
  double omega() const { return omega_; }

  /// Weight values at 1-based coordinate j in [1, s].
  double a(int j) const;
  double b(int j) const;

  const std::vector<double>& a_values() const { return a_; }
  const std::vector<double>& b_values() const { return b_; }
  const SequenceSpec& a_spec() const { return a_spec_; }
  const SequenceSpec& b_spec() const { return b_spec_; }

 private:
  int s_;
  double omega_;
  SequenceSpec a_spec_;
  SequenceSpec b_spec_;
  std::vector<double> a_;  // materialized prefix, index 0 is j=1
  std::vector<double> b_;
};

/// Sparse Hermite expansion: a finite map from multi-indices to
/// coefficients, all of the same dimension.
class HermiteSeries {
 public:
  explicit HermiteSeries(int dimension);

  int dimension() const { return dimension_; }
  void set(const MultiIndex& k, double coefficient);
  double coefficient(const MultiIndex& k) const;  // 0 when absent
  const std::map<MultiIndex, double>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  int dimension_;
  std::map<MultiIndex, double> terms_;
};

/// Finite-prefix summary of the convergence/tractability regime.
struct RegimeSummary {
  double B_s = 0.0;       // sum_{j<=s} 1/b_j
  double A_s = 0.0;       // sum_{j<=s} 1/(a_j 2^{b_j})
  double p_star_s = 0.0;  // 1/B_s, the best exponential rate
  double min_growth = 0.0;  // min_{j<=s} a_j 2^{b_j}
  // Set when (beta, eta) were supplied: whether a_j 2^{b_j} >= beta j^(1+eta)
  // holds for every j <= s.
  std::optional<bool> growth_condition;
};

/// The exponent functional sum_j a_j k_j^{b_j}.
double exponent_weight(const WeightedSpace& space, const MultiIndex& k);

/// Kernel value sum_k omega^{|k|_{a,b}} H_k(x) H_k(y), evaluated as a
/// product of per-dimension series truncated under a certified tail bound
/// so the absolute error is at most tol.
double kernel_eval(const WeightedSpace& space, std::span<const double> x,
                   std::span<const double> y, double tol);

namespace detail {

struct CertifiedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

// kernel_eval plus the certified remainder actually achieved.
CertifiedValue kernel_eval_certified(const WeightedSpace& space,
                                     std::span<const double> x,
                                     std::span<const double> y, double tol);

}  // namespace detail

/// Norm of an explicitly given series:
/// sqrt(sum_k coefficient(k)^2 * omega^(-|k|_{a,b})).
double series_norm(const WeightedSpace& space, const HermiteSeries& f);

/// Pointwise value sum_k coefficient(k) H_k(x).
double series_eval(const HermiteSeries& f, std::span<const double> x);

/// Exact Gaussian integral of the series: the coefficient at k = 0.
double series_integral(const HermiteSeries& f);

RegimeSummary regime_summary(const WeightedSpace& space);
RegimeSummary regime_summary(const WeightedSpace& space, double beta,
                             double eta);

}  // namespace hermquad
