#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermquad/hermite_space.hpp"

namespace hermquad {

/// Squared worst-case error of a linear rule over the unit ball of the
/// space, together with the certified truncation remainder of the series
/// evaluation.  e_squared is the truncated (under-) estimate; the exact
/// value lies in [e_squared, e_squared + tail_bound].
struct ErrorReport {
  double e_squared = 0.0;
  double tail_bound = 0.0;
  std::optional<std::vector<double>> per_dimension_e_squared;
  std::optional<double> analytic_upper_e_squared;
  // e_squared was a tiny negative rounding residue and was clamped to 0.
  bool clamped = false;

  double e() const;
};

/// Worst-case error of an arbitrary rule sum_i alpha_i f(x_i):
///
///   e^2 = (-1 + sum_i alpha_i)^2
///         + sum_{i,i'} alpha_i alpha_{i'} (K(x_i, x_{i'}) - 1),
///
/// where K is the space kernel; the subtracted 1 removes the k = 0 term.
/// Kernel values are evaluated to a per-call tolerance of
/// tol / (n^2 max alpha^2) so the aggregate remainder is at most tol.
/// An empty rule is allowed and yields e^2 = 1.
ErrorReport general_wce(const WeightedSpace& space,
                        const std::vector<std::vector<double>>& nodes,
                        const std::vector<double>& weights, double tol);

/// Worst-case error of the order-n Gauss-Hermite rule in the
/// one-dimensional space with weights (a, b) and parameter omega:
///
///   e^2 = sum_{k >= 2n} omega^(a k^b) err(H_k)^2,
///
/// where err(H_k) = -sum_i alpha_i H_k(x_i).  Odd-order terms vanish by
/// node symmetry; they are asserted to be <= 1e-12 and excluded.  The
/// series is truncated once the certified remainder drops below tol, and
/// the closed-form bound omega^(a (2n)^b) sqrt(8 pi) / (1 - omega^2) is
/// recorded as analytic_upper_e_squared.
ErrorReport one_dim_gh_wce(double a, double b, double omega, int n,
                           double tol);

/// Worst-case error of the product Gauss-Hermite rule with per-dimension
/// orders m, combined through the exact identity
///   e^2 = -1 + prod_j (1 + e_j^2)
/// from per-dimension series each computed to tolerance tol / (3 s).
/// Also records the product closed-form bound.
ErrorReport product_gh_wce(const WeightedSpace& space, std::span<const int> m,
                           double tol);

/// |I(f) - A(f)| <= e * norm for f with the given norm.
double function_error_bound(double e, double norm);

}  // namespace hermquad
