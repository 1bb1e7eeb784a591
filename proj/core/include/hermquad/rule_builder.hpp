#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hermquad/hermite_space.hpp"

namespace hermquad {

enum class Scheme { uexp, ecspt, ecwt };

std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);

/// A product-rule order schedule certified to reach worst-case error <= eps.
/// guaranteed_e comes from the closed-form per-dimension bounds; measured_e
/// is the computed worst-case error of the schedule.
struct SchedulePlan {
  Scheme scheme = Scheme::uexp;
  double epsilon = 0.0;
  std::vector<int> m;
  std::uint64_t n_total = 0;
  double guaranteed_e = 0.0;
  double measured_e = 0.0;
};

/// The growth hypothesis a_j 2^{b_j} >= beta j^(1+eta), used to derive the
/// constant A = sum_j 1/(a_j 2^{b_j}) for generator-form sequences.
struct GrowthCondition {
  double beta = 0.0;
  double eta = 0.0;
};

/// Single order schedule with the uniform rate: one master order m from
///   m = max_j ceil( ((1/a_j) log(sqrt(8 pi)/(1-omega^2) * s / log(1+eps^2))
///                    / log(1/omega))^{B(s)} ),
/// then m_j = floor(m^(1/(B(s) b_j))), clamped to >= 1.
SchedulePlan build_uexp(const WeightedSpace& space, double epsilon);

/// Per-dimension schedule whose orders depend only on the coordinate index:
///   m_j = ceil( (log(sqrt(8 pi)/(1-omega^2) * (pi^2/6) j^2 / log(1+eps^2))
///               / (a_j 2^{b_j} log(1/omega)))^{1/b_j} ),
/// clamped to >= 1 when the logarithm turns non-positive.
SchedulePlan build_ecspt(const WeightedSpace& space, double epsilon);

/// Per-dimension schedule driven by the constant A = sum_j 1/(a_j 2^{b_j}):
///   m_j = ceil( (log(sqrt(8 pi)/(1-omega^2) * A a_j 2^{b_j} / log(1+eps^2))
///               / (a_j 2^{b_j} log(1/omega)))^{1/b_j} ).
/// A must be supplied for explicit-list spaces.  For generator-form spaces
/// satisfying the growth condition, A is derived as the prefix sum plus the
/// integral tail bound 1/(beta eta s^eta); it is never silently estimated.
SchedulePlan build_ecwt(const WeightedSpace& space, double epsilon,
                        std::optional<double> A = std::nullopt,
                        std::optional<GrowthCondition> growth = std::nullopt);

struct ComplexitySearchResult {
  std::uint64_t n = 0;
  std::vector<int> m;
  double measured_e = 0.0;
};

/// Greedy upper bound on the information complexity: starting from the
/// all-ones order vector, repeatedly increments the coordinate giving the
/// largest measured log-error reduction per log-point cost until the
/// certified error drops below epsilon.  Ties break to the lowest index.
/// Throws budget_exhausted_error (carrying the best point so far) once
/// search_budget error evaluations have been spent.
ComplexitySearchResult information_complexity_upper(const WeightedSpace& space,
                                                    double epsilon,
                                                    int search_budget);

/// Fit of the decay model e ~ C q^(n^p).
struct RateFit {
  double p_hat = 0.0;
  double q_hat = 0.0;
  double C_hat = 1.0;
};

/// Least-squares fit of log log(1/e) against log n over the tail half of
/// the points (C pinned to 1).  Diagnostic only.  Requires at least four
/// points with e positive and strictly decreasing.
RateFit rate_estimate(std::span<const std::pair<double, double>> n_and_e);

}  // namespace hermquad
