#include "hermquad/wce.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hermquad/errors.hpp"
#include "hermquad/gauss_hermite.hpp"
#include "hermquad/hermite.hpp"
#include "hermquad/parallel.hpp"

namespace hermquad {

namespace {

constexpr double kSqrt8Pi = 5.0132565492620005;  // sqrt(8*pi)
constexpr double kOddTermCeiling = 1e-12;
constexpr std::size_t kMaxSeriesSteps = 20'000'000;

// Clamps a tiny negative rounding residue of an analytically non-negative
// quantity; anything materially negative is a bug.
void clamp_nonnegative(ErrorReport& report, double scale) {
  if (report.e_squared < 0.0) {
    if (report.e_squared < -1e-9 * std::max(1.0, scale)) {
      throw std::logic_error("wce: squared error is materially negative");
    }
    report.e_squared = 0.0;
    report.clamped = true;
  }
}

void validate_weight(double a, double b, double omega, const char* where) {
  if (!(a >= 1.0) || !(b >= 1.0)) {
    throw std::domain_error(std::string(where) + ": weights must be >= 1");
  }
  if (!(omega >= 1e-6 && omega <= 1.0 - 1e-6)) {
    throw std::domain_error(std::string(where) +
                            ": omega must lie in [1e-6, 1 - 1e-6]");
  }
}

}  // namespace

double ErrorReport::e() const { return std::sqrt(std::max(0.0, e_squared)); }

ErrorReport general_wce(const WeightedSpace& space,
                        const std::vector<std::vector<double>>& nodes,
                        const std::vector<double>& weights, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("general_wce: tolerance must be > 0");
  }
  if (nodes.size() != weights.size()) {
    throw std::invalid_argument(
        "general_wce: node and weight counts differ");
  }
  const std::size_t n = nodes.size();
  for (const auto& node : nodes) {
    if (static_cast<int>(node.size()) != space.dimension()) {
      throw std::invalid_argument("general_wce: node dimension mismatch");
    }
  }

  ErrorReport report;
  if (n == 0) {
    report.e_squared = 1.0;
    return report;
  }

  double weight_sum = 0.0;
  double max_abs_weight = 0.0;
  for (double alpha : weights) {
    weight_sum += alpha;
    max_abs_weight = std::max(max_abs_weight, std::abs(alpha));
  }
  const double zero_term = (-1.0 + weight_sum) * (-1.0 + weight_sum);
  if (max_abs_weight == 0.0) {
    report.e_squared = zero_term;
    return report;
  }

  const double tol_call =
      tol / (static_cast<double>(n) * static_cast<double>(n) *
             max_abs_weight * max_abs_weight);

  // Symmetric pair sum; off-diagonal kernel values are used twice.
  double interaction = 0.0;
  double tail = 0.0;
  double scale = zero_term;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t ip = 0; ip <= i; ++ip) {
      const double pair_weight = weights[i] * weights[ip];
      const double multiplicity = (ip == i) ? 1.0 : 2.0;
      if (pair_weight == 0.0) continue;
      const auto kernel = detail::kernel_eval_certified(
          space, nodes[i], nodes[ip], tol_call);
      interaction += multiplicity * pair_weight * (kernel.value - 1.0);
      tail += multiplicity * std::abs(pair_weight) * kernel.tail_bound;
      scale += multiplicity * std::abs(pair_weight) *
               (std::abs(kernel.value) + 1.0);
    }
  }

  report.e_squared = zero_term + interaction;
  report.tail_bound = tail;
  clamp_nonnegative(report, scale);
  return report;
}

ErrorReport one_dim_gh_wce(double a, double b, double omega, int n,
                           double tol) {
  validate_weight(a, b, omega, "one_dim_gh_wce");
  if (!(tol > 0.0)) {
    throw std::invalid_argument("one_dim_gh_wce: tolerance must be > 0");
  }
  const QuadratureRule rule = gh_rule(n);

  const double log_omega = std::log(omega);
  const double one_minus_pow_a = 1.0 - std::exp(a * log_omega);

  ErrorReport report;
  report.analytic_upper_e_squared =
      std::exp(a * std::pow(2.0 * n, b) * log_omega) * kSqrt8Pi /
      (1.0 - omega * omega);

  // Terms below order 2n vanish by polynomial exactness.  The remainder
  // past order K is bounded by sqrt(8 pi) omega^(a (K+1)^b) / (1 - omega^a)
  // using err(H_k)^2 <= sqrt(8 pi) and the geometric tail lemma for b >= 1.
  const auto remainder_after = [&](double k) {
    return kSqrt8Pi * std::exp(a * std::pow(k + 1.0, b) * log_omega) /
           one_minus_pow_a;
  };

  std::vector<HermiteIterator> iterators;
  iterators.reserve(rule.nodes.size());
  for (double x : rule.nodes) iterators.emplace_back(x);

  int k = 2 * n;
  double tail = remainder_after(k - 1.0);
  double sum = 0.0;
  std::size_t steps = 0;
  while (tail > tol) {
    if (++steps > kMaxSeriesSteps) {
      throw convergence_error(
          "one_dim_gh_wce: tolerance unreachable within the step budget");
    }
    for (auto& it : iterators) {
      while (it.order() < k) it.advance();
    }
    double err = 0.0;
    for (std::size_t i = 0; i < iterators.size(); ++i) {
      err += rule.weights[i] * iterators[i].value();
    }
    if (k % 2 == 1) {
      if (std::abs(err) > kOddTermCeiling) {
        throw std::logic_error(
            "one_dim_gh_wce: odd-order term is not negligible; the rule is "
            "not symmetric");
      }
    } else {
      const double weight = std::exp(a * std::pow(k, b) * log_omega);
      sum += weight * err * err;
    }
    tail = remainder_after(static_cast<double>(k));
    ++k;
  }

  report.e_squared = sum;
  report.tail_bound = tail;
  clamp_nonnegative(report, 1.0);
  return report;
}

ErrorReport product_gh_wce(const WeightedSpace& space, std::span<const int> m,
                           double tol) {
  if (static_cast<int>(m.size()) != space.dimension()) {
    throw std::invalid_argument("product_gh_wce: order vector dimension "
                                "mismatch");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("product_gh_wce: tolerance must be > 0");
  }
  const int s = space.dimension();
  const double per_dimension_tol = tol / (3.0 * s);

  std::vector<ErrorReport> dims(static_cast<std::size_t>(s));
  detail::parallel_index_apply(static_cast<std::size_t>(s),
                               [&](std::size_t j) {
                                 dims[j] = one_dim_gh_wce(
                                     space.a(static_cast<int>(j) + 1),
                                     space.b(static_cast<int>(j) + 1),
                                     space.omega(),
                                     m[j], per_dimension_tol);
                               });

  ErrorReport report;
  if (s == 1) {
    report = dims[0];
    report.per_dimension_e_squared = {dims[0].e_squared};
    return report;
  }

  // Exact combination e^2 = -1 + prod_j (1 + e_j^2), evaluated through
  // log1p/expm1 so small per-dimension errors keep relative accuracy.
  double log_product = 0.0;
  double log_product_upper = 0.0;
  double log_analytic = 0.0;
  std::vector<double> per_dim(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    const auto& dim = dims[static_cast<std::size_t>(j)];
    per_dim[static_cast<std::size_t>(j)] = dim.e_squared;
    log_product += std::log1p(dim.e_squared);
    log_product_upper += std::log1p(dim.e_squared + dim.tail_bound);
    log_analytic += std::log1p(*dim.analytic_upper_e_squared);
  }
  report.e_squared = std::expm1(log_product);
  report.tail_bound =
      std::max(0.0, std::expm1(log_product_upper) - std::expm1(log_product));
  report.analytic_upper_e_squared = std::expm1(log_analytic);
  report.per_dimension_e_squared = std::move(per_dim);
  clamp_nonnegative(report, 1.0);
  return report;
}

double function_error_bound(double e, double norm) {
  if (e < 0.0 || norm < 0.0) {
    throw std::invalid_argument(
        "function_error_bound: arguments must be >= 0");
  }
  return e * norm;
}

}  // namespace hermquad
