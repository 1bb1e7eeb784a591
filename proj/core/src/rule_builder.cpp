#include "hermquad/rule_builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hermquad/errors.hpp"
#include "hermquad/parallel.hpp"
#include "hermquad/wce.hpp"

namespace hermquad {

namespace {

constexpr double kSqrt8Pi = 5.0132565492620005;  // sqrt(8*pi)

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
}

std::uint64_t checked_total(std::span<const int> m) {
  std::uint64_t total = 1;
  for (int mj : m) {
    const auto factor = static_cast<std::uint64_t>(mj);
    if (total > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("schedule point count overflows");
    }
    total *= factor;
  }
  return total;
}

double growth(const WeightedSpace& space, int j) {
  return space.a(j) * std::exp2(space.b(j));
}

// Closed-form squared-error bound of the order-m_j product rule:
// -1 + prod_j (1 + omega^(a_j (2 m_j)^{b_j}) sqrt(8 pi) / (1 - omega^2)).
double closed_form_bound_e2(const WeightedSpace& space,
                            std::span<const int> m) {
  const double log_omega = std::log(space.omega());
  const double prefactor =
      kSqrt8Pi / (1.0 - space.omega() * space.omega());
  double log_product = 0.0;
  for (int j = 1; j <= space.dimension(); ++j) {
    const double bound_j =
        std::exp(space.a(j) *
                 std::pow(2.0 * m[static_cast<std::size_t>(j - 1)],
                          space.b(j)) *
                 log_omega) *
        prefactor;
    log_product += std::log1p(bound_j);
  }
  return std::expm1(log_product);
}

SchedulePlan finish_plan(const WeightedSpace& space, Scheme scheme,
                         double epsilon, std::vector<int> m) {
  SchedulePlan plan;
  plan.scheme = scheme;
  plan.epsilon = epsilon;
  plan.m = std::move(m);
  plan.n_total = checked_total(plan.m);

  const double bound_e2 = closed_form_bound_e2(space, plan.m);
  plan.guaranteed_e = std::sqrt(std::max(0.0, bound_e2));
  if (plan.guaranteed_e > epsilon) {
    throw std::logic_error(std::string(scheme_name(scheme)) +
                           " schedule failed its certification");
  }
  plan.measured_e =
      product_gh_wce(space, plan.m, epsilon * epsilon / 100.0).e();
  return plan;
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::uexp:
      return "uexp";
    case Scheme::ecspt:
      return "ecspt";
    case Scheme::ecwt:
      return "ecwt";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "uexp") return Scheme::uexp;
  if (name == "ecspt") return Scheme::ecspt;
  if (name == "ecwt") return Scheme::ecwt;
  throw std::invalid_argument("unknown scheme: " + std::string(name));
}

SchedulePlan build_uexp(const WeightedSpace& space, double epsilon) {
  validate_epsilon(epsilon);
  const int s = space.dimension();
  const double log_inv_omega = -std::log(space.omega());
  const double B_s = regime_summary(space).B_s;

  const double log_argument =
      std::log(kSqrt8Pi / (1.0 - space.omega() * space.omega()) * s /
               std::log1p(epsilon * epsilon));

  double m_master = 1.0;
  for (int j = 1; j <= s; ++j) {
    const double base = (1.0 / space.a(j)) * log_argument / log_inv_omega;
    const double candidate = base <= 0.0 ? 1.0 : std::ceil(std::pow(base, B_s));
    m_master = std::max(m_master, candidate);
  }

  std::vector<int> m(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j) {
    const double mj = std::floor(std::pow(m_master, 1.0 / (B_s * space.b(j))));
    m[static_cast<std::size_t>(j - 1)] =
        std::max(1, static_cast<int>(mj));
  }
  return finish_plan(space, Scheme::uexp, epsilon, std::move(m));
}

SchedulePlan build_ecspt(const WeightedSpace& space, double epsilon) {
  validate_epsilon(epsilon);
  const int s = space.dimension();
  const double log_inv_omega = -std::log(space.omega());
  const double prefactor = kSqrt8Pi / (1.0 - space.omega() * space.omega());
  const double pi_sq_sixth = 1.6449340668482264;  // pi^2 / 6

  std::vector<int> m(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j) {
    const double numerator = std::log(
        prefactor * pi_sq_sixth * static_cast<double>(j) * j /
        std::log1p(epsilon * epsilon));
    const double base = numerator / (growth(space, j) * log_inv_omega);
    m[static_cast<std::size_t>(j - 1)] =
        base <= 0.0
            ? 1
            : std::max(1, static_cast<int>(
                              std::ceil(std::pow(base, 1.0 / space.b(j)))));
  }
  return finish_plan(space, Scheme::ecspt, epsilon, std::move(m));
}

SchedulePlan build_ecwt(const WeightedSpace& space, double epsilon,
                        std::optional<double> A,
                        std::optional<GrowthCondition> growth_cond) {
  validate_epsilon(epsilon);
  const int s = space.dimension();

  double constant_A = 0.0;
  if (A.has_value()) {
    if (!(*A > 0.0)) {
      throw std::invalid_argument("build_ecwt: A must be > 0");
    }
    constant_A = *A;
  } else {
    if (space.a_spec().kind == SequenceSpec::Kind::explicit_list ||
        space.b_spec().kind == SequenceSpec::Kind::explicit_list) {
      throw std::invalid_argument(
          "build_ecwt: explicit-list spaces must supply the constant A");
    }
    if (!growth_cond.has_value()) {
      throw std::invalid_argument(
          "build_ecwt: generator-form spaces need (beta, eta) to derive A");
    }
    if (!(growth_cond->beta > 0.0) || !(growth_cond->eta > 0.0)) {
      throw std::invalid_argument("build_ecwt: beta and eta must be > 0");
    }
    const RegimeSummary summary =
        regime_summary(space, growth_cond->beta, growth_cond->eta);
    if (!summary.growth_condition.value_or(false)) {
      throw std::invalid_argument(
          "build_ecwt: growth condition a_j 2^{b_j} >= beta j^(1+eta) fails "
          "on the prefix");
    }
    // Prefix sum plus the integral tail bound of sum_{j>s} 1/(beta j^(1+eta)).
    constant_A = summary.A_s +
                 1.0 / (growth_cond->beta * growth_cond->eta *
                        std::pow(static_cast<double>(s), growth_cond->eta));
  }

  const double log_inv_omega = -std::log(space.omega());
  const double prefactor = kSqrt8Pi / (1.0 - space.omega() * space.omega());
  const double log_eps_term = std::log1p(epsilon * epsilon);

  std::vector<int> m(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j) {
    const double g = growth(space, j);
    const double numerator = std::log(prefactor * constant_A * g / log_eps_term);
    const double base = numerator / (g * log_inv_omega);
    m[static_cast<std::size_t>(j - 1)] =
        base <= 0.0
            ? 1
            : std::max(1, static_cast<int>(
                              std::ceil(std::pow(base, 1.0 / space.b(j)))));
  }

  // Per-dimension certification as in the schedule's derivation.
  for (int j = 1; j <= s; ++j) {
    const double g = growth(space, j);
    const double lhs =
        std::exp(space.a(j) *
                 std::pow(2.0 * m[static_cast<std::size_t>(j - 1)],
                          space.b(j)) *
                 std::log(space.omega())) *
        prefactor;
    const double rhs = log_eps_term / (constant_A * g);
    if (lhs > rhs * (1.0 + 1e-9)) {
      throw std::logic_error(
          "build_ecwt: per-dimension certification failed");
    }
  }
  return finish_plan(space, Scheme::ecwt, epsilon, std::move(m));
}

ComplexitySearchResult information_complexity_upper(const WeightedSpace& space,
                                                    double epsilon,
                                                    int search_budget) {
  validate_epsilon(epsilon);
  if (search_budget < 1) {
    throw std::invalid_argument(
        "information_complexity_upper: budget must be >= 1");
  }
  const int s = space.dimension();
  const double tol = epsilon * epsilon / 100.0;

  int evaluations = 0;
  std::vector<int> best_m;
  double best_e = std::numeric_limits<double>::infinity();

  const auto certified_e = [](const ErrorReport& report) {
    return std::sqrt(std::max(0.0, report.e_squared) + report.tail_bound);
  };
  const auto record_best = [&](const std::vector<int>& m, double e) {
    if (e < best_e) {
      best_e = e;
      best_m = m;
    }
  };
  const auto out_of_budget = [&](const std::vector<int>& m) {
    return budget_exhausted_error(
        "information_complexity_upper: budget exhausted before feasibility",
        checked_total(best_m.empty() ? m : best_m),
        best_m.empty() ? m : best_m, best_e);
  };

  std::vector<int> m(static_cast<std::size_t>(s), 1);
  ++evaluations;
  ErrorReport current = product_gh_wce(space, m, tol);
  record_best(m, certified_e(current));

  while (certified_e(current) > epsilon) {
    if (evaluations + s > search_budget) throw out_of_budget(m);
    evaluations += s;

    std::vector<ErrorReport> candidates(static_cast<std::size_t>(s));
    detail::parallel_index_apply(static_cast<std::size_t>(s),
                                 [&](std::size_t j) {
                                   std::vector<int> trial = m;
                                   ++trial[j];
                                   candidates[j] =
                                       product_gh_wce(space, trial, tol);
                                 });

    // Log-error reduction per log-point cost; deterministic low-index ties.
    constexpr double kFloor = 1e-300;
    const double log_current =
        std::log(std::max(kFloor, std::max(0.0, current.e_squared)));
    int best_j = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < s; ++j) {
      const auto& candidate = candidates[static_cast<std::size_t>(j)];
      const double log_candidate =
          std::log(std::max(kFloor, std::max(0.0, candidate.e_squared)));
      const double cost =
          std::log(static_cast<double>(m[static_cast<std::size_t>(j)] + 1) /
                   static_cast<double>(m[static_cast<std::size_t>(j)]));
      const double score = (log_current - log_candidate) / cost;
      if (score > best_score) {
        best_score = score;
        best_j = j;
      }
    }

    ++m[static_cast<std::size_t>(best_j)];
    current = candidates[static_cast<std::size_t>(best_j)];
    record_best(m, certified_e(current));
  }

  ComplexitySearchResult result;
  result.n = checked_total(m);
  result.m = std::move(m);
  result.measured_e = current.e();
  return result;
}

RateFit rate_estimate(std::span<const std::pair<double, double>> n_and_e) {
  if (n_and_e.size() < 4) {
    throw std::invalid_argument("rate_estimate: need at least 4 points");
  }
  for (std::size_t i = 0; i < n_and_e.size(); ++i) {
    const auto& [n, e] = n_and_e[i];
    if (!(n > 0.0) || !(e > 0.0)) {
      throw std::invalid_argument(
          "rate_estimate: points must have positive n and e");
    }
    if (i > 0) {
      if (!(n > n_and_e[i - 1].first)) {
        throw std::invalid_argument("rate_estimate: n must be increasing");
      }
      if (!(e < n_and_e[i - 1].second)) {
        throw std::invalid_argument(
            "rate_estimate: errors must be strictly decreasing");
      }
    }
  }

  // Fit log log(1/e) = p log n + const on the tail half; C is pinned to 1
  // so pre-asymptotic transients in the head do not bias the slope.
  const std::size_t start = n_and_e.size() / 2;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto count = static_cast<double>(n_and_e.size() - start);
  for (std::size_t i = start; i < n_and_e.size(); ++i) {
    const auto& [n, e] = n_and_e[i];
    if (!(e < 1.0)) {
      throw std::invalid_argument(
          "rate_estimate: tail errors must be below 1 to fit the decay model");
    }
    const double xi = std::log(n);
    const double yi = std::log(std::log(1.0 / e));
    sx += xi;
    sy += yi;
    sxx += xi * xi;
    sxy += xi * yi;
  }
  const double denominator = count * sxx - sx * sx;
  if (denominator == 0.0) {
    throw std::invalid_argument("rate_estimate: degenerate abscissae");
  }
  RateFit fit;
  fit.p_hat = (count * sxy - sx * sy) / denominator;
  const double intercept = (sy - fit.p_hat * sx) / count;
  fit.q_hat = std::exp(-std::exp(intercept));
  fit.C_hat = 1.0;
  return fit;
}

}  // namespace hermquad
