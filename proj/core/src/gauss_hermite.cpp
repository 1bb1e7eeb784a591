#include "hermquad/gauss_hermite.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hermquad/errors.hpp"
#include "hermquad/hermite.hpp"

namespace hermquad {

namespace {

// Weight-stabilized evaluation: the recurrence is linear, so seeding it
// with exp(-x^2/4) instead of 1 yields H_k(x) exp(-x^2/4) throughout.
// Those values stay O(1) uniformly in k and x, which keeps residuals
// meaningful near the extreme zeros where H_n itself reaches e^(x^2/4)
// scale and cannot be evaluated to small absolute error.
struct WeightedPair {
  double value;  // H_n(x) exp(-x^2/4)
  double prev;   // H_{n-1}(x) exp(-x^2/4)
};

WeightedPair eval_weighted_pair(int n, double x) {
  double prev = 0.0;
  double current = std::exp(-x * x / 4.0);
  for (int k = 0; k < n; ++k) {
    const double next =
        (x * current - std::sqrt(static_cast<double>(k)) * prev) /
        std::sqrt(static_cast<double>(k + 1));
    prev = current;
    current = next;
  }
  return {current, prev};
}

// Derivative of the weighted function:
//   d/dx [H_n e^(-x^2/4)] = sqrt(n) H_{n-1} e^(-x^2/4) - (x/2) H_n e^(-x^2/4).
double weighted_derivative(int n, double x, const WeightedPair& pair) {
  return std::sqrt(static_cast<double>(n)) * pair.prev -
         0.5 * x * pair.value;
}

}  // namespace

QuadratureRule gh_rule(int n) {
  if (n < 1 || n > 200) {
    throw std::invalid_argument("gh_rule: order must lie in [1, 200]");
  }

  QuadratureRule rule;
  rule.order = n;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 1.0;
    return rule;
  }

  // Eigenvalues of the Jacobi matrix give globally bracketed node estimates.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(static_cast<double>(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw convergence_error("gh_rule: tridiagonal eigensolve failed");
  }

  constexpr double kResidualTarget = 1e-10;
  constexpr int kMaxNewtonSteps = 50;

  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    WeightedPair h = eval_weighted_pair(n, x);
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
      const double derivative = weighted_derivative(n, x, h);
      if (derivative == 0.0) break;
      const double dx = h.value / derivative;
      const WeightedPair trial = eval_weighted_pair(n, x - dx);
      if (!(std::abs(trial.value) < std::abs(h.value))) break;
      x -= dx;
      h = trial;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    if (std::abs(h.value) > kResidualTarget) {
      throw convergence_error("gh_rule: node refinement did not converge");
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
  }

  // Enforce mirror symmetry exactly before computing weights; the weight
  // formula then yields exactly equal mirrored weights.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double half = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] -
                               rule.nodes[static_cast<std::size_t>(i)]);
    rule.nodes[static_cast<std::size_t>(i)] = -half;
    rule.nodes[static_cast<std::size_t>(j)] = half;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;

  // alpha_i = 1 / (n H_{n-1}^2(x_i)), rearranged through the stabilized
  // values as exp(-x^2/2) / (n (H_{n-1} e^(-x^2/4))^2) to avoid overflow.
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[static_cast<std::size_t>(i)];
    const WeightedPair h = eval_weighted_pair(n, x);
    rule.weights[static_cast<std::size_t>(i)] =
        std::exp(-x * x / 2.0) / (n * h.prev * h.prev);
  }
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double mean = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                               rule.weights[static_cast<std::size_t>(j)]);
    rule.weights[static_cast<std::size_t>(i)] = mean;
    rule.weights[static_cast<std::size_t>(j)] = mean;
  }

  double weight_sum = 0.0;
  for (double w : rule.weights) {
    if (!(w > 0.0)) {
      throw convergence_error("gh_rule: non-positive weight");
    }
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-12) {
    throw convergence_error("gh_rule: weights do not sum to 1 within 1e-12");
  }
  return rule;
}

double apply_rule(const QuadratureRule& rule,
                  const std::function<double(double)>& f) {
  // Mirrored pairs are summed innermost so odd integrands cancel exactly;
  // pairs are visited in ascending node order, keeping the result
  // deterministic.
  const std::size_t n = rule.nodes.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t j = n - 1 - i;
    sum += rule.weights[i] * f(rule.nodes[i]) +
           rule.weights[j] * f(rule.nodes[j]);
  }
  if (n % 2 == 1) {
    sum += rule.weights[n / 2] * f(rule.nodes[n / 2]);
  }
  return sum;
}

ProductRule product_rule(std::span<const int> orders) {
  if (orders.empty()) {
    throw std::invalid_argument("product_rule: need at least one order");
  }
  ProductRule rule;
  rule.per_dimension.reserve(orders.size());
  rule.total_points = 1;
  for (int m : orders) {
    rule.per_dimension.push_back(gh_rule(m));
    const auto factor = static_cast<std::uint64_t>(m);
    if (rule.total_points >
        std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("product_rule: total point count overflows");
    }
    rule.total_points *= factor;
  }
  return rule;
}

double apply_product_rule(
    const ProductRule& rule,
    const std::function<double(std::span<const double>)>& f) {
  const int s = rule.dimension();
  if (s == 0) {
    throw std::invalid_argument("apply_product_rule: empty rule");
  }
  std::vector<std::size_t> index(static_cast<std::size_t>(s), 0);
  std::vector<double> point(static_cast<std::size_t>(s));
  double sum = 0.0;
  for (std::uint64_t count = 0; count < rule.total_points; ++count) {
    double weight = 1.0;
    for (int j = 0; j < s; ++j) {
      const auto& dim = rule.per_dimension[static_cast<std::size_t>(j)];
      point[static_cast<std::size_t>(j)] =
          dim.nodes[index[static_cast<std::size_t>(j)]];
      weight *= dim.weights[index[static_cast<std::size_t>(j)]];
    }
    sum += weight * f(point);
    // Odometer increment, last coordinate fastest.
    for (int j = s - 1; j >= 0; --j) {
      auto& ij = index[static_cast<std::size_t>(j)];
      if (++ij <
          rule.per_dimension[static_cast<std::size_t>(j)].nodes.size()) {
        break;
      }
      ij = 0;
    }
  }
  return sum;
}

std::vector<std::vector<double>> grid_points(const ProductRule& rule) {
  std::vector<std::vector<double>> points;
  points.reserve(static_cast<std::size_t>(rule.total_points));
  apply_product_rule(rule, [&](std::span<const double> x) {
    points.emplace_back(x.begin(), x.end());
    return 0.0;
  });
  return points;
}

std::vector<double> grid_weights(const ProductRule& rule) {
  const int s = rule.dimension();
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(rule.total_points));
  std::vector<std::size_t> index(static_cast<std::size_t>(s), 0);
  for (std::uint64_t count = 0; count < rule.total_points; ++count) {
    double w = 1.0;
    for (int j = 0; j < s; ++j) {
      w *= rule.per_dimension[static_cast<std::size_t>(j)]
               .weights[index[static_cast<std::size_t>(j)]];
    }
    weights.push_back(w);
    for (int j = s - 1; j >= 0; --j) {
      auto& ij = index[static_cast<std::size_t>(j)];
      if (++ij <
          rule.per_dimension[static_cast<std::size_t>(j)].nodes.size()) {
        break;
      }
      ij = 0;
    }
  }
  return weights;
}

double gaussian_moment(int k) {
  if (k < 0 || k > 60) {
    throw std::invalid_argument("gaussian_moment: k must lie in [0, 60]");
  }
  if (k % 2 == 1) return 0.0;
  double moment = 1.0;
  for (int j = k - 1; j >= 3; j -= 2) moment *= j;
  return moment;
}

}  // namespace hermquad
