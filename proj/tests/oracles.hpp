// Test-only oracles, kept independent of the library code paths they check:
// brute-force series evaluation of the worst-case error formula, generating
// function identities, quadrature cross-checks and finite differences.
#pragma once

#include <cmath>
#include <vector>

#include "hermquad/gauss_hermite.hpp"
#include "hermquad/hermite.hpp"
#include "hermquad/hermite_space.hpp"

namespace oracles {

// sum_{m=0}^{terms} omega^(2m) C(2m, m) / 4^m, the series behind the
// closed form (1 - omega^2)^(-1/2) for the diagonal kernel value at 0.
inline double central_binomial_series(double omega, int terms) {
  double sum = 0.0;
  double ratio = 1.0;  // C(2m, m) / 4^m
  double power = 1.0;  // omega^(2m)
  for (int m = 0; m <= terms; ++m) {
    sum += power * ratio;
    ratio *= (2.0 * m + 1.0) / (2.0 * m + 2.0);
    power *= omega * omega;
  }
  return sum;
}

// Direct truncation of the worst-case error series for a one-dimensional
// rule: sum_{k=1}^{k_max} omega^(a k^b) (sum_i alpha_i H_k(x_i))^2.
inline double one_dim_wce_sq_brute(double a, double b, double omega,
                                   const hermquad::QuadratureRule& rule,
                                   int k_max) {
  std::vector<std::vector<double>> table;
  table.reserve(rule.nodes.size());
  for (double x : rule.nodes) {
    table.push_back(hermquad::hermite_eval_all(k_max, x));
  }
  const double log_omega = std::log(omega);
  double sum = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    double err = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      err += rule.weights[i] * table[i][static_cast<std::size_t>(k)];
    }
    sum += std::exp(a * std::pow(k, b) * log_omega) * err * err;
  }
  return sum;
}

// Multi-index truncation of the same formula for an arbitrary rule:
// (-1 + sum alpha)^2 + sum_{0 < k <= box} omega^|k| (sum alpha H_k(x))^2.
inline double general_wce_sq_brute(const hermquad::WeightedSpace& space,
                                   const std::vector<std::vector<double>>& nodes,
                                   const std::vector<double>& weights,
                                   int k_box) {
  const int s = space.dimension();
  std::vector<std::vector<std::vector<double>>> table(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (int j = 0; j < s; ++j) {
      table[i].push_back(hermquad::hermite_eval_all(
          k_box, nodes[i][static_cast<std::size_t>(j)]));
    }
  }

  double weight_sum = 0.0;
  for (double alpha : weights) weight_sum += alpha;
  double total = (-1.0 + weight_sum) * (-1.0 + weight_sum);

  const double log_omega = std::log(space.omega());
  std::vector<int> k(static_cast<std::size_t>(s), 0);
  while (true) {
    // advance odometer, skipping the zero index
    int j = s - 1;
    while (j >= 0) {
      if (++k[static_cast<std::size_t>(j)] <= k_box) break;
      k[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;

    double exponent = 0.0;
    for (int d = 1; d <= s; ++d) {
      exponent +=
          space.a(d) * std::pow(k[static_cast<std::size_t>(d - 1)], space.b(d));
    }
    double err = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      double basis = 1.0;
      for (int d = 0; d < s; ++d) {
        basis *= table[i][static_cast<std::size_t>(d)]
                      [static_cast<std::size_t>(k[static_cast<std::size_t>(d)])];
      }
      err += weights[i] * basis;
    }
    total += std::exp(exponent * log_omega) * err * err;
  }
  return total;
}

// Quadrature cross-check for the triple-product integrals; exact for
// k + l + m < 2 * order.
inline double triple_product_by_quadrature(int k, int l, int m, int order) {
  const hermquad::QuadratureRule rule = hermquad::gh_rule(order);
  return hermquad::apply_rule(rule, [&](double x) {
    return hermquad::hermite_eval(k, x) * hermquad::hermite_eval(l, x) *
           hermquad::hermite_eval(m, x);
  });
}

// Centered finite difference of H_k.
inline double hermite_derivative_fd(int k, double x, double h) {
  return (hermquad::hermite_eval(k, x + h) - hermquad::hermite_eval(k, x - h)) /
         (2.0 * h);
}

}  // namespace oracles
