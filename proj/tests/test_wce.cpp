#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hermquad/gauss_hermite.hpp"
#include "hermquad/wce.hpp"
#include "oracles.hpp"

using namespace hermquad;

namespace {

WeightedSpace make_space(std::vector<double> a, std::vector<double> b,
                         double omega) {
  const int s = static_cast<int>(a.size());
  return WeightedSpace(s, omega, SequenceSpec::explicit_list(std::move(a)),
                       SequenceSpec::explicit_list(std::move(b)));
}

const double kClosedFormE2 = 2.0 / std::sqrt(3.0) - 1.0;  // single node at 0

}  // namespace

TEST_CASE("empty rule is the normalized problem") {
  const WeightedSpace space = make_space({1.0}, {1.0}, 0.5);
  const ErrorReport report = general_wce(space, {}, {}, 1e-10);
  CHECK(report.e_squared == 1.0);
  CHECK(report.tail_bound == 0.0);
}

TEST_CASE("single node at the origin: closed form and series oracle") {
  const WeightedSpace space = make_space({1.0}, {1.0}, 0.5);

  // Oracle first: the k >= 1 series for this rule is the central-binomial
  // series minus its k = 0 term.
  const double brute = oracles::central_binomial_series(0.5, 200) - 1.0;
  REQUIRE(std::abs(brute - kClosedFormE2) <= 1e-13);

  const ErrorReport report =
      general_wce(space, {{0.0}}, {1.0}, 1e-13);
  CHECK(std::abs(report.e_squared - kClosedFormE2) <= 1e-12);
  CHECK(report.tail_bound <= 1e-13);
  CHECK(report.e_squared >= 0.0);
}

TEST_CASE("unit-mass symmetric rule kills the normalization term") {
  const WeightedSpace space = make_space({1.0}, {1.0}, 0.5);
  const double c = 0.8;
  const ErrorReport report =
      general_wce(space, {{-c}, {c}}, {0.5, 0.5}, 1e-12);
  const double brute = oracles::general_wce_sq_brute(
      space, {{-c}, {c}}, {0.5, 0.5}, 400);
  // (-1 + sum alpha)^2 vanishes; what remains matches the direct series.
  CHECK(std::abs(report.e_squared - brute) <= 1e-11);
}

TEST_CASE("general_wce validation") {
  const WeightedSpace space = make_space({1.0}, {1.0}, 0.5);
  CHECK_THROWS_AS(general_wce(space, {{0.0}}, {1.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(general_wce(space, {{0.0, 1.0}}, {1.0}, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(general_wce(space, {{0.0}}, {1.0, 2.0}, 1e-10),
                  std::invalid_argument);
}

TEST_CASE("one_dim_gh_wce closed form at order 1") {
  const ErrorReport report = one_dim_gh_wce(1.0, 1.0, 0.5, 1, 1e-13);
  CHECK(std::abs(report.e_squared - kClosedFormE2) <= 1e-12);
  REQUIRE(report.analytic_upper_e_squared.has_value());
  CHECK(report.e_squared <= *report.analytic_upper_e_squared);
}

TEST_CASE("one_dim_gh_wce agrees with the brute-force series") {
  for (int n : {1, 2, 3, 5}) {
    for (double omega : {0.3, 0.5, 0.8}) {
      const ErrorReport report = one_dim_gh_wce(1.0, 1.0, omega, n, 1e-13);
      const double brute =
          oracles::one_dim_wce_sq_brute(1.0, 1.0, omega, gh_rule(n), 400);
      CHECK(std::abs(report.e_squared - brute) <= 1e-12);
    }
  }
}

TEST_CASE("one_dim_gh_wce stays below its closed-form bound") {
  const double sqrt_8pi = 5.0132565492620005;
  for (double a : {1.0, 2.0}) {
    for (double b : {1.0, 2.0}) {
      for (double omega : {0.3, 0.5, 0.8}) {
        for (int n = 1; n <= 8; ++n) {
          const ErrorReport report = one_dim_gh_wce(a, b, omega, n, 1e-12);
          const double bound = std::exp(a * std::pow(2.0 * n, b) *
                                        std::log(omega)) *
                               sqrt_8pi / (1.0 - omega * omega);
          REQUIRE(report.analytic_upper_e_squared.has_value());
          CHECK(*report.analytic_upper_e_squared ==
                doctest::Approx(bound).epsilon(1e-12));
          CHECK(report.e_squared <= bound);
        }
      }
    }
  }
}

TEST_CASE("one_dim_gh_wce validation") {
  CHECK_THROWS_AS(one_dim_gh_wce(0.5, 1.0, 0.5, 1, 1e-10), std::domain_error);
  CHECK_THROWS_AS(one_dim_gh_wce(1.0, 1.0, 0.5, 1, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(one_dim_gh_wce(1.0, 1.0, 0.5, 0, 1e-10),
                  std::invalid_argument);
}

TEST_CASE("product of two order-1 rules has e^2 = 1/3") {
  const WeightedSpace space = make_space({1.0, 1.0}, {1.0, 1.0}, 0.5);
  const std::vector<int> m{1, 1};
  const ErrorReport report = product_gh_wce(space, m, 1e-12);
  // -1 + (1 + (2/sqrt(3) - 1))^2 = 1/3
  CHECK(std::abs(report.e_squared - 1.0 / 3.0) <= 1e-12);
  REQUIRE(report.per_dimension_e_squared.has_value());
  CHECK(report.per_dimension_e_squared->size() == 2);
}

TEST_CASE("one-dimensional product reduces to the one-dimensional error") {
  const WeightedSpace space = make_space({1.0}, {1.0}, 0.5);
  const std::vector<int> m{4};
  const ErrorReport product = product_gh_wce(space, m, 3e-13);
  const ErrorReport direct = one_dim_gh_wce(1.0, 1.0, 0.5, 4, 1e-13);
  CHECK(product.e_squared == direct.e_squared);
}

TEST_CASE("product bound for three dimensions") {
  const WeightedSpace space = make_space({1.0, 1.0, 2.0}, {1.0, 1.0, 1.0}, 0.5);
  const std::vector<int> m{2, 3, 1};
  const ErrorReport report = product_gh_wce(space, m, 1e-12);
  REQUIRE(report.analytic_upper_e_squared.has_value());
  CHECK(report.e_squared <= *report.analytic_upper_e_squared);
}

TEST_CASE("dual paths: kernel form against product factorization") {
  const std::vector<WeightedSpace> spaces = {
      make_space({1.0, 1.0}, {1.0, 1.0}, 0.5),
      make_space({1.0, 2.0}, {1.0, 1.0}, 0.3),
      make_space({1.0, 1.0}, {1.0, 1.5}, 0.7),
  };
  const double tol = 1e-10;
  for (const WeightedSpace& space : spaces) {
    for (int m1 = 1; m1 <= 3; ++m1) {
      for (int m2 = 1; m2 <= 3; ++m2) {
        const std::vector<int> m{m1, m2};
        const ProductRule rule = product_rule(m);
        const ErrorReport direct = general_wce(
            space, grid_points(rule), grid_weights(rule), tol);
        const ErrorReport factored = product_gh_wce(space, m, tol);
        CHECK(std::abs(direct.e_squared - factored.e_squared) <= 2 * (tol + tol));
      }
    }
  }
}

TEST_CASE("refining any coordinate cannot increase the error") {
  const double tol = 1e-11;
  for (int s = 1; s <= 2; ++s) {
    const WeightedSpace space =
        make_space(std::vector<double>(s, 1.0), std::vector<double>(s, 1.0),
                   0.6);
    std::vector<int> m(static_cast<std::size_t>(s), 1);
    while (true) {
      const ErrorReport base = product_gh_wce(space, m, tol);
      for (int j = 0; j < s; ++j) {
        std::vector<int> finer = m;
        ++finer[static_cast<std::size_t>(j)];
        const ErrorReport refined = product_gh_wce(space, finer, tol);
        CHECK(refined.e_squared <= base.e_squared + 2 * tol);
      }
      // advance odometer over [1,6]^s
      int j = s - 1;
      while (j >= 0) {
        if (++m[static_cast<std::size_t>(j)] <= 6) break;
        m[static_cast<std::size_t>(j)] = 1;
        --j;
      }
      if (j < 0) break;
    }
  }
}

TEST_CASE("reported squared errors are never negative") {
  for (double omega : {0.3, 0.8}) {
    const WeightedSpace space = make_space({1.0, 1.0}, {1.0, 2.0}, omega);
    for (int m1 = 1; m1 <= 4; ++m1) {
      const std::vector<int> m{m1, m1};
      CHECK(product_gh_wce(space, m, 1e-12).e_squared >= 0.0);
    }
  }
}

TEST_CASE("function_error_bound") {
  CHECK(function_error_bound(0.0, 123.0) == 0.0);
  CHECK(function_error_bound(0.25, 1.0) == 0.25);
  CHECK_THROWS_AS(function_error_bound(-0.1, 1.0), std::invalid_argument);
}
