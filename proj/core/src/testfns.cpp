#include "hermquad/testfns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hermquad/gauss_hermite.hpp"
#include "hermquad/hermite.hpp"

namespace hermquad {

namespace {

// Coefficient of the orthonormal H_k in the expansion of x^d:
//   d! / (sqrt(k!) 2^((d-k)/2) ((d-k)/2)!)   for d-k even, k <= d.
double monomial_coefficient(int degree, int k) {
  if (k > degree || (degree - k) % 2 != 0) return 0.0;
  const int half = (degree - k) / 2;
  const double log_value = std::lgamma(degree + 1.0) -
                           0.5 * std::lgamma(k + 1.0) -
                           half * std::log(2.0) - std::lgamma(half + 1.0);
  return std::exp(log_value);
}

void fill_box(HermiteSeries& series, const TestFunction& fn,
              std::vector<int>& k, int j, int k_max) {
  if (j == fn.dimension()) {
    const MultiIndex index(k);
    const double coefficient = fn.coefficient(index);
    if (coefficient != 0.0) series.set(index, coefficient);
    return;
  }
  for (int value = 0; value <= k_max; ++value) {
    k[static_cast<std::size_t>(j)] = value;
    fill_box(series, fn, k, j + 1, k_max);
  }
}

}  // namespace

double appendix_b_eval(int s, std::span<const double> x) {
  if (s < 1 || static_cast<int>(x.size()) != s) {
    throw std::invalid_argument("appendix_b_eval: dimension mismatch");
  }
  double sum = 0.0;
  for (double xj : x) sum += xj;
  return std::exp(sum / std::sqrt(static_cast<double>(s)));
}

double appendix_b_coefficient(int s, const MultiIndex& k) {
  if (k.dimension() != s) {
    throw std::invalid_argument("appendix_b_coefficient: dimension mismatch");
  }
  const double log_s = std::log(static_cast<double>(s));
  double log_value = 0.5;
  for (int j = 0; j < s; ++j) {
    log_value -= 0.5 * (std::lgamma(k[j] + 1.0) + k[j] * log_s);
  }
  const double value = std::exp(log_value);
  // All coefficients of this function are positive by construction.
  if (!(value > 0.0)) {
    throw std::logic_error("appendix_b_coefficient: expected positive value");
  }
  return value;
}

double appendix_b_norm_squared(const WeightedSpace& space) {
  double sum = 0.0;
  for (int j = 1; j <= space.dimension(); ++j) {
    if (space.b(j) != 1.0) {
      throw std::invalid_argument(
          "appendix_b_norm_squared: closed form requires b identically 1");
    }
    sum += std::pow(space.omega(), -space.a(j));
  }
  return std::exp(1.0 + sum / space.dimension());
}

TestFunction TestFunction::appendix_b(int s) {
  if (s < 1) throw std::invalid_argument("appendix_b: dimension must be >= 1");
  return TestFunction(Kind::appendix_b, s, std::exp(0.5));
}

TestFunction TestFunction::single_hermite(MultiIndex k) {
  const double integral = k.is_zero() ? 1.0 : 0.0;
  TestFunction fn(Kind::single_hermite, k.dimension(), integral);
  fn.index_ = std::move(k);
  return fn;
}

TestFunction TestFunction::monomial(int degree) {
  if (degree < 0 || degree > 60) {
    throw std::invalid_argument("monomial: degree must lie in [0, 60]");
  }
  TestFunction fn(Kind::polynomial, 1, gaussian_moment(degree));
  fn.degree_ = degree;
  return fn;
}

std::string TestFunction::name() const {
  switch (kind_) {
    case Kind::appendix_b:
      return "appendixB";
    case Kind::single_hermite: {
      std::string out = "hermite:";
      for (int j = 0; j < index_.dimension(); ++j) {
        if (j > 0) out += ',';
        out += std::to_string(index_[j]);
      }
      return out;
    }
    case Kind::polynomial:
      return "monomial:" + std::to_string(degree_);
  }
  return "unknown";
}

double TestFunction::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension_) {
    throw std::invalid_argument("TestFunction::eval: dimension mismatch");
  }
  switch (kind_) {
    case Kind::appendix_b:
      return appendix_b_eval(dimension_, x);
    case Kind::single_hermite:
      return hermite_eval_multi(index_, x);
    case Kind::polynomial:
      return std::pow(x[0], degree_);
  }
  return 0.0;
}

double TestFunction::coefficient(const MultiIndex& k) const {
  if (k.dimension() != dimension_) {
    throw std::invalid_argument(
        "TestFunction::coefficient: dimension mismatch");
  }
  switch (kind_) {
    case Kind::appendix_b:
      return appendix_b_coefficient(dimension_, k);
    case Kind::single_hermite:
      return k == index_ ? 1.0 : 0.0;
    case Kind::polynomial:
      return monomial_coefficient(degree_, k[0]);
  }
  return 0.0;
}

HermiteSeries TestFunction::truncated_series(int k_max) const {
  if (k_max < 0) {
    throw std::invalid_argument("truncated_series: k_max must be >= 0");
  }
  HermiteSeries series(dimension_);
  switch (kind_) {
    case Kind::appendix_b: {
      std::vector<int> k(static_cast<std::size_t>(dimension_), 0);
      fill_box(series, *this, k, 0, k_max);
      break;
    }
    case Kind::single_hermite:
      if (index_.max_entry() <= k_max) series.set(index_, 1.0);
      break;
    case Kind::polynomial:
      for (int k = degree_ % 2; k <= std::min(degree_, k_max); k += 2) {
        const double c = monomial_coefficient(degree_, k);
        if (c != 0.0) series.set(MultiIndex({k}), c);
      }
      break;
  }
  return series;
}

TestFunction parse_test_function(std::string_view name, int s) {
  if (name == "appendixB") return TestFunction::appendix_b(s);

  constexpr std::string_view kHermite = "hermite:";
  constexpr std::string_view kMonomial = "monomial:";
  if (name.substr(0, kHermite.size()) == kHermite) {
    std::vector<int> entries;
    std::string token;
    for (char c : name.substr(kHermite.size())) {
      if (c == ',') {
        entries.push_back(std::stoi(token));
        token.clear();
      } else {
        token += c;
      }
    }
    if (!token.empty()) entries.push_back(std::stoi(token));
    if (static_cast<int>(entries.size()) != s) {
      throw std::invalid_argument(
          "hermite test function: index dimension must match the space");
    }
    return TestFunction::single_hermite(MultiIndex(std::move(entries)));
  }
  if (name.substr(0, kMonomial.size()) == kMonomial) {
    if (s != 1) {
      throw std::invalid_argument(
          "monomial test function is univariate (s must be 1)");
    }
    return TestFunction::monomial(
        std::stoi(std::string(name.substr(kMonomial.size()))));
  }
  throw std::invalid_argument("unknown test function: " + std::string(name));
}

}  // namespace hermquad
