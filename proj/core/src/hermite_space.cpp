#include "hermquad/hermite_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hermquad/errors.hpp"
#include "hermquad/hermite.hpp"

namespace hermquad {

namespace {

constexpr double kOmegaMargin = 1e-6;
constexpr double kCramerConstant = 1.5832334870861595;  // (2*pi)^(1/4)

void check_dimension(const WeightedSpace& space, std::size_t got,
                     const char* where) {
  if (static_cast<int>(got) != space.dimension()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  }
}

}  // namespace

SequenceSpec SequenceSpec::explicit_list(std::vector<double> values) {
  SequenceSpec spec;
  spec.kind = Kind::explicit_list;
  spec.values = std::move(values);
  return spec;
}

SequenceSpec SequenceSpec::power(double alpha, double gamma) {
  SequenceSpec spec;
  spec.kind = Kind::power;
  spec.alpha = alpha;
  spec.gamma = gamma;
  return spec;
}

double SequenceSpec::at(int j) const {
  if (j < 1) throw std::out_of_range("SequenceSpec: index must be >= 1");
  if (kind == Kind::explicit_list) {
    if (j > static_cast<int>(values.size())) {
      throw std::out_of_range(
          "SequenceSpec: explicit list has no value at this index");
    }
    return values[static_cast<std::size_t>(j - 1)];
  }
  return alpha * std::pow(static_cast<double>(j), gamma);
}

WeightedSpace::WeightedSpace(int s, double omega, SequenceSpec a,
                             SequenceSpec b)
    : s_(s), omega_(omega), a_spec_(std::move(a)), b_spec_(std::move(b)) {
  if (s_ < 1) throw std::invalid_argument("WeightedSpace: dimension must be >= 1");
  if (!(omega_ >= kOmegaMargin && omega_ <= 1.0 - kOmegaMargin)) {
    throw std::domain_error(
        "WeightedSpace: omega must lie in [1e-6, 1 - 1e-6]");
  }
  a_.resize(static_cast<std::size_t>(s_));
  b_.resize(static_cast<std::size_t>(s_));
  for (int j = 1; j <= s_; ++j) {
    a_[static_cast<std::size_t>(j - 1)] = a_spec_.at(j);
    b_[static_cast<std::size_t>(j - 1)] = b_spec_.at(j);
  }
  for (int j = 0; j < s_; ++j) {
    const double aj = a_[static_cast<std::size_t>(j)];
    const double bj = b_[static_cast<std::size_t>(j)];
    if (!std::isfinite(aj) || !std::isfinite(bj)) {
      throw std::domain_error("WeightedSpace: weights must be finite");
    }
    if (aj < 1.0 || bj < 1.0) {
      throw std::domain_error("WeightedSpace: weights must be >= 1");
    }
    if (j > 0) {
      if (aj < a_[static_cast<std::size_t>(j - 1)] ||
          bj < b_[static_cast<std::size_t>(j - 1)]) {
        throw std::domain_error(
            "WeightedSpace: weight sequences must be non-decreasing");
      }
    }
  }
}

double WeightedSpace::a(int j) const {
  if (j < 1 || j > s_) throw std::out_of_range("WeightedSpace::a: bad index");
  return a_[static_cast<std::size_t>(j - 1)];
}

double WeightedSpace::b(int j) const {
  if (j < 1 || j > s_) throw std::out_of_range("WeightedSpace::b: bad index");
  return b_[static_cast<std::size_t>(j - 1)];
}

HermiteSeries::HermiteSeries(int dimension) : dimension_(dimension) {
  if (dimension_ < 1) {
    throw std::invalid_argument("HermiteSeries: dimension must be >= 1");
  }
}

void HermiteSeries::set(const MultiIndex& k, double coefficient) {
  if (k.dimension() != dimension_) {
    throw std::invalid_argument("HermiteSeries::set: dimension mismatch");
  }
  terms_[k] = coefficient;
}

double HermiteSeries::coefficient(const MultiIndex& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? 0.0 : it->second;
}

double exponent_weight(const WeightedSpace& space, const MultiIndex& k) {
  check_dimension(space, static_cast<std::size_t>(k.dimension()),
                  "exponent_weight");
  double sum = 0.0;
  for (int j = 1; j <= space.dimension(); ++j) {
    sum += space.a(j) * std::pow(static_cast<double>(k[j - 1]), space.b(j));
  }
  return sum;
}

namespace detail {

CertifiedValue kernel_eval_certified(const WeightedSpace& space,
                                     std::span<const double> x,
                                     std::span<const double> y, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("kernel_eval: tolerance must be > 0");
  }
  const int s = space.dimension();
  check_dimension(space, x.size(), "kernel_eval");
  check_dimension(space, y.size(), "kernel_eval");
  for (int j = 0; j < s; ++j) {
    if (!std::isfinite(x[static_cast<std::size_t>(j)]) ||
        !std::isfinite(y[static_cast<std::size_t>(j)])) {
      throw std::domain_error("kernel_eval: non-finite input");
    }
  }

  const double log_omega = std::log(space.omega());

  // Per-dimension term bound from |H_k(u)| <= (2*pi)^(1/4) exp(u^2/4), and
  // an upper bound on each one-dimensional factor via the tail lemma
  // sum_{k>=1} omega^(a k^b) <= omega^a / (1 - omega^a).
  std::vector<double> term_bound(static_cast<std::size_t>(s));
  std::vector<double> factor_bound(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j) {
    const double xj = x[static_cast<std::size_t>(j - 1)];
    const double yj = y[static_cast<std::size_t>(j - 1)];
    const double c = kCramerConstant * kCramerConstant *
                     std::exp((xj * xj + yj * yj) / 4.0);
    const double one_minus = 1.0 - std::exp(space.a(j) * log_omega);
    term_bound[static_cast<std::size_t>(j - 1)] = c;
    factor_bound[static_cast<std::size_t>(j - 1)] = c / one_minus;
    if (!std::isfinite(factor_bound[static_cast<std::size_t>(j - 1)])) {
      throw std::domain_error(
          "kernel_eval: truncation certificate is not representable at this "
          "point");
    }
  }

  constexpr std::size_t kMaxTerms = 10'000'000;

  CertifiedValue result;
  result.value = 1.0;
  std::vector<double> factor(static_cast<std::size_t>(s));
  std::vector<double> tail(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j) {
    double other = 1.0;
    for (int i = 1; i <= s; ++i) {
      if (i != j) other *= factor_bound[static_cast<std::size_t>(i - 1)];
    }
    if (!std::isfinite(other)) {
      throw std::domain_error(
          "kernel_eval: truncation certificate is not representable at this "
          "point");
    }
    const double budget = tol / (s * other);

    const double aj = space.a(j);
    const double bj = space.b(j);
    const double c = term_bound[static_cast<std::size_t>(j - 1)];
    const double one_minus = 1.0 - std::exp(aj * log_omega);

    HermiteIterator hx(x[static_cast<std::size_t>(j - 1)]);
    HermiteIterator hy(y[static_cast<std::size_t>(j - 1)]);
    double sum = hx.value() * hy.value();  // k = 0 term
    std::size_t k = 0;
    double remainder =
        c * std::exp(aj * std::pow(static_cast<double>(k + 1), bj) * log_omega) /
        one_minus;
    while (remainder > budget) {
      if (k >= kMaxTerms) {
        throw convergence_error("kernel_eval: series did not certify");
      }
      hx.advance();
      hy.advance();
      ++k;
      const double weight =
          std::exp(aj * std::pow(static_cast<double>(k), bj) * log_omega);
      sum += weight * hx.value() * hy.value();
      remainder =
          c *
          std::exp(aj * std::pow(static_cast<double>(k + 1), bj) * log_omega) /
          one_minus;
    }
    factor[static_cast<std::size_t>(j - 1)] = sum;
    tail[static_cast<std::size_t>(j - 1)] = remainder;
    result.value *= sum;
  }

  // Telescoped product-error certificate; each |factor| and
  // |factor| + tail stays below factor_bound.
  double total_tail = 0.0;
  for (int j = 1; j <= s; ++j) {
    double other = 1.0;
    for (int i = 1; i <= s; ++i) {
      if (i != j) other *= factor_bound[static_cast<std::size_t>(i - 1)];
    }
    total_tail += tail[static_cast<std::size_t>(j - 1)] * other;
  }
  result.tail_bound = total_tail;
  return result;
}

}  // namespace detail

double kernel_eval(const WeightedSpace& space, std::span<const double> x,
                   std::span<const double> y, double tol) {
  return detail::kernel_eval_certified(space, x, y, tol).value;
}

double series_norm(const WeightedSpace& space, const HermiteSeries& f) {
  check_dimension(space, static_cast<std::size_t>(f.dimension()),
                  "series_norm");
  const double log_inv_omega = -std::log(space.omega());
  double sum = 0.0;
  for (const auto& [k, coefficient] : f.terms()) {
    const double exponent = exponent_weight(space, k);
    sum += coefficient * coefficient * std::exp(exponent * log_inv_omega);
  }
  return std::sqrt(sum);
}

double series_eval(const HermiteSeries& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.dimension()) {
    throw std::invalid_argument("series_eval: dimension mismatch");
  }
  if (f.terms().empty()) return 0.0;

  int max_order = 0;
  for (const auto& [k, coefficient] : f.terms()) {
    max_order = std::max(max_order, k.max_entry());
  }
  std::vector<std::vector<double>> table;
  table.reserve(x.size());
  for (double xj : x) table.push_back(hermite_eval_all(max_order, xj));

  double sum = 0.0;
  for (const auto& [k, coefficient] : f.terms()) {
    double basis = 1.0;
    for (int j = 0; j < f.dimension(); ++j) {
      basis *= table[static_cast<std::size_t>(j)]
                    [static_cast<std::size_t>(k[j])];
    }
    sum += coefficient * basis;
  }
  return sum;
}

double series_integral(const HermiteSeries& f) {
  return f.coefficient(MultiIndex::zero(f.dimension()));
}

RegimeSummary regime_summary(const WeightedSpace& space) {
  RegimeSummary summary;
  double min_growth = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= space.dimension(); ++j) {
    const double growth = space.a(j) * std::exp2(space.b(j));
    summary.B_s += 1.0 / space.b(j);
    summary.A_s += 1.0 / growth;
    min_growth = std::min(min_growth, growth);
  }
  summary.p_star_s = 1.0 / summary.B_s;
  summary.min_growth = min_growth;
  return summary;
}

RegimeSummary regime_summary(const WeightedSpace& space, double beta,
                             double eta) {
  RegimeSummary summary = regime_summary(space);
  bool holds = true;
  for (int j = 1; j <= space.dimension(); ++j) {
    const double growth = space.a(j) * std::exp2(space.b(j));
    if (!(growth >= beta * std::pow(static_cast<double>(j), 1.0 + eta))) {
      holds = false;
      break;
    }
  }
  summary.growth_condition = holds;
  return summary;
}

}  // namespace hermquad
