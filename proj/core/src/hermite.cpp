#include "hermquad/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace hermquad {

void HermiteIterator::advance() {
  const double next =
      (x_ * h_ - std::sqrt(static_cast<double>(k_)) * hm1_) /
      std::sqrt(static_cast<double>(k_ + 1));
  hm1_ = h_;
  h_ = next;
  ++k_;
}

double hermite_eval(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_eval: order must be >= 0");
  HermiteIterator it(x);
  while (it.order() < k) it.advance();
  return it.value();
}

std::vector<double> hermite_eval_all(int k_max, double x) {
  if (k_max < 0) {
    throw std::invalid_argument("hermite_eval_all: order must be >= 0");
  }
  std::vector<double> values(static_cast<std::size_t>(k_max) + 1);
  HermiteIterator it(x);
  values[0] = it.value();
  for (int k = 1; k <= k_max; ++k) {
    it.advance();
    values[static_cast<std::size_t>(k)] = it.value();
  }
  return values;
}

double hermite_eval_multi(const MultiIndex& k, std::span<const double> x) {
  if (k.dimension() != static_cast<int>(x.size())) {
    throw std::invalid_argument(
        "hermite_eval_multi: index and point dimensions differ");
  }
  double product = 1.0;
  for (int j = 0; j < k.dimension(); ++j) {
    product *= hermite_eval(k[j], x[static_cast<std::size_t>(j)]);
  }
  return product;
}

double triple_product_integral(int k, int l, int m) {
  if (k < 0 || l < 0 || m < 0) {
    throw std::invalid_argument("triple_product_integral: orders must be >= 0");
  }
  const long long total = static_cast<long long>(k) + l + m;
  if (total % 2 != 0) return 0.0;
  const long long sigma = total / 2;
  if (k > sigma || l > sigma || m > sigma) return 0.0;

  const double log_value =
      0.5 * (std::lgamma(k + 1.0) + std::lgamma(l + 1.0) +
             std::lgamma(m + 1.0)) -
      std::lgamma(static_cast<double>(sigma - k) + 1.0) -
      std::lgamma(static_cast<double>(sigma - l) + 1.0) -
      std::lgamma(static_cast<double>(sigma - m) + 1.0);
  return std::exp(log_value);
}

}  // namespace hermquad
