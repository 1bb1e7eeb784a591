#pragma once

#include <span>
#include <vector>

#include "hermquad/multi_index.hpp"

namespace hermquad {

/// Incremental evaluation of the orthonormal probabilists' Hermite
/// polynomials at a fixed point.  After construction the iterator holds
/// H_0(x) = 1; each advance() moves one order up the three-term recurrence
///
///   H_{k+1}(x) = (x*H_k(x) - sqrt(k)*H_{k-1}(x)) / sqrt(k+1).
///
/// This family is orthonormal under the standard Gaussian density, i.e.
/// H_k = He_k / sqrt(k!) in terms of the monic probabilists' polynomials.
class HermiteIterator {
 public:
  explicit HermiteIterator(double x) : x_(x) {}

  int order() const { return k_; }
  double value() const { return h_; }
  void advance();

 private:
  double x_;
  double hm1_ = 0.0;  // H_{k-1}(x)
  double h_ = 1.0;    // H_k(x)
  int k_ = 0;
};

/// H_k(x) for the orthonormal probabilists' family.
double hermite_eval(int k, double x);

/// All of H_0(x), ..., H_{k_max}(x) in one recurrence pass.  Element j is
/// bit-for-bit equal to hermite_eval(j, x).
std::vector<double> hermite_eval_all(int k_max, double x);

/// Tensor-product polynomial H_k(x) = prod_j H_{k_j}(x_j).
/// Throws std::invalid_argument if k and x have different lengths.
double hermite_eval_multi(const MultiIndex& k, std::span<const double> x);

/// Integral of H_k * H_l * H_m against the standard Gaussian density.
/// With sigma = (k+l+m)/2 the value is
///   sqrt(k! l! m!) / ((sigma-k)! (sigma-l)! (sigma-m)!)
/// when k+l+m is even and max(k,l,m) <= sigma, and 0 otherwise.
/// Factorial ratios are evaluated as exp of log-gamma differences so the
/// result stays representable for orders up to a few hundred.
double triple_product_integral(int k, int l, int m);

}  // namespace hermquad
