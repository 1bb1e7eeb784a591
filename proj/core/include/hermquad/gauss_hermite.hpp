#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hermquad {

/// One-dimensional Gauss-Hermite rule for the standard Gaussian weight.
/// Nodes are the zeros of the orthonormal Hermite polynomial H_n, listed in
/// increasing order; weights are positive and sum to 1.  Mirror symmetry
/// (x_i = -x_{n+1-i}, equal weights) holds exactly, and an odd-order rule
/// has its middle node at exactly 0.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cartesian product of one-dimensional rules, one per coordinate.
struct ProductRule {
  std::vector<QuadratureRule> per_dimension;
  std::uint64_t total_points = 0;

  int dimension() const { return static_cast<int>(per_dimension.size()); }
};

/// Builds the order-n Gauss-Hermite rule, 1 <= n <= 200.
///
/// Nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix
/// (zero diagonal, off-diagonal sqrt(1), ..., sqrt(n-1)) polished by Newton
/// iteration on the weight-stabilized recurrence until the residual
/// |H_n(x_i)| exp(-x_i^2/4) drops below 1e-10; weights use the closed form
/// alpha_i = 1 / (n * H_{n-1}(x_i)^2).  The rule is then symmetrized by
/// averaging mirrored pairs.  The weight sum is asserted to be 1 within
/// 1e-12 and never renormalized; a violation throws.
QuadratureRule gh_rule(int n);

/// Sum of alpha_i * f(x_i).  Mirrored node pairs are added innermost (in
/// ascending pair order, deterministically) so that odd integrands cancel
/// exactly instead of leaving an O(eps * max partial sum) residue.
double apply_rule(const QuadratureRule& rule,
                  const std::function<double(double)>& f);

/// Builds per-dimension rules gh_rule(m_j) and their product.
/// Throws std::overflow_error if the total point count exceeds 2^64-1.
ProductRule product_rule(std::span<const int> orders);

/// Tensor sum over the full grid, iterated in lexicographic index order
/// (first coordinate slowest).
double apply_product_rule(const ProductRule& rule,
                          const std::function<double(std::span<const double>)>& f);

/// Grid points of a product rule in the same lexicographic order used by
/// apply_product_rule.
std::vector<std::vector<double>> grid_points(const ProductRule& rule);

/// Matching grid weights (products of the per-dimension weights).
std::vector<double> grid_weights(const ProductRule& rule);

/// Moment of the standard Gaussian: 0 for odd k, (k-1)!! for even k, k <= 60.
double gaussian_moment(int k);

}  // namespace hermquad
