#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hermquad/hermite_space.hpp"

namespace hermquad {

/// Lower bound on the n-th minimal worst-case error obtained from a vector
/// t of per-dimension orders:
///
///   e(n, s) >= omega^(sum_j a_j (2 t_j)^{b_j}) / prod_j (4^{t_j} 2 (t_j+1)^2)
///
/// valid for every n < prod_j (t_j + 1).  Evaluated in log space; `bound`
/// is exp(log_bound) and may underflow to 0 for large exponents.
struct LowerBoundResult {
  std::vector<int> t;
  double bound = 0.0;
  double log_bound = 0.0;
  std::uint64_t valid_for_n_below = 0;
};

LowerBoundResult lower_bound(const WeightedSpace& space,
                             std::span<const int> t);

/// Exhaustively maximizes the bound over t vectors with entries in
/// [1, t_cap] and prod(t_j + 1) > n.  Ties break to the lexicographically
/// smallest t.  Throws std::invalid_argument when no admissible t exists
/// within the cap.
LowerBoundResult best_lower_bound(const WeightedSpace& space, std::uint64_t n,
                                  int t_cap);

/// Diagnostic for the necessity side of weak tractability: when the growth
/// sequence a_j 2^{b_j} stays bounded, no rule with fewer than 2^s points
/// can certify errors below eta^s with eta = omega^A / 64.
struct EcwtNecessityReport {
  enum class Bounded { yes, no, unknown };

  Bounded bounded = Bounded::unknown;
  /// sup of a_j 2^{b_j} over the materialized prefix (set when bounded).
  std::optional<double> growth_sup;
  std::optional<double> eta;      // omega^growth_sup / 64
  std::optional<double> log_eta;
  /// log(eta^s / 2): errors at or below this are unreachable with < 2^s
  /// points (set when bounded).
  std::optional<double> obstruction_log_epsilon;
  /// log2 of the implied point requirement: n(eps, s) >= 2^s.
  int obstruction_log2_n = 0;
  /// All-ones instantiation of the bound, valid for every n < 2^s:
  /// log(omega^(sum_j a_j 2^{b_j}) / 64^s).  Always computed.
  double allones_log_bound = 0.0;
};

/// Boundedness is decided from power-form generators (gamma == 0 on both
/// sequences means the growth sequence is constant); explicit lists are
/// undecidable unless `declared_bounded` is supplied.
EcwtNecessityReport ecwt_necessity_diagnostic(
    const WeightedSpace& space,
    std::optional<bool> declared_bounded = std::nullopt);

}  // namespace hermquad
