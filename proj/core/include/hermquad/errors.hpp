#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermquad {

/// An iterative computation failed to reach its target residual or
/// certified tolerance within its step budget.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// The feasibility search ran out of candidate evaluations.  Carries the
/// best point found so far.
class budget_exhausted_error : public std::runtime_error {
 public:
  budget_exhausted_error(const std::string& what, std::uint64_t best_n,
                         std::vector<int> best_m, double best_e)
      : std::runtime_error(what),
        best_n(best_n),
        best_m(std::move(best_m)),
        best_e(best_e) {}

  std::uint64_t best_n;
  std::vector<int> best_m;
  double best_e;
};

}  // namespace hermquad
