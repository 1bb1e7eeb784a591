#include "hermquad/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hermquad/parallel.hpp"

namespace hermquad {

namespace {

const double kLog2 = std::log(2.0);
const double kLog4 = std::log(4.0);
const double kLog64 = std::log(64.0);

double log_bound_for(const WeightedSpace& space, std::span<const int> t) {
  const double log_omega = std::log(space.omega());
  double exponent = 0.0;
  double log_denominator = 0.0;
  for (int j = 1; j <= space.dimension(); ++j) {
    const double tj = t[static_cast<std::size_t>(j - 1)];
    exponent += space.a(j) * std::pow(2.0 * tj, space.b(j));
    log_denominator += tj * kLog4 + kLog2 + 2.0 * std::log(tj + 1.0);
  }
  return exponent * log_omega - log_denominator;
}

std::uint64_t validity_product(std::span<const int> t) {
  std::uint64_t product = 1;
  for (int tj : t) {
    const auto factor = static_cast<std::uint64_t>(tj) + 1;
    if (product > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("lower_bound: validity range overflows");
    }
    product *= factor;
  }
  return product;
}

}  // namespace

LowerBoundResult lower_bound(const WeightedSpace& space,
                             std::span<const int> t) {
  if (static_cast<int>(t.size()) != space.dimension()) {
    throw std::invalid_argument("lower_bound: t dimension mismatch");
  }
  for (int tj : t) {
    if (tj < 1) throw std::invalid_argument("lower_bound: t entries must be >= 1");
  }
  LowerBoundResult result;
  result.t.assign(t.begin(), t.end());
  result.log_bound = log_bound_for(space, t);
  result.bound = std::exp(result.log_bound);
  result.valid_for_n_below = validity_product(t);
  return result;
}

LowerBoundResult best_lower_bound(const WeightedSpace& space, std::uint64_t n,
                                  int t_cap) {
  if (n < 1) throw std::invalid_argument("best_lower_bound: n must be >= 1");
  if (t_cap < 1) {
    throw std::invalid_argument("best_lower_bound: t_cap must be >= 1");
  }
  const int s = space.dimension();
  if (s * std::log2(t_cap + 1.0) >= 64.0) {
    throw std::invalid_argument(
        "best_lower_bound: candidate space too large to enumerate");
  }

  // The all-cap vector maximizes prod(t_j + 1); if even it is inadmissible
  // there is nothing to search.
  {
    std::uint64_t max_product = 1;
    bool overflowed = false;
    for (int j = 0; j < s; ++j) {
      const auto factor = static_cast<std::uint64_t>(t_cap) + 1;
      if (max_product > std::numeric_limits<std::uint64_t>::max() / factor) {
        overflowed = true;  // astronomically large, certainly > n
        break;
      }
      max_product *= factor;
    }
    if (!overflowed && max_product <= n) {
      throw std::invalid_argument(
          "best_lower_bound: no admissible t within the cap");
    }
  }

  const auto cap = static_cast<std::uint64_t>(t_cap);
  std::uint64_t candidates = 1;
  for (int j = 0; j < s; ++j) {
    if (candidates > std::numeric_limits<std::uint64_t>::max() / cap) {
      throw std::invalid_argument(
          "best_lower_bound: candidate space too large to enumerate");
    }
    candidates *= cap;
  }

  struct Candidate {
    double log_bound = -std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;
    bool found = false;
  };

  const auto decode = [&](std::uint64_t flat, std::vector<int>& t) {
    for (int j = s - 1; j >= 0; --j) {
      t[static_cast<std::size_t>(j)] = static_cast<int>(flat % cap) + 1;
      flat /= cap;
    }
  };

  const std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(max_threads()),
      static_cast<std::size_t>(candidates));
  std::vector<Candidate> best_per_worker(std::max<std::size_t>(1, workers));
  detail::parallel_index_apply(
      best_per_worker.size(), [&](std::size_t w) {
        std::vector<int> t(static_cast<std::size_t>(s));
        Candidate best;
        for (std::uint64_t flat = w; flat < candidates;
             flat += best_per_worker.size()) {
          decode(flat, t);
          std::uint64_t product = 1;
          for (int tj : t) product *= static_cast<std::uint64_t>(tj) + 1;
          if (product <= n) continue;
          const double lb = log_bound_for(space, t);
          // Flat index order is lexicographic order, so preferring the
          // smaller index on ties keeps the result deterministic.
          if (!best.found || lb > best.log_bound ||
              (lb == best.log_bound && flat < best.index)) {
            best = {lb, flat, true};
          }
        }
        best_per_worker[w] = best;
      });

  Candidate overall;
  for (const Candidate& candidate : best_per_worker) {
    if (!candidate.found) continue;
    if (!overall.found || candidate.log_bound > overall.log_bound ||
        (candidate.log_bound == overall.log_bound &&
         candidate.index < overall.index)) {
      overall = candidate;
    }
  }
  if (!overall.found) {
    throw std::invalid_argument(
        "best_lower_bound: no admissible t within the cap");
  }

  std::vector<int> t(static_cast<std::size_t>(s));
  decode(overall.index, t);
  return lower_bound(space, t);
}

EcwtNecessityReport ecwt_necessity_diagnostic(
    const WeightedSpace& space, std::optional<bool> declared_bounded) {
  const int s = space.dimension();
  EcwtNecessityReport report;

  double exponent_sum = 0.0;
  double prefix_sup = 0.0;
  for (int j = 1; j <= s; ++j) {
    const double growth = space.a(j) * std::exp2(space.b(j));
    exponent_sum += growth;
    prefix_sup = std::max(prefix_sup, growth);
  }
  report.allones_log_bound =
      exponent_sum * std::log(space.omega()) - s * kLog64;

  using Bounded = EcwtNecessityReport::Bounded;
  if (declared_bounded.has_value()) {
    report.bounded = *declared_bounded ? Bounded::yes : Bounded::no;
  } else {
    const bool a_power = space.a_spec().kind == SequenceSpec::Kind::power;
    const bool b_power = space.b_spec().kind == SequenceSpec::Kind::power;
    if ((a_power && space.a_spec().gamma > 0.0) ||
        (b_power && space.b_spec().gamma > 0.0)) {
      report.bounded = Bounded::no;
    } else if (a_power && b_power) {
      report.bounded = Bounded::yes;
    } else {
      report.bounded = Bounded::unknown;
    }
  }

  if (report.bounded == Bounded::yes) {
    report.growth_sup = prefix_sup;
    report.log_eta = prefix_sup * std::log(space.omega()) - kLog64;
    report.eta = std::exp(*report.log_eta);
    report.obstruction_log_epsilon = s * *report.log_eta - kLog2;
    report.obstruction_log2_n = s;
  }
  return report;
}

}  // namespace hermquad
