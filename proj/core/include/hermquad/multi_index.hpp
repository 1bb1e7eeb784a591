#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace hermquad {

/// A vector of non-negative integer orders, one per coordinate.
/// Dimension is fixed at construction and is always >= 1.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);

  /// All-zero index of the given dimension.
  static MultiIndex zero(int dimension);

  int dimension() const { return static_cast<int>(entries_.size()); }
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_zero() const;
  int max_entry() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

}  // namespace hermquad
