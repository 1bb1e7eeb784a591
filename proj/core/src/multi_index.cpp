#include "hermquad/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermquad {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  }
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: entries must be >= 0");
  }
}

MultiIndex MultiIndex::zero(int dimension) {
  if (dimension < 1) {
    throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  }
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

bool MultiIndex::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int e) { return e == 0; });
}

int MultiIndex::max_entry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

}  // namespace hermquad
