#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace mgof {

// A multi-index l = (l_1,...,l_d) embedded in Z^infty by dropping trailing
// zeros; the default-constructed value is the zero index.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
  }

  const std::vector<int>& entries() const { return entries_; }

  // Entry at position k (0-based); zero beyond the stored length.
  int coord(std::size_t k) const {
    return k < entries_.size() ? entries_[k] : 0;
  }

  // Number of nonzero entries.
  std::size_t support() const {
    std::size_t j = 0;
    for (int e : entries_)
      if (e != 0) ++j;
    return j;
  }

  // Position just past the last nonzero entry.
  std::size_t stored_dim() const { return entries_.size(); }

  bool is_zero() const { return entries_.empty(); }

  // Entries as "l1 l2 ... ld", padded with zeros up to min_dim.
  std::string to_string(std::size_t min_dim = 0) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

}  // namespace mgof
