#include "mgof/multi_index.hpp"

#include <algorithm>

namespace mgof {

std::string MultiIndex::to_string(std::size_t min_dim) const {
  std::size_t d = std::max(min_dim, entries_.size());
  if (d == 0) d = 1;
  std::string out;
  for (std::size_t k = 0; k < d; ++k) {
    if (k) out += ' ';
    out += std::to_string(coord(k));
  }
  return out;
}

}  // namespace mgof
