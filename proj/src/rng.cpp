#include "mgof/rng.hpp"

#include "mgof/normal.hpp"

namespace mgof {

double RngStream::normal() { return norm_quantile(uniform01()); }

}  // namespace mgof
