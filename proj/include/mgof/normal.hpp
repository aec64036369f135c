#pragma once

namespace mgof {

// Standard normal distribution function Phi(x).
double norm_cdf(double x);

// Inverse of norm_cdf on (0,1). Accurate to ~1e-15 relative in the bulk;
// throws std::domain_error outside (0,1).
double norm_quantile(double p);

// Upper-alpha quantile H^(alpha): Phi(H) = 1 - alpha.
double upper_quantile(double alpha);

}  // namespace mgof
