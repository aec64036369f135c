#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgof/multi_index.hpp"

namespace mgof {

enum class FamilyVariant {
  SobolevSum,         // c_l^2 = sum_k |2 pi l_k|^(2 sigma),  Z^d \ {0}
  SobolevEuclid,      // c_l^2 = (sum_k (2 pi l_k)^2)^sigma,  Z^d \ {0}
  TensorSobolev,      // c_l = prod_{l_k != 0} |2 pi l_k|^sigma,  Z^d
  AnovaExact,         // tensor coefficients on {l : #supp(l) = m}
  AnovaAtMost,        // tensor coefficients on {l : #supp(l) <= m}
  AnalyticStrip,      // c_l^2 = prod_k cosh(2 pi kappa l_k),  Z^d
  SloanWozniakowski,  // c_l = prod_{l_j != 0} j^s |2 pi l_j|^sigma,  Z^inf_*
};

struct CoefficientFamily {
  FamilyVariant variant = FamilyVariant::SobolevSum;
  int d = 1;           // ambient dimension; ignored for SloanWozniakowski
  double sigma = 1.0;  // smoothness; unused for AnalyticStrip
  double s = 0.0;      // coordinate weight exponent, SloanWozniakowski only
  double kappa = 0.0;  // strip half-width, AnalyticStrip only
  int m = 0;           // interaction order, Anova variants only

  static CoefficientFamily sobolev_sum(int d, double sigma);
  static CoefficientFamily sobolev_euclid(int d, double sigma);
  static CoefficientFamily tensor_sobolev(int d, double sigma);
  static CoefficientFamily anova_exact(int d, int m, double sigma);
  static CoefficientFamily anova_at_most(int d, int m, double sigma);
  static CoefficientFamily analytic_strip(int d, double kappa);
  static CoefficientFamily sloan_wozniakowski(double sigma, double s);

  void validate() const;  // throws std::invalid_argument
  std::string variant_name() const;
};

FamilyVariant variant_from_name(const std::string& name);

struct IndexSetMember {
  MultiIndex index;
  double coefficient = 0.0;
};

// The finite set N(C) = {l : c_l < C}, sorted by (coefficient, index).
struct IndexSet {
  double cutoff = 0.0;
  std::size_t dim = 0;  // coordinate count used when printing indices
  std::vector<IndexSetMember> members;

  std::size_t size() const { return members.size(); }
  std::string to_csv() const;
};

// A multi-index paired with a kernel weight.
struct WeightedIndex {
  MultiIndex index;
  double weight = 0.0;
};

inline constexpr std::size_t kDefaultMemberCap = 10'000'000;

// c_l for an index in the family's lattice; throws std::domain_error when
// the index lies outside the lattice.
double coefficient(const CoefficientFamily& family, const MultiIndex& l);

// Smallest coefficient over the lattice.
double min_coefficient(const CoefficientFamily& family);

// True when the whole lattice is finite (Anova variants with m = 0).
bool lattice_finite(const CoefficientFamily& family);

// Exact enumeration of N(C). Throws ResourceLimitError past `cap` members.
IndexSet enumerate_below(const CoefficientFamily& family, double C,
                         std::size_t cap = kDefaultMemberCap);

// Leading-order approximation of N(C); empty when the literature supplies
// no numeric constants (Sloan-Wozniakowski) or the formula is undefined.
std::optional<double> asymptotic_count(const CoefficientFamily& family,
                                       double C);

}  // namespace mgof
