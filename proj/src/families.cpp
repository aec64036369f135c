#include "mgof/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "mgof/util.hpp"

namespace mgof {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_additive(FamilyVariant v) {
  return v == FamilyVariant::SobolevSum || v == FamilyVariant::SobolevEuclid;
}

bool is_anova(FamilyVariant v) {
  return v == FamilyVariant::AnovaExact || v == FamilyVariant::AnovaAtMost;
}

// Contribution of coordinate k holding value v. Additive variants return a
// summand, product variants a factor; v = 0 contributes the identity.
double contribution(const CoefficientFamily& f, std::size_t k, int v) {
  double av = std::abs(static_cast<double>(v));
  switch (f.variant) {
    case FamilyVariant::SobolevSum:
      return v == 0 ? 0.0 : std::pow(kTwoPi * av, 2.0 * f.sigma);
    case FamilyVariant::SobolevEuclid:
      return (kTwoPi * av) * (kTwoPi * av);
    case FamilyVariant::TensorSobolev:
    case FamilyVariant::AnovaExact:
    case FamilyVariant::AnovaAtMost:
      return v == 0 ? 1.0 : std::pow(kTwoPi * av, f.sigma);
    case FamilyVariant::AnalyticStrip:
      return std::cosh(kTwoPi * f.kappa * av);
    case FamilyVariant::SloanWozniakowski:
      return v == 0 ? 1.0
                    : std::pow(static_cast<double>(k + 1), f.s) *
                          std::pow(kTwoPi * av, f.sigma);
  }
  return 0.0;
}

double combine(const CoefficientFamily& f, double acc, double part) {
  return is_additive(f.variant) ? acc + part : acc * part;
}

double identity_acc(const CoefficientFamily& f) {
  return is_additive(f.variant) ? 0.0 : 1.0;
}

// Maps the accumulated value to the coefficient itself.
double finalize(const CoefficientFamily& f, double acc) {
  switch (f.variant) {
    case FamilyVariant::SobolevSum:
    case FamilyVariant::AnalyticStrip:
      return std::sqrt(acc);
    case FamilyVariant::SobolevEuclid:
      return std::pow(acc, f.sigma / 2.0);
    default:
      return acc;
  }
}

// Largest coordinate index (1-based) that can hold a nonzero entry below
// cutoff C; only Sloan-Wozniakowski restricts this.
std::size_t active_dims(const CoefficientFamily& f, double C,
                        std::size_t cap) {
  if (f.variant != FamilyVariant::SloanWozniakowski) {
    return static_cast<std::size_t>(f.d);
  }
  std::size_t j = 0;
  while (contribution(f, j, 1) < C) {
    ++j;
    if (j > cap) {
      throw ResourceLimitError(
          cap, "enumerate_below: active dimension count exceeds cap " +
                   std::to_string(cap));
    }
  }
  return j;
}

class Enumerator {
 public:
  Enumerator(const CoefficientFamily& f, double C, std::size_t cap)
      : fam_(f), cutoff_(C), cap_(cap) {
    dims_ = active_dims(f, C, cap);
    current_.assign(dims_, 0);
  }

  IndexSet run() {
    dfs(0, identity_acc(fam_), 0);
    IndexSet out;
    out.cutoff = cutoff_;
    out.dim = std::max<std::size_t>(dims_, 1);
    out.members = std::move(members_);
    std::sort(out.members.begin(), out.members.end(),
              [](const IndexSetMember& a, const IndexSetMember& b) {
                if (a.coefficient != b.coefficient)
                  return a.coefficient < b.coefficient;
                return a.index < b.index;
              });
    return out;
  }

 private:
  void emit(double acc, int support) {
    if (!member_ok(support)) return;
    double c = finalize(fam_, acc);
    if (!(c < cutoff_)) return;  // strict inequality defines N(C)
    if (members_.size() >= cap_) {
      throw ResourceLimitError(
          cap_, "enumerate_below: N(C) exceeds member cap " +
                    std::to_string(cap_));
    }
    members_.push_back({MultiIndex(current_), c});
  }

  bool member_ok(int support) const {
    switch (fam_.variant) {
      case FamilyVariant::SobolevSum:
      case FamilyVariant::SobolevEuclid:
        return support > 0;
      case FamilyVariant::AnovaExact:
        return support == fam_.m;
      case FamilyVariant::AnovaAtMost:
        return support <= fam_.m;
      default:
        return true;
    }
  }

  void dfs(std::size_t k, double acc, int support) {
    if (k == dims_) {
      emit(acc, support);
      return;
    }
    // Anova feasibility: remaining coordinates cannot reach support m.
    if (fam_.variant == FamilyVariant::AnovaExact &&
        support + static_cast<int>(dims_ - k) < fam_.m) {
      return;
    }
    dfs(k + 1, acc, support);
    if (is_anova(fam_.variant) && support >= fam_.m) return;
    for (int v = 1;; ++v) {
      double acc2 = combine(fam_, acc, contribution(fam_, k, v));
      // Relaxed prune; the leaf re-checks c < C exactly.
      if (!(finalize(fam_, acc2) < cutoff_ * (1.0 + 1e-12))) break;
      current_[k] = v;
      dfs(k + 1, acc2, support + 1);
      current_[k] = -v;
      dfs(k + 1, acc2, support + 1);
      current_[k] = 0;
    }
  }

  const CoefficientFamily& fam_;
  double cutoff_;
  std::size_t cap_;
  std::size_t dims_ = 0;
  std::vector<int> current_;
  std::vector<IndexSetMember> members_;
};

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out *= static_cast<double>(n - k + i) / i;
  return out;
}

}  // namespace

CoefficientFamily CoefficientFamily::sobolev_sum(int d, double sigma) {
  CoefficientFamily f{FamilyVariant::SobolevSum, d, sigma};
  f.validate();
  return f;
}
CoefficientFamily CoefficientFamily::sobolev_euclid(int d, double sigma) {
  CoefficientFamily f{FamilyVariant::SobolevEuclid, d, sigma};
  f.validate();
  return f;
}
CoefficientFamily CoefficientFamily::tensor_sobolev(int d, double sigma) {
  CoefficientFamily f{FamilyVariant::TensorSobolev, d, sigma};
  f.validate();
  return f;
}
CoefficientFamily CoefficientFamily::anova_exact(int d, int m, double sigma) {
  CoefficientFamily f{FamilyVariant::AnovaExact, d, sigma};
  f.m = m;
  f.validate();
  return f;
}
CoefficientFamily CoefficientFamily::anova_at_most(int d, int m,
                                                   double sigma) {
  CoefficientFamily f{FamilyVariant::AnovaAtMost, d, sigma};
  f.m = m;
  f.validate();
  return f;
}
CoefficientFamily CoefficientFamily::analytic_strip(int d, double kappa) {
  CoefficientFamily f{FamilyVariant::AnalyticStrip, d};
  f.sigma = 0.0;
  f.kappa = kappa;
  f.validate();
  return f;
}
CoefficientFamily CoefficientFamily::sloan_wozniakowski(double sigma,
                                                        double s) {
  CoefficientFamily f{FamilyVariant::SloanWozniakowski, 0, sigma};
  f.s = s;
  f.validate();
  return f;
}

void CoefficientFamily::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("CoefficientFamily: " + msg);
  };
  switch (variant) {
    case FamilyVariant::SobolevSum:
    case FamilyVariant::SobolevEuclid:
    case FamilyVariant::TensorSobolev:
      if (d < 1) fail("d must be >= 1");
      if (!(sigma > 0)) fail("sigma must be positive");
      break;
    case FamilyVariant::AnovaExact:
    case FamilyVariant::AnovaAtMost:
      if (d < 1) fail("d must be >= 1");
      if (!(sigma > 0)) fail("sigma must be positive");
      if (m < 0 || m > d) fail("m must satisfy 0 <= m <= d");
      break;
    case FamilyVariant::AnalyticStrip:
      if (d < 1) fail("d must be >= 1");
      if (!(kappa > 0)) fail("kappa must be positive");
      break;
    case FamilyVariant::SloanWozniakowski:
      if (!(sigma > 0)) fail("sigma must be positive");
      if (!(s > 0)) fail("s must be positive");
      break;
  }
}

std::string CoefficientFamily::variant_name() const {
  switch (variant) {
    case FamilyVariant::SobolevSum: return "sobolev-sum";
    case FamilyVariant::SobolevEuclid: return "sobolev-euclid";
    case FamilyVariant::TensorSobolev: return "tensor-sobolev";
    case FamilyVariant::AnovaExact: return "anova-exact";
    case FamilyVariant::AnovaAtMost: return "anova-at-most";
    case FamilyVariant::AnalyticStrip: return "analytic-strip";
    case FamilyVariant::SloanWozniakowski: return "sloan-wozniakowski";
  }
  return "?";
}

FamilyVariant variant_from_name(const std::string& name) {
  if (name == "sobolev-sum") return FamilyVariant::SobolevSum;
  if (name == "sobolev-euclid") return FamilyVariant::SobolevEuclid;
  if (name == "tensor-sobolev") return FamilyVariant::TensorSobolev;
  if (name == "anova-exact") return FamilyVariant::AnovaExact;
  if (name == "anova-at-most") return FamilyVariant::AnovaAtMost;
  if (name == "analytic-strip") return FamilyVariant::AnalyticStrip;
  if (name == "sloan-wozniakowski") return FamilyVariant::SloanWozniakowski;
  throw std::invalid_argument("unknown family variant '" + name + "'");
}

double coefficient(const CoefficientFamily& family, const MultiIndex& l) {
  family.validate();
  if (family.variant != FamilyVariant::SloanWozniakowski &&
      l.stored_dim() > static_cast<std::size_t>(family.d)) {
    throw std::domain_error("coefficient: index has " +
                            std::to_string(l.stored_dim()) +
                            " coordinates but the lattice is Z^" +
                            std::to_string(family.d));
  }
  if (is_additive(family.variant) && l.is_zero()) {
    throw std::domain_error(
        "coefficient: zero index is excluded from the lattice Z^d \\ {0}");
  }
  std::size_t support = l.support();
  if (family.variant == FamilyVariant::AnovaExact &&
      support != static_cast<std::size_t>(family.m)) {
    throw std::domain_error("coefficient: index support " +
                            std::to_string(support) +
                            " differs from the interaction order m = " +
                            std::to_string(family.m));
  }
  if (family.variant == FamilyVariant::AnovaAtMost &&
      support > static_cast<std::size_t>(family.m)) {
    throw std::domain_error("coefficient: index support " +
                            std::to_string(support) +
                            " exceeds the interaction order m = " +
                            std::to_string(family.m));
  }
  double acc = identity_acc(family);
  for (std::size_t k = 0; k < l.stored_dim(); ++k) {
    int v = l.coord(k);
    if (v == 0) continue;
    acc = combine(family, acc, contribution(family, k, v));
  }
  return finalize(family, acc);
}

double min_coefficient(const CoefficientFamily& family) {
  family.validate();
  switch (family.variant) {
    case FamilyVariant::SobolevSum:
    case FamilyVariant::SobolevEuclid:
      return std::pow(kTwoPi, family.sigma);
    case FamilyVariant::AnovaExact:
      return std::pow(kTwoPi, family.sigma * family.m);
    default:
      return 1.0;  // the zero index
  }
}

bool lattice_finite(const CoefficientFamily& family) {
  return is_anova(family.variant) && family.m == 0;
}

IndexSet enumerate_below(const CoefficientFamily& family, double C,
                         std::size_t cap) {
  family.validate();
  if (!(C > 0)) throw std::invalid_argument("enumerate_below: C must be > 0");
  return Enumerator(family, C, cap).run();
}

std::optional<double> asymptotic_count(const CoefficientFamily& family,
                                       double C) {
  family.validate();
  if (!(C > 0)) return std::nullopt;
  double d = family.d;
  double sg = family.sigma;
  switch (family.variant) {
    case FamilyVariant::SobolevSum: {
      double logJ = d * std::lgamma(1.0 + 1.0 / (2.0 * sg)) -
                    d * std::log(std::numbers::pi) -
                    std::lgamma(1.0 + d / (2.0 * sg));
      return std::pow(C, d / sg) * std::exp(logJ);
    }
    case FamilyVariant::SobolevEuclid: {
      double logJ = -d * std::log(2.0) -
                    0.5 * d * std::log(std::numbers::pi) -
                    std::lgamma(1.0 + d / 2.0);
      return std::pow(C, d / sg) * std::exp(logJ);
    }
    case FamilyVariant::TensorSobolev: {
      if (C <= 1.0) return std::nullopt;
      return std::pow(C, 1.0 / sg) * std::pow(std::log(C), d - 1.0) /
             (std::pow(std::numbers::pi, d) * std::pow(sg, d - 1.0) *
              std::tgamma(d));
    }
    case FamilyVariant::AnovaExact:
    case FamilyVariant::AnovaAtMost: {
      if (family.m == 0 || C <= 1.0) return std::nullopt;
      double m = family.m;
      return binomial(family.d, family.m) * std::pow(C, 1.0 / sg) *
             std::pow(std::log(C), m - 1.0) /
             (std::pow(std::numbers::pi, m) * std::pow(sg, m - 1.0) *
              std::tgamma(m));
    }
    case FamilyVariant::AnalyticStrip: {
      if (C <= 1.0) return std::nullopt;
      return std::pow(2.0 * std::log(C) / (std::numbers::pi * family.kappa),
                      d) /
             std::tgamma(d + 1.0);
    }
    case FamilyVariant::SloanWozniakowski:
      return std::nullopt;  // constants A_i, B_i are not numeric
  }
  return std::nullopt;
}

std::string IndexSet::to_csv() const {
  std::string out = "# mgof index-set schema_version=1\nindex,coefficient\n";
  char buf[64];
  for (const auto& mem : members) {
    out += mem.index.to_string(dim);
    std::snprintf(buf, sizeof buf, ",%.17g\n", mem.coefficient);
    out += buf;
  }
  return out;
}

}  // namespace mgof
