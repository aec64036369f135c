#include "mgof/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mgof/util.hpp"

namespace mgof {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}  // namespace

BasisKind basis_from_name(const std::string& name) {
  if (name == "fourier") return BasisKind::Fourier;
  if (name == "haar") return BasisKind::Haar;
  if (name == "walsh") return BasisKind::Walsh;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

std::string basis_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::Fourier: return "fourier";
    case BasisKind::Haar: return "haar";
    case BasisKind::Walsh: return "walsh";
  }
  return "?";
}

double fourier_eval_1d(int j, double u) {
  if (j == 0) return 1.0;
  double arg = std::fmod(std::abs(static_cast<double>(j)) * u, 1.0);
  return j > 0 ? kSqrt2 * std::cos(kTwoPi * arg)
               : kSqrt2 * std::sin(kTwoPi * arg);
}

double fourier_eval(const MultiIndex& l, const DesignPoint& t) {
  double out = 1.0;
  for (std::size_t k = 0; k < l.stored_dim(); ++k) {
    int j = l.coord(k);
    if (j != 0) out *= fourier_eval_1d(j, t.coord(k));
  }
  return out;
}

double haar_eval_1d(HaarIndex1D idx, double u) {
  if (idx.level < 0) return 1.0;
  double amp = std::exp2(0.5 * idx.level);
  double x = std::ldexp(u, idx.level) - (idx.shift - 1);
  if (x < 0.0 || x > 1.0) return 0.0;
  if (x < 0.5) return amp;
  if (x < 1.0) return -amp;
  // x == 1: the support's right edge. Right continuity puts the value in
  // the next cell except at u = 1, which takes the left limit.
  return u >= 1.0 ? -amp : 0.0;
}

double haar_eval(std::span<const HaarIndex1D> idx, const DesignPoint& t) {
  double out = 1.0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out *= haar_eval_1d(idx[k], t.coord(k));
    if (out == 0.0) return 0.0;
  }
  return out;
}

namespace {

// Rademacher function r_b on [0,1]: sign of the b-th dyadic digit, right
// continuous, left limit at u = 1.
int rademacher_sign(unsigned b, double u) {
  double scaled = std::ldexp(u, static_cast<int>(b) + 1);
  auto cell = static_cast<unsigned long long>(scaled);
  if (u >= 1.0) cell = (1ULL << (b + 1)) - 1;
  return (cell & 1ULL) ? -1 : 1;
}

}  // namespace

double walsh_eval_1d(unsigned j, double u) {
  int sign = 1;
  for (unsigned b = 0; j != 0; ++b, j >>= 1) {
    if (j & 1U) sign *= rademacher_sign(b, u);
  }
  return static_cast<double>(sign);
}

double walsh_eval(std::span<const unsigned> j, const DesignPoint& t) {
  double out = 1.0;
  for (std::size_t k = 0; k < j.size(); ++k) out *= walsh_eval_1d(j[k], t.coord(k));
  return out;
}

unsigned fold_index(int l) {
  if (l == 0) return 0;
  return l > 0 ? 2U * static_cast<unsigned>(l) - 1U
               : 2U * static_cast<unsigned>(-l);
}

HaarIndex1D haar_index_from_linear(unsigned m) {
  if (m == 0) return {-1, 0};
  int level = 0;
  while ((2U << level) <= m) ++level;  // level = floor(log2(m))
  return {level, static_cast<int>(m - (1U << level)) + 1};
}

double basis_eval(BasisKind kind, const MultiIndex& l, const DesignPoint& t) {
  switch (kind) {
    case BasisKind::Fourier:
      return fourier_eval(l, t);
    case BasisKind::Haar: {
      double out = 1.0;
      for (std::size_t k = 0; k < l.stored_dim(); ++k) {
        int e = l.coord(k);
        if (e == 0) continue;
        out *= haar_eval_1d(haar_index_from_linear(fold_index(e)), t.coord(k));
        if (out == 0.0) return 0.0;
      }
      return out;
    }
    case BasisKind::Walsh: {
      double out = 1.0;
      for (std::size_t k = 0; k < l.stored_dim(); ++k) {
        int e = l.coord(k);
        if (e != 0) out *= walsh_eval_1d(fold_index(e), t.coord(k));
      }
      return out;
    }
  }
  return 0.0;
}

GramCheck gram_identity_check(const IndexSet& members, const DesignPoint& t,
                              BasisKind kind) {
  NeumaierSum sum;
  for (const auto& mem : members.members) {
    double v = basis_eval(kind, mem.index, t);
    sum.add(v * v);
  }
  GramCheck out;
  out.sum = sum.value();
  out.deviation = std::abs(out.sum - static_cast<double>(members.size()));
  return out;
}

}  // namespace mgof
