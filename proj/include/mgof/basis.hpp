#pragma once

#include <span>
#include <string>
#include <vector>

#include "mgof/families.hpp"
#include "mgof/multi_index.hpp"

namespace mgof {

// A design point t in [0,1]^d.
struct DesignPoint {
  std::vector<double> coords;

  double coord(std::size_t k) const {
    return k < coords.size() ? coords[k] : 0.0;
  }
  std::size_t dim() const { return coords.size(); }
};

enum class BasisKind { Fourier, Haar, Walsh };

BasisKind basis_from_name(const std::string& name);
std::string basis_name(BasisKind kind);

// 1-variable Fourier: phi_0 = 1, phi_j = sqrt(2) cos(2 pi j u) for j > 0,
// phi_{-j} = sqrt(2) sin(2 pi j u). The trig argument is reduced mod 1.
double fourier_eval_1d(int j, double u);
double fourier_eval(const MultiIndex& l, const DesignPoint& t);

// 1-variable Haar: level -1 denotes the constant function; level j >= 0 with
// shift k in 1..2^j is 2^{j/2} h(2^j u - (k-1)) for the mother h = +1 on
// [0,1/2), -1 on [1/2,1). Right-continuous at breakpoints; u = 1 evaluates
// as the left limit.
struct HaarIndex1D {
  int level = -1;
  int shift = 0;
};
double haar_eval_1d(HaarIndex1D idx, double u);
double haar_eval(std::span<const HaarIndex1D> idx, const DesignPoint& t);

// 1-variable Walsh in Paley (dyadic) ordering; w_0 = 1 and |w_j| = 1.
double walsh_eval_1d(unsigned j, double u);
double walsh_eval(std::span<const unsigned> j, const DesignPoint& t);

// Fold of the signed Fourier lattice onto 0,1,2,...: 0 -> 0, +j -> 2j-1,
// -j -> 2j. Lets one IndexSet drive all three bases.
unsigned fold_index(int l);
// Linear position m >= 1 to (level, shift) in the natural Haar order;
// m = 0 is the constant.
HaarIndex1D haar_index_from_linear(unsigned m);

double basis_eval(BasisKind kind, const MultiIndex& l, const DesignPoint& t);

struct GramCheck {
  double sum = 0.0;        // sum of phi_l^2(t) over the set
  double deviation = 0.0;  // |sum - N|
};

// Diagnostic for the sum identity sum phi_l^2 = N; exact (up to rounding)
// for sign-symmetric Fourier sets and for any Walsh set.
GramCheck gram_identity_check(const IndexSet& members, const DesignPoint& t,
                              BasisKind kind);

}  // namespace mgof
