#pragma once

#include <vector>

#include "oudisp/field.hpp"

namespace oudisp {

inline constexpr int kMaxHermiteOrder = 128;  // per axis

/// Tensor coefficients in the probabilists' Hermite basis He_k, with
/// normalization <He_j, He_k>_γ = k! δ_jk.  Layout matches the grid:
/// axis 0 slowest, (K+1)^m entries.
struct HermiteCoeffs {
  GridSpec grid;  // analysis grid; synthesis target
  int K = 0;
  std::vector<cplx> coeffs;
  bool truncation_warning = false;
  double tail_fraction = 0.0;  // energy share of the outermost band
};

/// He_k(x) by the three-term recurrence He_{k+1} = x He_k - k He_{k-1}.
double hermite_value(int k, double x);

/// φ = ∏_a He_{k_a}(x_a) sampled on the grid (φ gauge).
ComplexField hermite_field(const GridSpec& grid, const std::vector<int>& k);

/// dγ-weighted trapezoid inner products against He_k, k ≤ K per axis.
HermiteCoeffs hermite_analyze(const ComplexField& phi, int K);

/// f(x) = Σ_k c_k e^{-i|k|t} ∏ He_{k_a}(x_a); defined for every real t.
ComplexField hermite_synthesize(const HermiteCoeffs& c, double t);

int default_hermite_order(int m);  // 64 / 32 / 16 per axis for m = 1 / 2 / 3

}  // namespace oudisp
