#pragma once

#include <vector>

#include "oudisp/field.hpp"
#include "oudisp/fourier.hpp"
#include "oudisp/hermite.hpp"

namespace oudisp {

/// Time reduced mod 2π into J⁺ = (0,π) or J⁻ = (π,2π).  Times within
/// tau_sing of 2πZ are the identity shortcut; within tau_sing of the odd
/// multiples of π the closed formulas are singular.
struct TimePoint {
  enum class Kind { IDENTITY, REGULAR, SINGULAR };
  enum class Branch { J_PLUS, J_MINUS };

  static constexpr double kTauSing = 1e-6;

  double t_raw = 0.0;
  double t_red = 0.0;  // in [0, 2π)
  int k_period = 0;    // full 2π periods removed
  Kind kind = Kind::IDENTITY;
  Branch branch = Branch::J_PLUS;

  explicit TimePoint(double t);

  double sine() const;       // sin(t_red), signed
  double cotangent() const;  // cos(t_red)/sin(t_red)
};

enum class PropagationMethod { CHIRP_FT, QUADRATURE, HERMITE };
enum class OscillatorRoute { GAUGE, KERNEL };

/// e^{imt/2} / (e^{iπm/4} (sin t)^{m/2}) on J⁺, with e^{i3πm/4} |sin t|^{m/2}
/// on J⁻ (principal positive roots).
cplx branch_prefactor(const TimePoint& t, int m);

/// e^{it𝓛}φ for 𝓛 = Δ - <x,∇>.  CHIRP_FT is the gauge/chirp/scaled-Fourier
/// factorization, QUADRATURE evaluates the oscillatory integral directly on
/// the grid, HERMITE goes through the spectral expansion (valid at every t,
/// including t ∈ πZ).
ComplexField propagate(const ComplexField& phi, const TimePoint& t,
                       PropagationMethod method,
                       FourierEngine engine = FourierEngine::CZT,
                       int hermite_order = 0);

/// Closed-form image of an isotropic Gaussian:
///   β(t) = 1/(16 (β₀ - i cot t/4) sin²t) - i cot t/4
/// with the matching amplitude; Re β(t) > 0 always.
GaussianState propagate_gaussian(const GaussianState& s0, const TimePoint& t);

/// e^{itH} for H = Δ - |x|²/4, either through the e^{it𝓛} gauge bridge or
/// through the chirp/scaled-Fourier kernel formula.
ComplexField oscillator_propagate(const ComplexField& u0, const TimePoint& t,
                                  OscillatorRoute route,
                                  FourierEngine engine = FourierEngine::CZT);

/// Max residual of i h_t + Δh - |∇h|² = -|x|²/4 over the grid for the
/// quadratic ansatz h = A|x|² + Bt.  The exact coefficients A = 1/4,
/// B = im/2 cancel identically.
double riccati_residual_quadratic(const GridSpec& grid,
                                  const std::vector<double>& t_samples,
                                  cplx A, cplx B);
double riccati_residual(const GridSpec& grid, const std::vector<double>& t_samples);

}  // namespace oudisp
