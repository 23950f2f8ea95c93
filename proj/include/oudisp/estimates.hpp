#pragma once

#include <utility>

#include "oudisp/field.hpp"
#include "oudisp/propagator.hpp"

namespace oudisp {

inline constexpr double kDispTol = 1e-6;

struct DispersionRecord {
  double p = 2.0;
  double p_prime = 2.0;
  double t = 0.0;
  double lhs = 0.0;    // ||e^{-|·|²/4} f(·,t)||_{p'}
  double rhs = 0.0;    // Beckner constant · (4π|sin t|)^{-m(1/2-1/p')} · ||e^{-|·|²/4} φ||_p
  double ratio = 0.0;
};

struct UncertaintyRecord {
  cplx beta0;
  double s = 0.0;
  double a_max = 0.0;      // Re β(0)
  double b_max = 0.0;      // Re β(s)
  double product = 0.0;    // a_max · b_max · sin²s
  double threshold = 1.0 / 16.0;
};

/// Sharp Hausdorff–Young constant (p^{1/p}/p'^{1/p'})^{m/2}; 1 at p = 1, 2.
double hausdorff_young_constant(double p, int m);

/// Dispersive-bound datum: lhs/rhs/ratio at (p, t) for the given initial field.
DispersionRecord dispersive_report(const ComplexField& phi, double p,
                                   const TimePoint& t,
                                   FourierEngine engine = FourierEngine::CZT);

/// Envelope e^{(m/p')t} / (1 - e^{-2t})^{m(1/2 - 1/p')} of the friction-side
/// bound, with the abstract constant set to 1 (shape only).
double friction_bound_curve(double p, int m, double t);

/// Gaussian-family decay bookkeeping for the uncertainty threshold
/// a·b·sin²s ≥ 1/16.
UncertaintyRecord uncertainty_product(cplx beta0, double s);

/// TRUE iff a·b·sin²s ≥ 1/16 (the solution is forced to vanish).
bool hardy_predicate(double a, double b, double s);

/// Reduction (a, b, s) -> (a, 16π² b sin²s) whose plain Hardy test
/// a·b' ≥ π² matches hardy_predicate.
std::pair<double, double> hardy_reduction(double a, double b, double s);

}  // namespace oudisp
