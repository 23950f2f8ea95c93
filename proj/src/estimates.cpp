#include "oudisp/estimates.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "oudisp/errors.hpp"

namespace oudisp {

namespace {

double conjugate_exponent(double p) {
  return p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0);
}

void check_p(double p) {
  if (!(p >= 1.0 && p <= 2.0))
    throw OutOfRange("p=" + std::to_string(p) + " outside [1,2]");
}

}  // namespace

double hausdorff_young_constant(double p, int m) {
  check_p(p);
  if (p == 1.0 || p == 2.0) return 1.0;  // p'^{1/p'} -> 1 as p' -> inf
  const double pp = conjugate_exponent(p);
  return std::pow(std::pow(p, 1.0 / p) / std::pow(pp, 1.0 / pp), 0.5 * m);
}

DispersionRecord dispersive_report(const ComplexField& phi, double p,
                                   const TimePoint& t, FourierEngine engine) {
  check_p(p);
  if (t.kind != TimePoint::Kind::REGULAR)
    throw SingularTime("dispersive estimate requires t != k*pi");
  const int m = phi.grid().m;
  const double pp = conjugate_exponent(p);

  const ComplexField f = propagate(phi, t, PropagationMethod::CHIRP_FT, engine);
  DispersionRecord rec;
  rec.p = p;
  rec.p_prime = pp;
  rec.t = t.t_raw;
  rec.lhs = norm_lp(to_psi_gauge(f), pp);
  const double decay =
      std::pow(4.0 * kPi * std::abs(t.sine()), -m * (0.5 - (p == 1.0 ? 0.0 : 1.0 / pp)));
  rec.rhs = hausdorff_young_constant(p, m) * decay * norm_lp(to_psi_gauge(phi), p);
  rec.ratio = rec.lhs / rec.rhs;
  return rec;
}

double friction_bound_curve(double p, int m, double t) {
  check_p(p);
  if (!(t > 0.0)) throw OutOfRange("friction_bound_curve requires t > 0");
  const double inv_pp = p == 1.0 ? 0.0 : 1.0 - 1.0 / p;
  return std::exp(m * inv_pp * t) /
         std::pow(1.0 - std::exp(-2.0 * t), m * (0.5 - inv_pp));
}

UncertaintyRecord uncertainty_product(cplx beta0, double s) {
  const GaussianState s0(1, beta0);
  const TimePoint tp(s);
  const GaussianState st = propagate_gaussian(s0, tp);  // throws SingularTime at odd pi
  UncertaintyRecord rec;
  rec.beta0 = beta0;
  rec.s = s;
  rec.a_max = beta0.real();
  rec.b_max = st.beta.real();
  const double sn = std::sin(s);
  rec.product = rec.a_max * rec.b_max * sn * sn;
  return rec;
}

bool hardy_predicate(double a, double b, double s) {
  if (!(a > 0.0) || !(b > 0.0))
    throw OutOfRange("hardy_predicate requires a > 0 and b > 0");
  const double sn = std::sin(s);
  return a * b * sn * sn >= 1.0 / 16.0;
}

std::pair<double, double> hardy_reduction(double a, double b, double s) {
  if (!(a > 0.0) || !(b > 0.0))
    throw OutOfRange("hardy_reduction requires a > 0 and b > 0");
  const double sn = std::sin(s);
  return {a, 16.0 * kPi * kPi * b * sn * sn};
}

}  // namespace oudisp
