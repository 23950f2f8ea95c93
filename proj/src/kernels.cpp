#include "oudisp/kernels.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "oudisp/common.hpp"

namespace oudisp {

HormanderKernel::HormanderKernel(const SystemSpec& sys, double t) : m_(sys.m) {
  HypoReport rep = hypoellipticity_check(sys, t);
  if (!rep.hypoelliptic)
    throw NotHypoelliptic("Q(t) is singular at t=" + std::to_string(t));
  Qt_ = rep.Qt;
  etB_ = matrix_exp(t * sys.B);
  Qt_inv_ = Qt_.ldlt().solve(Eigen::MatrixXd::Identity(m_, m_));
  log_pref_ = -0.5 * m_ * std::log(4.0 * kPi) - 0.5 * std::log(rep.det_Qt);
  min_width_ = std::sqrt(2.0 * rep.min_eig);
}

double HormanderKernel::operator()(const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& y) const {
  const Eigen::VectorXd r = y - etB_ * x;
  const double q = r.dot(Qt_inv_ * r);
  return std::exp(log_pref_ - 0.25 * q);
}

double hormander_kernel(const SystemSpec& sys, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y, double t) {
  return HormanderKernel(sys, t)(x, y);
}

double kolmogorov_kernel(int n, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                         const Eigen::VectorXd& xb, const Eigen::VectorXd& yb,
                         double t) {
  if (n < 1) throw OutOfRange("kolmogorov_kernel requires n >= 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw OutOfRange("kolmogorov_kernel requires t > 0");
  if (x.size() != n || y.size() != n || xb.size() != n || yb.size() != n)
    throw OutOfRange("kolmogorov_kernel arguments must lie in R^n");
  const double pref = std::pow(3.0, 0.5 * n) * std::pow(kTwoPi, -n) * std::pow(t, -2.0 * n);
  const double q1 = (x - xb).squaredNorm();
  const double q2 = ((y - yb) / t + 0.5 * (x + xb)).squaredNorm();
  return pref * std::exp(-(q1 + 12.0 * q2) / (4.0 * t));
}

double mehler_kernel(double omega, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& y, double t) {
  if (!(omega > 0.0)) throw OutOfRange("mehler_kernel requires omega > 0");
  if (!(t > 0.0) || !std::isfinite(t)) throw OutOfRange("mehler_kernel requires t > 0");
  if (x.size() != y.size()) throw OutOfRange("mehler_kernel points must share a dimension");
  const int m = static_cast<int>(x.size());
  const double r = std::sqrt(omega);
  const double sh = std::sinh(2.0 * t * r);
  const double pref = std::pow(4.0 * kPi, -0.5 * m) * std::exp(m * t * r) *
                      std::pow(2.0 * r / sh, 0.5 * m);
  const double q = (std::exp(t * r) * y - std::exp(-t * r) * x).squaredNorm();
  return pref * std::exp(-0.5 * r / sh * q);
}

ComplexField heat_evolve(const SystemSpec& sys, const ComplexField& phi, double t) {
  if (phi.gauge() != Gauge::PHI) throw GaugeMismatch("heat_evolve expects a φ-gauge field");
  const GridSpec& g = phi.grid();
  if (g.m != sys.m) throw OutOfRange("grid dimension does not match system dimension");
  HormanderKernel G(sys, t);
  if (G.min_width() < 3.0 * g.h())
    throw GridTooCoarse("kernel width " + std::to_string(G.min_width()) +
                        " below 3 grid spacings");

  const std::size_t n = g.size();
  std::vector<Eigen::VectorXd> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = g.unravel(i);
    Eigen::VectorXd p(g.m);
    for (int a = 0; a < g.m; ++a) p(a) = g.point(idx[a]);
    pts[i] = p;
  }
  const double cell = std::pow(g.h(), g.m);
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += G(pts[i], pts[j]) * phi[j];
    out[i] = cell * acc;
  }
  return ComplexField(g, Gauge::PHI, std::move(out));
}

}  // namespace oudisp
