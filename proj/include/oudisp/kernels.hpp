#pragma once

#include <Eigen/Dense>

#include "oudisp/field.hpp"
#include "oudisp/lti.hpp"

namespace oudisp {

/// Frozen-time kernel of the hypoelliptic heat semigroup: the Gaussian
/// (4π)^{-m/2} det Q(t)^{-1/2} exp(-<Q(t)⁻¹(y - e^{tB}x), y - e^{tB}x>/4).
class HormanderKernel {
 public:
  HormanderKernel(const SystemSpec& sys, double t);  // throws NotHypoelliptic

  double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  const Eigen::MatrixXd& Qt() const { return Qt_; }
  const Eigen::MatrixXd& etB() const { return etB_; }
  /// Standard deviation of the narrowest kernel direction, sqrt(2 λ_min).
  double min_width() const { return min_width_; }

 private:
  int m_;
  Eigen::MatrixXd Qt_;
  Eigen::MatrixXd etB_;
  Eigen::MatrixXd Qt_inv_;
  double log_pref_;
  double min_width_;
};

double hormander_kernel(const SystemSpec& sys, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y, double t);

/// Kolmogorov's explicit fundamental solution on R^{2n}; x is the diffusive
/// block, y the transported one, (x̄, ȳ) the forward point.
double kolmogorov_kernel(int n, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                         const Eigen::VectorXd& xb, const Eigen::VectorXd& yb,
                         double t);

/// Mehler weight for u_t - Δu + 2√ω <x,∇u> = 0; integrates to 1 in y.
double mehler_kernel(double omega, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& y, double t);

/// Kernel-quadrature heat evolution u(x,t) = ∫ G(x,y,t) φ(y) dy (trapezoid).
ComplexField heat_evolve(const SystemSpec& sys, const ComplexField& phi, double t);

}  // namespace oudisp
