#pragma once

#include <Eigen/Dense>

#include "oudisp/errors.hpp"

namespace oudisp {

inline constexpr int kMaxDim = 16;        // dense solvers only
inline constexpr double kPsdTol = 1e-12;  // relative PSD slack for Q
inline constexpr double kPdTol = 1e-10;   // relative positivity threshold for Q(t)
inline constexpr double kLyapTol = 1e-10; // relative Lyapunov residual bound

/// Diffusion/drift pair (Q, B) of the operator tr(Q D²) + <Bx, D> on R^m.
struct SystemSpec {
  int m;
  Eigen::MatrixXd Q;  // symmetric, positive semidefinite
  Eigen::MatrixXd B;

  SystemSpec(Eigen::MatrixXd Q_in, Eigen::MatrixXd B_in);
};

struct HypoReport {
  double t = 0;
  Eigen::MatrixXd Qt;        // covariance Gramian at time t
  double det_Qt = 0;
  double min_eig = 0;
  int kalman_rank = 0;
  bool hypoelliptic = false;
  double spectral_abscissa = 0;
  bool has_invariant_measure = false;
};

struct InvariantMeasure {
  Eigen::MatrixXd Q_inf;
  double log_normalizer = 0;  // log of (4π)^{-m/2} det(Q_inf)^{-1/2}
};

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& M);

/// Q(t) = ∫₀ᵗ e^{sB} Q e^{sBᵀ} ds via the Van Loan block-exponential.
Eigen::MatrixXd covariance_gramian(const SystemSpec& sys, double t);

HypoReport hypoellipticity_check(const SystemSpec& sys, double t);

/// Solves B X + X Bᵀ = -Q (dense Kronecker solve); requires spectral_abscissa(B) < 0.
InvariantMeasure invariant_measure(const SystemSpec& sys);

double spectral_abscissa(const Eigen::MatrixXd& B);

/// Symmetric PSD square root; negative eigenvalues clamped to zero.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& Q);

/// Rank of [C, BC, ..., B^{m-1}C] by SVD with relative threshold.
int kalman_rank(const Eigen::MatrixXd& B, const Eigen::MatrixXd& C,
                double rel_tol = kPdTol);

// Preset systems.
SystemSpec ou_system(int m);               // Q = I,          B = -I
SystemSpec kolmogorov_system(int n);       // Q = diag(I_n,0), B = [[0,0],[I_n,0]], m = 2n
SystemSpec smoluchowski_kramers_system();  // Q = diag(1,0),  B = [[-2,-2],[1,0]]

}  // namespace oudisp
