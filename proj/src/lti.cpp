#include "oudisp/lti.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "oudisp/common.hpp"

namespace oudisp {

namespace {

bool all_finite(const Eigen::MatrixXd& M) { return M.allFinite(); }

}  // namespace

SystemSpec::SystemSpec(Eigen::MatrixXd Q_in, Eigen::MatrixXd B_in)
    : m(static_cast<int>(Q_in.rows())), Q(std::move(Q_in)), B(std::move(B_in)) {
  if (m < 1 || m > kMaxDim)
    throw OutOfRange("system dimension m=" + std::to_string(m) +
                     " outside [1," + std::to_string(kMaxDim) + "]");
  if (Q.cols() != m || B.rows() != m || B.cols() != m)
    throw OutOfRange("Q and B must both be m x m");
  if (!all_finite(Q) || !all_finite(B)) throw NonFinite("Q or B has NaN/Inf entries");
  const double scale = Q.norm();
  if ((Q - Q.transpose()).norm() > 1e-12 * std::max(1.0, scale))
    throw NonPSDInput("Q is not symmetric");
  Q = 0.5 * (Q + Q.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
  if (es.eigenvalues().minCoeff() < -kPsdTol * std::max(1.0, scale))
    throw NonPSDInput("Q has eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
}

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& M) {
  if (!all_finite(M)) throw NonFinite("matrix_exp input has NaN/Inf entries");
  return M.exp();  // scaling-and-squaring with Pade approximant
}

double spectral_abscissa(const Eigen::MatrixXd& B) {
  if (!all_finite(B)) throw NonFinite("spectral_abscissa input has NaN/Inf entries");
  Eigen::EigenSolver<Eigen::MatrixXd> es(B, /*computeEigenvectors=*/false);
  return es.eigenvalues().real().maxCoeff();
}

Eigen::MatrixXd covariance_gramian(const SystemSpec& sys, double t) {
  if (!std::isfinite(t) || t <= 0.0) throw OutOfRange("covariance_gramian requires t > 0");
  // Growth of e^{tM} is set by the eigenvalues of B and -B^T.
  Eigen::EigenSolver<Eigen::MatrixXd> es(sys.B, false);
  const double re_max = es.eigenvalues().real().maxCoeff();
  const double re_min = es.eigenvalues().real().minCoeff();
  if (t * std::max({re_max, -re_min, 0.0}) > 700.0)
    throw Overflow("exp(t*B) exceeds double range at t=" + std::to_string(t));

  // Van Loan: exp(t [[B, Q], [0, -B^T]]) = [[e^{tB}, H], [0, e^{-tB^T}]]
  // with H e^{tB^T} = Q(t).
  const int m = sys.m;
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  block.topLeftCorner(m, m) = sys.B;
  block.topRightCorner(m, m) = sys.Q;
  block.bottomRightCorner(m, m) = -sys.B.transpose();
  const Eigen::MatrixXd F = matrix_exp(t * block);
  Eigen::MatrixXd Qt =
      F.topRightCorner(m, m) * F.topLeftCorner(m, m).transpose();
  if (!all_finite(Qt)) throw NonFinite("Gramian evaluation produced NaN/Inf");
  return 0.5 * (Qt + Qt.transpose());
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& Q) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

int kalman_rank(const Eigen::MatrixXd& B, const Eigen::MatrixXd& C, double rel_tol) {
  const int m = static_cast<int>(B.rows());
  Eigen::MatrixXd K(m, m * static_cast<int>(C.cols()));
  Eigen::MatrixXd block = C;
  for (int i = 0; i < m; ++i) {
    K.middleCols(i * C.cols(), C.cols()) = block;
    block = B * block;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(K);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  if (smax <= 0.0) return 0;
  return static_cast<int>((svd.singularValues().array() > rel_tol * smax).count());
}

HypoReport hypoellipticity_check(const SystemSpec& sys, double t) {
  if (!std::isfinite(t) || t <= 0.0) throw OutOfRange("hypoellipticity_check requires t > 0");
  HypoReport rep;
  rep.t = t;
  rep.Qt = covariance_gramian(sys, t);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.Qt);
  rep.min_eig = es.eigenvalues().minCoeff();
  rep.det_Qt = es.eigenvalues().prod();
  rep.hypoelliptic = rep.min_eig > kPdTol * rep.Qt.norm();
  rep.kalman_rank = kalman_rank(sys.B, psd_sqrt(sys.Q));
  rep.spectral_abscissa = spectral_abscissa(sys.B);
  rep.has_invariant_measure = rep.spectral_abscissa < 0.0;
  return rep;
}

InvariantMeasure invariant_measure(const SystemSpec& sys) {
  const double abscissa = spectral_abscissa(sys.B);
  if (abscissa >= 0.0)
    throw NoInvariantMeasure("spectral abscissa " + std::to_string(abscissa) +
                             " is not negative; Q_inf is not defined");
  // Lyapunov equation B X + X B^T = -Q via the Kronecker form
  // (I (x) B + B (x) I) vec(X) = -vec(Q), column-major vec.
  const int m = sys.m;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m * m, m * m);
  for (int j = 0; j < m; ++j)
    A.block(j * m, j * m, m, m) += sys.B;  // I (x) B
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      for (int r = 0; r < m; ++r)
        A(r + j * m, r + i * m) += sys.B(j, i);  // B (x) I
  Eigen::VectorXd q(m * m);
  for (int j = 0; j < m; ++j) q.segment(j * m, m) = -sys.Q.col(j);
  Eigen::VectorXd x = A.partialPivLu().solve(q);
  Eigen::MatrixXd X(m, m);
  for (int j = 0; j < m; ++j) X.col(j) = x.segment(j * m, m);
  X = 0.5 * (X + X.transpose());
  if (!all_finite(X)) throw NonFinite("Lyapunov solve produced NaN/Inf");

  const double resid = (sys.B * X + X * sys.B.transpose() + sys.Q).norm();
  if (resid > kLyapTol * std::max(1.0, sys.Q.norm()))
    throw NonFinite("Lyapunov residual " + std::to_string(resid));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X);
  if (es.eigenvalues().minCoeff() <= kPdTol * X.norm())
    throw NotHypoelliptic("Q_inf is singular; the invariant density is degenerate");

  InvariantMeasure meas;
  meas.Q_inf = X;
  meas.log_normalizer =
      -0.5 * (m * std::log(4.0 * kPi) + es.eigenvalues().array().log().sum());
  return meas;
}

SystemSpec ou_system(int m) {
  return SystemSpec(Eigen::MatrixXd::Identity(m, m), -Eigen::MatrixXd::Identity(m, m));
}

SystemSpec kolmogorov_system(int n) {
  const int m = 2 * n;
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(m, m);
  Q.topLeftCorner(n, n).setIdentity();
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
  B.bottomLeftCorner(n, n).setIdentity();
  return SystemSpec(Q, B);
}

SystemSpec smoluchowski_kramers_system() {
  Eigen::MatrixXd Q(2, 2), B(2, 2);
  Q << 1, 0, 0, 0;
  B << -2, -2, 1, 0;
  return SystemSpec(Q, B);
}

}  // namespace oudisp
