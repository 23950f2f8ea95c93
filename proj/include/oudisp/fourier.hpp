#pragma once

#include <Eigen/Dense>
#include <vector>

#include "oudisp/common.hpp"
#include "oudisp/field.hpp"

namespace oudisp {

enum class FourierEngine { CZT, DIRECT };

inline constexpr double kAliasMargin = 0.1;  // reject above pi*(1-margin)

/// Per-step phase bound |cot|·L·h/2 + 2π·|scale|·L·h of a chirped integrand.
double alias_step_phase(const GridSpec& g, double abs_cot, double abs_scale);

/// In-place radix-2 FFT (power-of-two length); inverse divides by n.
void fft_pow2(std::vector<cplx>& a, bool inverse);

/// Samples of 𝓕g (convention ∫ e^{-2πi<ξ,x>} g dx, trapezoid on the grid)
/// at ξ_j = scale·x_j. Output sample j corresponds to frequency scale·x_j
/// (reversed relative to its own grid when scale < 0); the output grid has
/// extent |scale|·L. CZT uses a Bluestein chirp factorization per axis;
/// DIRECT is the O(N²)-per-axis oracle.
ComplexField fourier_at_scaled(const ComplexField& g, double scale,
                               FourierEngine engine);

/// Fourier pair of Hörmander's Gaussian for complex symmetric A with
/// Re A ⪰ 0:  𝓕[(4π)^{-m/2} det(A)^{-1/2} e^{-<A⁻¹x,x>/4}](ξ) = e^{-4π²<Aξ,ξ>},
/// with the analytic branch of √det A continuous from real positive-definite A.
class GaussianFourierPair {
 public:
  explicit GaussianFourierPair(Eigen::MatrixXcd A);

  cplx sqrt_det() const { return sqrt_det_; }
  cplx freq_side(const Eigen::VectorXd& xi) const;
  cplx space_side(const Eigen::VectorXd& x) const;
  int dim() const { return m_; }

 private:
  Eigen::MatrixXcd A_;
  Eigen::MatrixXcd A_inv_;
  cplx sqrt_det_;
  int m_;
};

cplx gaussian_fourier(const Eigen::MatrixXcd& A, const Eigen::VectorXd& xi);

}  // namespace oudisp
