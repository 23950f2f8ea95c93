#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "oudisp/common.hpp"
#include "oudisp/errors.hpp"

namespace oudisp {

/// Tensor-product grid covering [-L, L) per axis with N = 2^k points.
struct GridSpec {
  int m;     // 1, 2, or 3
  double L;  // half extent
  int N;     // points per axis, power of two, >= 16

  GridSpec(int m_in, double L_in, int N_in);

  double h() const { return 2.0 * L / N; }
  std::size_t size() const;
  double point(int i) const { return -L + h() * i; }

  /// Flat index layout: axis 0 slowest, axis m-1 fastest.
  std::array<int, 3> unravel(std::size_t flat) const;
  double radius2(std::size_t flat) const;  // |x|^2 at a flat index

  bool operator==(const GridSpec& o) const {
    return m == o.m && L == o.L && N == o.N;
  }

  // Defaults: m=1 -> (16, 1024); m=2 -> (8, 256); m=3 -> (6, 64).
  static GridSpec default_for(int m);
};

enum class Gauge { PHI, PSI };

/// Complex samples on a GridSpec; immutable after construction.
class ComplexField {
 public:
  ComplexField(GridSpec grid, Gauge gauge);  // zero field
  ComplexField(GridSpec grid, Gauge gauge, std::vector<cplx> samples);

  const GridSpec& grid() const { return grid_; }
  Gauge gauge() const { return gauge_; }
  const std::vector<cplx>& samples() const { return samples_; }
  cplx operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }

 private:
  GridSpec grid_;
  Gauge gauge_;
  std::vector<cplx> samples_;
};

/// ψ(x) = e^{-|x|²/4} φ(x) and its inverse; throws GaugeMismatch on a
/// field already in the target gauge.
ComplexField to_psi_gauge(const ComplexField& phi);
ComplexField from_psi_gauge(const ComplexField& psi);

double norm_l2(const ComplexField& f);
/// L² norm against the normalized Gaussian density (2π)^{-m/2} e^{-|x|²/2}.
double norm_gauss(const ComplexField& f);
/// Grid L^p norm, p in [1, inf]; p = inf is the grid max modulus.
double norm_lp(const ComplexField& f, double p);

/// max |f| over the outermost index shell divided by max |f| overall.
double tail_peak_ratio(const ComplexField& f);

/// Isotropic Gaussian ψ-gauge state ψ(x) = c e^{-β|x|²} on R^m, Re β > 0.
struct GaussianState {
  int m;
  cplx beta;
  cplx c;

  GaussianState(int m_in, cplx beta_in, cplx c_in = cplx(1.0, 0.0));
};

/// Samples the state on a grid (ψ gauge); sets *tail_warning when the
/// boundary value exceeds 1e-14 |c|.
ComplexField gaussian_state_eval(const GaussianState& s, const GridSpec& grid,
                                 bool* tail_warning = nullptr);

}  // namespace oudisp
