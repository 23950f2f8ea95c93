#include "oudisp/fourier.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "oudisp/errors.hpp"

namespace oudisp {

namespace {

void fft_radix2(std::vector<cplx>& a, const std::vector<cplx>& tw, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx w = tw[k * step];
        if (inverse) w = std::conj(w);
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<cplx> twiddles(std::size_t n) {
  std::vector<cplx> tw(n / 2);
  for (std::size_t t = 0; t < n / 2; ++t)
    tw[t] = std::polar(1.0, -kTwoPi * static_cast<double>(t) / static_cast<double>(n));
  return tw;
}

// Bluestein evaluation of F_k = h Σ_j g_j exp(-2πi s x_k x_j) with
// x_j = -L + jh.  Writing s x_k x_j = s(L² - Lh(k+j)) + s h² kj and
// kj = (j² + k² - (k-j)²)/2 turns the sum into a chirp convolution.
struct CztPlan {
  int N;
  std::size_t M;
  std::vector<cplx> tw;
  std::vector<cplx> b_fft;
  std::vector<cplx> pre;   // pre[j]  = exp(i(2π s L h j - w j²/2))
  std::vector<cplx> post;  // post[k] = h E0 exp(i(2π s L h k - w k²/2))

  CztPlan(const GridSpec& g, double scale) : N(g.N) {
    M = 1;
    while (M < static_cast<std::size_t>(2 * N - 1)) M <<= 1;
    tw = twiddles(M);
    const double h = g.h();
    const double w = kTwoPi * scale * h * h;
    const double lin = kTwoPi * scale * g.L * h;
    pre.resize(N);
    post.resize(N);
    const cplx e0 = std::polar(h, -kTwoPi * scale * g.L * g.L);
    for (int j = 0; j < N; ++j) {
      const double q = lin * j - 0.5 * w * static_cast<double>(j) * j;
      pre[j] = std::polar(1.0, q);
      post[j] = e0 * pre[j];
    }
    std::vector<cplx> b(M, cplx(0.0, 0.0));
    for (int n = 0; n < N; ++n) {
      const cplx bn = std::polar(1.0, 0.5 * w * static_cast<double>(n) * n);
      b[n] = bn;
      if (n > 0) b[M - n] = bn;
    }
    fft_radix2(b, tw, false);
    b_fft = std::move(b);
  }

  void line(const cplx* in, std::size_t stride_in, cplx* out,
            std::size_t stride_out, std::vector<cplx>& buf) const {
    buf.assign(M, cplx(0.0, 0.0));
    for (int j = 0; j < N; ++j) buf[j] = in[j * stride_in] * pre[j];
    fft_radix2(buf, tw, false);
    for (std::size_t i = 0; i < M; ++i) buf[i] *= b_fft[i];
    fft_radix2(buf, tw, true);
    for (int k = 0; k < N; ++k) out[k * stride_out] = buf[k] * post[k];
  }
};

void direct_line(const GridSpec& g, double scale, const cplx* in,
                 std::size_t stride_in, cplx* out, std::size_t stride_out) {
  const int N = g.N;
  std::vector<cplx> tmp(N);
  for (int k = 0; k < N; ++k) {
    const double xk = g.point(k);
    cplx acc(0.0, 0.0);
    for (int j = 0; j < N; ++j)
      acc += in[j * stride_in] * std::polar(1.0, -kTwoPi * scale * xk * g.point(j));
    tmp[k] = g.h() * acc;
  }
  for (int k = 0; k < N; ++k) out[k * stride_out] = tmp[k];
}

template <typename F>
void for_each_line(const GridSpec& g, int axis, F&& visit) {
  const int N = g.N;
  std::size_t stride = 1;
  for (int a = g.m - 1; a > axis; --a) stride *= N;
  const std::size_t fast = stride;
  const std::size_t slow = g.size() / (fast * N);
  const std::size_t block = stride * N;
  for (std::size_t s = 0; s < slow; ++s)
    for (std::size_t f = 0; f < fast; ++f) visit(s * block + f, stride);
}

}  // namespace

double alias_step_phase(const GridSpec& g, double abs_cot, double abs_scale) {
  return 0.5 * abs_cot * g.L * g.h() + kTwoPi * abs_scale * g.L * g.h();
}

void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw OutOfRange("fft length must be a power of two");
  fft_radix2(a, twiddles(n), inverse);
}

ComplexField fourier_at_scaled(const ComplexField& g, double scale,
                               FourierEngine engine) {
  if (!std::isfinite(scale) || scale == 0.0)
    throw OutOfRange("fourier_at_scaled requires a nonzero finite scale");
  const GridSpec& gr = g.grid();
  if (alias_step_phase(gr, 0.0, std::abs(scale)) > (1.0 - kAliasMargin) * kPi)
    throw GridAliasing("transform kernel advances more than 0.9*pi per grid step");

  std::vector<cplx> data = g.samples();
  if (engine == FourierEngine::CZT) {
    CztPlan plan(gr, scale);
    std::vector<cplx> buf;
    for (int axis = 0; axis < gr.m; ++axis)
      for_each_line(gr, axis, [&](std::size_t base, std::size_t stride) {
        plan.line(data.data() + base, stride, data.data() + base, stride, buf);
      });
  } else {
    for (int axis = 0; axis < gr.m; ++axis)
      for_each_line(gr, axis, [&](std::size_t base, std::size_t stride) {
        direct_line(gr, scale, data.data() + base, stride, data.data() + base, stride);
      });
  }
  const GridSpec out_grid(gr.m, std::abs(scale) * gr.L, gr.N);
  return ComplexField(out_grid, Gauge::PHI, std::move(data));
}

GaussianFourierPair::GaussianFourierPair(Eigen::MatrixXcd A)
    : A_(std::move(A)), m_(static_cast<int>(A_.rows())) {
  if (A_.cols() != m_ || m_ < 1) throw OutOfRange("A must be square");
  const double scale = A_.norm();
  if ((A_ - A_.transpose()).norm() > 1e-12 * std::max(1.0, scale))
    throw OutOfRange("A must be complex symmetric (A = A^T)");
  Eigen::MatrixXd reA = A_.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> res(reA);
  if (res.eigenvalues().minCoeff() < -1e-12 * std::max(1.0, scale))
    throw OutOfRange("Re A must be positive semidefinite");

  // Eigenvalues of a complex symmetric A with Re A >= 0 lie in the closed
  // right half-plane, where the principal square root is the analytic
  // branch continued from real positive-definite A.
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A_, /*computeEigenvectors=*/false);
  const auto& lam = es.eigenvalues();
  double lam_max = 0.0;
  for (int i = 0; i < m_; ++i) lam_max = std::max(lam_max, std::abs(lam(i)));
  cplx root(1.0, 0.0);
  for (int i = 0; i < m_; ++i) {
    if (std::abs(lam(i)) <= 1e-14 * std::max(1.0, lam_max))
      throw SingularA("A is singular");
    root *= std::sqrt(lam(i));
  }
  sqrt_det_ = root;
  A_inv_ = A_.inverse();
}

cplx GaussianFourierPair::freq_side(const Eigen::VectorXd& xi) const {
  const cplx q = xi.cast<cplx>().dot(A_ * xi.cast<cplx>());  // bilinear: xi real
  return std::exp(-4.0 * kPi * kPi * q);
}

cplx GaussianFourierPair::space_side(const Eigen::VectorXd& x) const {
  const cplx q = x.cast<cplx>().dot(A_inv_ * x.cast<cplx>());
  return std::pow(4.0 * kPi, -0.5 * m_) / sqrt_det_ * std::exp(-0.25 * q);
}

cplx gaussian_fourier(const Eigen::MatrixXcd& A, const Eigen::VectorXd& xi) {
  return GaussianFourierPair(A).freq_side(xi);
}

}  // namespace oudisp
