#include "oudisp/hermite.hpp"

#include <array>
#include <cmath>
#include <string>

#include "oudisp/errors.hpp"

namespace oudisp {

namespace {

// Contract `axis` of a rank-m tensor (dims per axis in `dims`) with the
// out_len x in_len row-major matrix M.
std::vector<cplx> contract_axis(const std::vector<cplx>& in,
                                std::array<int, 3>& dims, int m, int axis,
                                const std::vector<double>& M, int out_len) {
  const int in_len = dims[axis];
  std::size_t stride = 1;
  for (int a = m - 1; a > axis; --a) stride *= dims[a];
  std::size_t slow = 1;
  for (int a = 0; a < axis; ++a) slow *= dims[a];

  const std::size_t in_block = stride * in_len;
  const std::size_t out_block = stride * out_len;
  std::vector<cplx> out(slow * out_block, cplx(0.0, 0.0));
  for (std::size_t s = 0; s < slow; ++s)
    for (std::size_t f = 0; f < stride; ++f) {
      const cplx* src = in.data() + s * in_block + f;
      cplx* dst = out.data() + s * out_block + f;
      for (int k = 0; k < out_len; ++k) {
        const double* row = M.data() + static_cast<std::size_t>(k) * in_len;
        cplx acc(0.0, 0.0);
        for (int j = 0; j < in_len; ++j) acc += row[j] * src[j * stride];
        dst[k * stride] = acc;
      }
    }
  dims[axis] = out_len;
  return out;
}

std::vector<double> factorials(int K) {
  std::vector<double> f(K + 1, 1.0);
  for (int k = 1; k <= K; ++k) f[k] = f[k - 1] * k;
  return f;
}

// He_0..He_K at every grid point, row-major [k][j], optionally times a
// per-point weight.
std::vector<double> hermite_table(const GridSpec& g, int K,
                                  const std::vector<double>& weight) {
  std::vector<double> T(static_cast<std::size_t>(K + 1) * g.N);
  for (int j = 0; j < g.N; ++j) {
    const double x = g.point(j);
    const double w = weight.empty() ? 1.0 : weight[j];
    double hm1 = 0.0, h0 = 1.0;
    for (int k = 0; k <= K; ++k) {
      T[static_cast<std::size_t>(k) * g.N + j] = h0 * w;
      const double h1 = x * h0 - k * hm1;
      hm1 = h0;
      h0 = h1;
    }
  }
  return T;
}

std::array<int, 3> coeff_unravel(std::size_t flat, int m, int K) {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = m - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % (K + 1));
    flat /= (K + 1);
  }
  return idx;
}

}  // namespace

double hermite_value(int k, double x) {
  if (k < 0) throw OutOfRange("hermite_value requires k >= 0");
  double hm1 = 0.0, h0 = 1.0;
  for (int i = 0; i < k; ++i) {
    const double h1 = x * h0 - i * hm1;
    hm1 = h0;
    h0 = h1;
  }
  return h0;
}

ComplexField hermite_field(const GridSpec& grid, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != grid.m)
    throw OutOfRange("hermite_field multi-index must have one entry per axis");
  for (int ka : k)
    if (ka < 0 || ka > kMaxHermiteOrder)
      throw OutOfRange("hermite_field order outside [0," +
                       std::to_string(kMaxHermiteOrder) + "]");
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = grid.unravel(i);
    double v = 1.0;
    for (int a = 0; a < grid.m; ++a) v *= hermite_value(k[a], grid.point(idx[a]));
    out[i] = v;
  }
  return ComplexField(grid, Gauge::PHI, std::move(out));
}

HermiteCoeffs hermite_analyze(const ComplexField& phi, int K) {
  if (phi.gauge() != Gauge::PHI)
    throw GaugeMismatch("hermite_analyze expects a φ-gauge field");
  if (K < 0 || K > kMaxHermiteOrder)
    throw OutOfRange("Hermite order K outside [0," +
                     std::to_string(kMaxHermiteOrder) + "]");
  const GridSpec& g = phi.grid();

  // Per-axis analysis matrix He_k(x_j) * h (2π)^{-1/2} e^{-x_j²/2}.
  std::vector<double> w(g.N);
  for (int j = 0; j < g.N; ++j) {
    const double x = g.point(j);
    w[j] = g.h() * std::pow(kTwoPi, -0.5) * std::exp(-0.5 * x * x);
  }
  const std::vector<double> A = hermite_table(g, K, w);

  std::array<int, 3> dims{g.N, g.N, g.N};
  std::vector<cplx> c = phi.samples();
  for (int axis = 0; axis < g.m; ++axis)
    c = contract_axis(c, dims, g.m, axis, A, K + 1);

  const std::vector<double> fact = factorials(K);
  HermiteCoeffs out{g, K, std::move(c), false, 0.0};
  double total = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    const auto idx = coeff_unravel(i, g.m, K);
    double norm2 = 1.0;
    bool band_edge = false;
    for (int a = 0; a < g.m; ++a) {
      norm2 *= fact[idx[a]];
      band_edge = band_edge || idx[a] == K;
    }
    out.coeffs[i] /= norm2;
    const double energy = std::norm(out.coeffs[i]) * norm2;
    total += energy;
    if (band_edge) tail += energy;
  }
  out.tail_fraction = total > 0.0 ? tail / total : 0.0;
  out.truncation_warning = out.tail_fraction > 1e-10;
  return out;
}

ComplexField hermite_synthesize(const HermiteCoeffs& c, double t) {
  const GridSpec& g = c.grid;
  const int K = c.K;
  std::vector<cplx> phased = c.coeffs;
  for (std::size_t i = 0; i < phased.size(); ++i) {
    const auto idx = coeff_unravel(i, g.m, K);
    int deg = 0;
    for (int a = 0; a < g.m; ++a) deg += idx[a];
    phased[i] *= std::polar(1.0, -deg * t);  // e^{it 𝓛} He_k = e^{-ikt} He_k
  }

  const std::vector<double> T = hermite_table(g, K, {});
  // Synthesis matrix is the transpose of the value table.
  std::vector<double> S(static_cast<std::size_t>(g.N) * (K + 1));
  for (int j = 0; j < g.N; ++j)
    for (int k = 0; k <= K; ++k)
      S[static_cast<std::size_t>(j) * (K + 1) + k] =
          T[static_cast<std::size_t>(k) * g.N + j];

  std::array<int, 3> dims{K + 1, K + 1, K + 1};
  for (int axis = 0; axis < g.m; ++axis)
    phased = contract_axis(phased, dims, g.m, axis, S, g.N);
  return ComplexField(g, Gauge::PHI, std::move(phased));
}

int default_hermite_order(int m) {
  switch (m) {
    case 1: return 64;
    case 2: return 32;
    default: return 16;
  }
}

}  // namespace oudisp
