#include "oudisp/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oudisp {

GridSpec::GridSpec(int m_in, double L_in, int N_in) : m(m_in), L(L_in), N(N_in) {
  if (m < 1 || m > 3) throw OutOfRange("grid dimension m must be 1, 2 or 3");
  if (!(L > 0.0) || !std::isfinite(L)) throw OutOfRange("grid extent L must be positive");
  if (N < 16 || (N & (N - 1)) != 0) throw OutOfRange("grid N must be a power of two >= 16");
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (int a = 0; a < m; ++a) s *= static_cast<std::size_t>(N);
  return s;
}

std::array<int, 3> GridSpec::unravel(std::size_t flat) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = m - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % N);
    flat /= N;
  }
  return idx;
}

double GridSpec::radius2(std::size_t flat) const {
  const auto idx = unravel(flat);
  double r2 = 0.0;
  for (int a = 0; a < m; ++a) {
    const double x = point(idx[a]);
    r2 += x * x;
  }
  return r2;
}

GridSpec GridSpec::default_for(int m) {
  switch (m) {
    case 1: return GridSpec(1, 16.0, 1024);
    case 2: return GridSpec(2, 8.0, 256);
    case 3: return GridSpec(3, 6.0, 64);
    default: throw OutOfRange("no default grid for m=" + std::to_string(m));
  }
}

ComplexField::ComplexField(GridSpec grid, Gauge gauge)
    : grid_(grid), gauge_(gauge), samples_(grid.size(), cplx(0.0, 0.0)) {}

ComplexField::ComplexField(GridSpec grid, Gauge gauge, std::vector<cplx> samples)
    : grid_(grid), gauge_(gauge), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size())
    throw OutOfRange("sample count does not match grid size");
  for (const cplx& v : samples_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFinite("field samples contain NaN/Inf");
}

namespace {

ComplexField gauge_map(const ComplexField& f, Gauge expect, Gauge target, double sign) {
  if (f.gauge() != expect) throw GaugeMismatch("field is not in the expected gauge");
  const GridSpec& g = f.grid();
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f[i] * std::exp(sign * 0.25 * g.radius2(i));
  return ComplexField(g, target, std::move(out));
}

}  // namespace

ComplexField to_psi_gauge(const ComplexField& phi) {
  return gauge_map(phi, Gauge::PHI, Gauge::PSI, -1.0);
}

ComplexField from_psi_gauge(const ComplexField& psi) {
  return gauge_map(psi, Gauge::PSI, Gauge::PHI, +1.0);
}

double norm_l2(const ComplexField& f) {
  const double cell = std::pow(f.grid().h(), f.grid().m);
  double s = 0.0;
  for (const cplx& v : f.samples()) s += std::norm(v);
  return std::sqrt(cell * s);
}

double norm_gauss(const ComplexField& f) {
  const GridSpec& g = f.grid();
  const double cell = std::pow(g.h(), g.m);
  const double c0 = std::pow(kTwoPi, -0.5 * g.m);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += std::norm(f[i]) * c0 * std::exp(-0.5 * g.radius2(i));
  return std::sqrt(cell * s);
}

double norm_lp(const ComplexField& f, double p) {
  if (!(p >= 1.0)) throw OutOfRange("norm_lp requires p >= 1");
  if (std::isinf(p)) {
    double mx = 0.0;
    for (const cplx& v : f.samples()) mx = std::max(mx, std::abs(v));
    return mx;
  }
  const double cell = std::pow(f.grid().h(), f.grid().m);
  double s = 0.0;
  for (const cplx& v : f.samples()) s += std::pow(std::abs(v), p);
  return std::pow(cell * s, 1.0 / p);
}

double tail_peak_ratio(const ComplexField& f) {
  const GridSpec& g = f.grid();
  double peak = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = std::abs(f[i]);
    peak = std::max(peak, a);
    const auto idx = g.unravel(i);
    for (int ax = 0; ax < g.m; ++ax)
      if (idx[ax] == 0 || idx[ax] == g.N - 1) {
        tail = std::max(tail, a);
        break;
      }
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

GaussianState::GaussianState(int m_in, cplx beta_in, cplx c_in)
    : m(m_in), beta(beta_in), c(c_in) {
  if (m < 1 || m > 3) throw OutOfRange("GaussianState dimension must be 1, 2 or 3");
  if (!(beta.real() >= 1e-14))  // strict positivity with margin
    throw OutOfRange("GaussianState requires Re(beta) > 0 (margin 1e-14)");
}

ComplexField gaussian_state_eval(const GaussianState& s, const GridSpec& grid,
                                 bool* tail_warning) {
  if (grid.m != s.m) throw OutOfRange("grid dimension does not match state dimension");
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = s.c * std::exp(-s.beta * grid.radius2(i));
  if (tail_warning) {
    const double edge = std::abs(s.c * std::exp(-s.beta * (grid.L * grid.L)));
    *tail_warning = edge > 1e-14 * std::abs(s.c);
  }
  return ComplexField(grid, Gauge::PSI, std::move(out));
}

}  // namespace oudisp
