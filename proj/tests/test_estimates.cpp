#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "oudisp/estimates.hpp"

using namespace oudisp;

namespace {

ComplexField extremizer_field(const GridSpec& g, cplx alpha) {
  // φ(x) = e^{-α|x|² + |x|²/4}, i.e. the ψ-gauge Gaussian with β = α.
  return from_psi_gauge(gaussian_state_eval(GaussianState(g.m, alpha), g));
}

// Closed-form dispersive ratio for the Gaussian family: with γ = α - i cot(t)/4,
// ratio = (Re α / |γ|)^{m(1/p - 1/p')/2}; chirped Gaussians are not
// Hausdorff-Young maximizers, so the ratio is 1 only when Im γ = 0.
double gaussian_ratio(cplx alpha, double p, double t, int m) {
  const cplx gamma = alpha - cplx(0, 0.25) / std::tan(t);
  const double pp = p / (p - 1.0);
  return std::pow(alpha.real() / std::abs(gamma), 0.5 * m * (1.0 / p - 1.0 / pp));
}

}  // namespace

TEST_SUITE_BEGIN("estimates");

TEST_CASE("hausdorff-young constants") {
  CHECK(hausdorff_young_constant(2.0, 3) == 1.0);
  CHECK(hausdorff_young_constant(1.0, 3) == 1.0);
  CHECK(hausdorff_young_constant(4.0 / 3.0, 1) ==
        doctest::Approx(0.9366871).epsilon(1e-7));
  CHECK(hausdorff_young_constant(4.0 / 3.0, 2) ==
        doctest::Approx(0.8773826).epsilon(1e-7));
  CHECK_THROWS_AS(hausdorff_young_constant(2.5, 1), OutOfRange);
  CHECK_THROWS_AS(hausdorff_young_constant(0.9, 1), OutOfRange);
}

TEST_CASE("p = 2 reduces to unitarity") {
  const GridSpec g(1, 16.0, 1024);
  std::mt19937_64 rng(1);
  const ComplexField phi = oracle::random_schwartz_field(rng, g);
  const DispersionRecord rec = dispersive_report(phi, 2.0, TimePoint(1.1));
  CHECK(rec.ratio == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(rec.p_prime == 2.0);
}

TEST_CASE("gaussian data: grid ratio matches the closed form") {
  const GridSpec g(1, 16.0, 2048);
  const double p = 4.0 / 3.0, t = 1.0;

  // Chirp-matched member of the extremizer family: equality.
  const cplx alpha_eq = cplx(0.5, 0.25 / std::tan(t));
  const DispersionRecord req =
      dispersive_report(extremizer_field(g, alpha_eq), p, TimePoint(t));
  CHECK(std::abs(req.ratio - 1.0) <= 1e-6);

  // Real α at cot t != 0: strictly below equality, at the predicted value.
  const DispersionRecord rre =
      dispersive_report(extremizer_field(g, cplx(0.5, 0.0)), p, TimePoint(t));
  CHECK(rre.ratio == doctest::Approx(gaussian_ratio(0.5, p, t, 1)).epsilon(1e-8));
  CHECK(rre.ratio < 1.0 - 1e-3);

  // Real α at t = π/2 attains equality.
  const DispersionRecord r90 =
      dispersive_report(extremizer_field(g, cplx(0.5, 0.0)), p, TimePoint(0.5 * kPi));
  CHECK(std::abs(r90.ratio - 1.0) <= 1e-6);
}

TEST_CASE("non-gaussian data sit strictly inside the bound") {
  const GridSpec g(1, 16.0, 2048);
  const ComplexField he3 = hermite_field(g, {3});
  const DispersionRecord rec = dispersive_report(he3, 1.0, TimePoint(0.5));
  CHECK(rec.ratio < 1.0);
  CHECK(rec.ratio > 0.0);
  CHECK(std::isinf(rec.p_prime));
}

TEST_CASE("dispersive errors") {
  const GridSpec g(1, 16.0, 1024);
  const ComplexField phi = extremizer_field(g, 0.5);
  CHECK_THROWS_AS(dispersive_report(phi, 2.5, TimePoint(1.0)), OutOfRange);
  CHECK_THROWS_AS(dispersive_report(phi, 1.5, TimePoint(kPi)), SingularTime);
  CHECK_THROWS_AS(dispersive_report(phi, 1.5, TimePoint(0.0)), SingularTime);
}

TEST_CASE("friction bound envelope") {
  for (double t : {0.3, 1.0, 2.0})
    CHECK(friction_bound_curve(2.0, 3, t) == doctest::Approx(std::exp(1.5 * t)));

  // p = 1: e^{(m/p')t} = 1, so the value is (1 - e^{-2t})^{-m/2}.
  CHECK(friction_bound_curve(1.0, 2, 1.0) ==
        doctest::Approx(1.0 / (1.0 - std::exp(-2.0))).epsilon(1e-12));

  // t -> 0 divergence like (2t)^{-m/2}.
  const double t0 = 1e-4;
  CHECK(friction_bound_curve(1.0, 1, t0) * std::sqrt(2.0 * t0) ==
        doctest::Approx(1.0).epsilon(2e-2));

  CHECK_THROWS_AS(friction_bound_curve(3.0, 1, 1.0), OutOfRange);
  CHECK_THROWS_AS(friction_bound_curve(1.5, 1, 0.0), OutOfRange);
}

TEST_CASE("uncertainty products of the gaussian family") {
  // β0 = 1/4, s = π/4: product is exactly 1/32.
  const UncertaintyRecord r = uncertainty_product(cplx(0.25, 0.0), 0.25 * kPi);
  CHECK(r.product == doctest::Approx(1.0 / 32.0).epsilon(1e-13));
  CHECK(r.threshold == 1.0 / 16.0);

  // The real family saturates the threshold at s = π/2.
  for (double b : {0.07, 0.25, 1.9}) {
    const UncertaintyRecord rec = uncertainty_product(cplx(b, 0.0), 0.5 * kPi);
    CHECK(rec.product == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  }

  // s -> 0: the product vanishes.
  CHECK(uncertainty_product(cplx(0.25, 0.0), 1e-3).product <= 1e-6);

  // Random states never exceed the threshold.
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> re(0.05, 2.0), im(-1.0, 1.0), sd(0.1, 6.1);
  for (int trial = 0; trial < 500; ++trial) {
    const double s = sd(rng);
    if (std::abs(s - kPi) < 1e-3) continue;
    const UncertaintyRecord rec = uncertainty_product(cplx(re(rng), im(rng)), s);
    CHECK(rec.product <= 1.0 / 16.0 + 1e-9);
  }
}

TEST_CASE("hardy predicate and its reduction map") {
  CHECK(hardy_predicate(0.25, 0.25, 0.5 * kPi));
  CHECK(!hardy_predicate(0.25, 0.25, 0.25 * kPi));
  CHECK(!hardy_predicate(5.0, 5.0, kPi));
  CHECK(!hardy_predicate(5.0, 5.0, 3.0 * kPi));
  CHECK_THROWS_AS(hardy_predicate(-1.0, 0.5, 1.0), OutOfRange);
  CHECK_THROWS_AS(hardy_predicate(0.5, 0.0, 1.0), OutOfRange);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ab(0.01, 3.0), sd(0.05, 6.2);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = ab(rng), b = ab(rng), s = sd(rng);
    const auto [ar, br] = hardy_reduction(a, b, s);
    CHECK(ar == a);
    CHECK(hardy_predicate(a, b, s) == (ar * br >= kPi * kPi));
  }
}

TEST_SUITE_END();
