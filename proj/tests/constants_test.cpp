#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "sievekit/constants.hpp"
#include "sievekit/specfun.hpp"

using namespace sievekit;
using namespace sievekit::constants;

TEST_CASE("euler gamma and A(1)") {
  CHECK(euler_gamma() == doctest::Approx(0.57721).epsilon(1e-5));
  CHECK(a_at_one().value == doctest::Approx(3.5621432).epsilon(1e-6));
  CHECK(std::exp(euler_gamma() * 0.0) == 1.0);
}

TEST_CASE("beta sieve constants at kappa = 0") {
  SieveConstants c = beta_sieve_constants(0.0, 1e-8);
  CHECK(std::fabs(c.p.value - 1.0) < 1e-8);
  CHECK(std::fabs(c.q.value - 1.0) < 1e-8);
  CHECK(std::fabs(c.A.value - 1.0) < 1e-8);
  CHECK(std::fabs(c.B.value - 1.0) < 1e-8);
  CHECK(std::fabs(c.r.value - 1.0) < 1e-8);
}

TEST_CASE("A, B -> 1 as kappa -> 0") {
  SieveConstants c = beta_sieve_constants(0.001);
  CHECK(std::fabs(c.A.value - 1.0) < 0.02);
  CHECK(std::fabs(c.B.value - 1.0) < 0.02);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(beta_sieve_constants(-0.1), std::domain_error);
  CHECK_THROWS_AS(beta_sieve_constants(0.41), std::domain_error);
  CHECK_THROWS_AS(threshold_variant_from_string("quartic"), std::domain_error);
}

TEST_CASE("identity r q = Gamma(1-kappa), and 0 < B <= A") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(1e-3, 0.4);
  for (int i = 0; i < 20; ++i) {
    double k = dist(rng);
    SieveConstants c = beta_sieve_constants(k);
    double gamma1mk = specfun::gamma_cv(1.0 - k).value;
    double combined = c.r.error_radius * c.q.value + c.q.error_radius * c.r.value + 1e-6;
    CHECK(std::fabs(c.r.value * c.q.value - gamma1mk) < combined);
    CHECK(c.B.value > 0.0);
    CHECK(c.B.value <= c.A.value + c.A.error_radius + c.B.error_radius);
    CHECK(c.r.value > 0.0);
    CHECK(c.r.value <= 1.0 + 2e-6);
    // r two ways: B/A vs Gamma(1-k)/q
    CertifiedValue r2 = r_of_kappa(k);
    CHECK(cv::intervals_intersect(c.r, r2));
  }
}

// Series oracle for J(c) = int_0^1 u^{-c}/(2-u) du: expanding 1/(2-u) as a
// geometric series gives J = sum_{k>=0} 2^{-k-1}/(k+1-c), converging like 2^{-k}.
static double threshold_integral_series(double c) {
  double sum = 0.0;
  double p = 0.5;
  for (int k = 0; k < 64; ++k) {
    sum += p / (k + 1.0 - c);
    p *= 0.5;
  }
  return sum;
}

TEST_CASE("threshold integral two routes") {
  for (double c : {0.0, 0.1, 0.25, 0.39, 0.42, 0.48}) {
    CertifiedValue J = threshold_integral(c, 1e-9);
    CHECK(std::fabs(J.value - threshold_integral_series(c)) < 1e-9);
  }
  // J(0) = ln 2 exactly (the kappa = 0 case of the threshold integral)
  CHECK(threshold_integral(0.0, 1e-10).value == doctest::Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("threshold lhs limits and signs") {
  ThresholdSpec qg = ThresholdSpec::quadratic_general();
  CertifiedValue near0 = threshold_lhs(qg, 1e-4);
  CHECK(std::fabs(near0.value - 1.0) < 0.01);

  CertifiedValue at45 = threshold_lhs(qg, 0.45);
  CHECK(at45.value < 0.0);

  CertifiedValue h25 = cubic_H(0.25);
  CHECK(h25.value > 4.0);

  CHECK_THROWS_AS(threshold_lhs(ThresholdSpec::cubic(), 0.1), std::domain_error);
}

TEST_CASE("headline thresholds") {
  ThresholdSolve qg = solve_threshold_full(ThresholdSpec::quadratic_general(), 1e-5);
  CHECK(std::fabs(qg.root.value - 0.39000) < 5e-5);
  CHECK(qg.root.error_radius <= 5e-5);

  ThresholdSolve bi = solve_threshold_full(ThresholdSpec::biquadratic_corollary(), 1e-5);
  CHECK(std::fabs(bi.root.value - 0.42214) < 5e-5);
  CHECK(std::fabs(bi.root.value / 3.0 - 0.14071) < 5e-5);

  ThresholdSolve cu = solve_threshold_full(ThresholdSpec::cubic(), 1e-5);
  CHECK(std::fabs(cu.root.value - 0.32380) < 5e-5);

  // consistency: lhs vanishes at the reported root within its radius
  CertifiedValue back = threshold_lhs(ThresholdSpec::quadratic_general(), qg.root.value, 1e-6);
  CHECK(std::fabs(back.value) < 1e-3);
}

TEST_CASE("root stability under tolerance halving") {
  ThresholdSpec spec = ThresholdSpec::quadratic_general();
  CertifiedValue coarse = solve_threshold(spec, 2e-5);
  CertifiedValue fine = solve_threshold(spec, 1e-5);
  CHECK(std::fabs(coarse.value - fine.value) < coarse.error_radius);
  CHECK(cv::intervals_intersect(coarse, fine));
}

TEST_CASE("roots invariant under Ei branch point switch") {
  for (auto spec : {ThresholdSpec::quadratic_general(), ThresholdSpec::biquadratic_corollary(),
                    ThresholdSpec::cubic()}) {
    specfun::set_ei_series_cutoff(4.0);
    double r1 = solve_threshold(spec, 1e-5).value;
    specfun::set_ei_series_cutoff(6.0);
    double r2 = solve_threshold(spec, 1e-5).value;
    specfun::set_ei_series_cutoff(5.0);
    CHECK(std::fabs(r1 - r2) <= 1e-5);
  }
}

TEST_CASE("monotonicity of r on a grid") {
  // r is strictly decreasing in kappa
  double prev = INFINITY;
  for (int i = 1; i <= 50; ++i) {
    double k = 0.4 * i / 50.0;
    double r = r_of_kappa(k, 1e-7).value;
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("companion constants") {
  // kappa_i = 1, kappa -> 0: prefactor -> e^{-gamma}
  CertifiedValue pf = companion_prefactor(1e-9, 1.0);
  CHECK(pf.value == doctest::Approx(std::exp(-euler_gamma())).epsilon(1e-6));

  // W(s) plug-in vs an independent log-space evaluation
  double w = W_of_s(0.3, 0.7, 1.0);
  double logw = -0.3 * (std::log(0.3) - std::log(1.0)) - 0.7 * (std::log(0.7) - std::log(1.0)) -
                1.0 * std::log(2.0 - 1.0) + (0.7 - 1.0) * std::log(1.0);
  CHECK(w == doctest::Approx(std::exp(logw)).epsilon(1e-12));
  CHECK(w == doctest::Approx(std::pow(0.3, -0.3) * std::pow(0.7, -0.7)).epsilon(1e-12));

  // the chi integral is finite for kappa_i > 0 (head exponent kappa_i - 1 > -1)
  CertifiedValue chi = companion_constant_chi(0.3, 0.7, 1.0, 1e-8);
  CHECK(chi.value > 0.0);
  CHECK(chi.value < 100.0);
  CHECK_THROWS_AS(companion_prefactor(0.7, 0.3), std::domain_error);
}

TEST_CASE("quadratic profile coefficient is exposed") {
  // biquadratic-corollary equals the quadratic family at coefficient 2/3
  ThresholdSpec prof = ThresholdSpec::quadratic_profile(2.0 / 3.0);
  CertifiedValue a = threshold_lhs(prof, 0.3, 1e-6);
  CertifiedValue b = threshold_lhs(ThresholdSpec::biquadratic_corollary(), 0.3, 1e-6);
  CHECK(std::fabs(a.value - b.value) < 1e-6);
}
