#pragma once

#include <string>

#include "sievekit/certified.hpp"

namespace sievekit::constants {

// Euler-Mascheroni constant (stored value, plus the selfcheck tamper hook).
double euler_gamma();

// A(1) = 2 e^gamma, the only constant needed on the kappa >= 1/2 branch.
CertifiedValue a_at_one();

// Sieve dimensions: kappa = alpha*theta in (0, 1/2), companion
// kappa_i = 1 - alpha*theta_i in (1/2, 1].
struct SieveDimension {
  double kappa = 0.0;
  double kappa_i = 1.0;
  void validate() const;
};

struct SieveConstants {
  CertifiedValue p, q, A, B, r;
};

// The tuple (p, q, A, B, r) at a given kappa, total error radius <= 1e-6 at
// the default tolerance.  Certified domain is kappa in [0, 0.4].
SieveConstants beta_sieve_constants(double kappa, double tol = 1e-6);

enum class ThresholdVariant { quadratic_general, biquadratic_corollary, cubic };

ThresholdVariant threshold_variant_from_string(const std::string& s);
std::string to_string(ThresholdVariant v);

struct ThresholdSpec {
  ThresholdVariant variant = ThresholdVariant::quadratic_general;
  // quadratic family: lhs(x) = r(x) - coefficient * x * J(x)
  // cubic:            lhs(t) = r(t) - coefficient * t * H(t) * J(t)
  // where J(c) = int_0^1 u^{-c} (2-u)^{-1} du  (equivalently
  // int_1^2 (2-s)^{-c} ds/s).
  double coefficient = 1.0;
  double bracket_lo = 0.02;
  double bracket_hi = 0.45;

  static ThresholdSpec quadratic_general();
  static ThresholdSpec biquadratic_corollary();
  static ThresholdSpec cubic();
  // Same shape as quadratic_general but with a caller-chosen coefficient on
  // the integral term, for other theta-profiles.
  static ThresholdSpec quadratic_profile(double coefficient);
};

// J(c) above, certified.
CertifiedValue threshold_integral(double c, double tol = 1e-8);

// r(kappa) = B/A = Gamma(1-kappa)/q(kappa); valid for kappa in [0, 1/2).
CertifiedValue r_of_kappa(double kappa, double tol = 1e-7);

// H(t) = A(1) e^{gamma(t-1)} t^{-t} (t+1)^{t+1} / Gamma(2-t).
CertifiedValue cubic_H(double t);

CertifiedValue threshold_lhs(const ThresholdSpec& spec, double x, double lhs_tol = 2e-6);

struct ThresholdSolve {
  CertifiedValue root;
  int iterations = 0;
  double min_secant_slope = 0.0;  // from the monotonicity pre-scan
};

// Bisection root of lhs(x) = 0 on the spec's bracket.  The left-hand side is
// verified strictly decreasing at 10 sample points first; the reported
// error radius includes the lhs quadrature radius divided by a conservative
// slope bound.
ThresholdSolve solve_threshold_full(const ThresholdSpec& spec, double tol = 1e-5);
CertifiedValue solve_threshold(const ThresholdSpec& spec, double tol = 1e-5);

// Companion-constant building blocks for the S4-type bound shape.
CertifiedValue companion_prefactor(double kappa, double kappa_i);
double W_of_s(double kappa, double kappa_i, double s);
CertifiedValue companion_constant_chi(double kappa, double kappa_i, double u = 1.0,
                                      double tol = 1e-8);

}  // namespace sievekit::constants
