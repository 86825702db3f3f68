#pragma once

#include <functional>

#include "sievekit/certified.hpp"

namespace sievekit::specfun {

inline constexpr double kEulerGamma = 0.5772156649015329;

// Crossover between the convergent series and the continued fraction for
// Ei(-z).  Adjustable so results can be checked for independence from the
// branch point; both branches agree to ~1e-13 anywhere in [3, 8].
double ei_series_cutoff();
void set_ei_series_cutoff(double z);

// Ei(-z) = -\int_z^oo e^{-u}/u du, for z > 0.  error_radius <= 1e-12.
CertifiedValue exp_integral_Ei_neg(double z);

// The entire part of Ei:  E(z) = Ei(-z) - gamma - log z = sum_{n>=1} (-z)^n/(n n!).
// Plain double evaluation, accurate to a few ulp; used inside integrands.
double ei_entire_part(double z);

// ln Gamma(x) for x > 0, error_radius <= 1e-12 (Lanczos).
CertifiedValue log_gamma(double x);

// Gamma(x) for x > 0 by exponentiating log_gamma with propagated error.
CertifiedValue gamma_cv(double x);

// ---------------------------------------------------------------------------
// Certified quadrature of integrands  f(z) = (z-a)^{-sigma} * g(z)  where g is
// positive, monotone and has a finite limit at a.  The power weight is
// integrated in closed form on every cell, so the lower/upper step sums
// bracket the integral rigorously.  If the caller additionally marks g as
// convex, chord/tangent bounds tighten the bracket from O(h) to O(h^2); the
// reported interval is the intersection, and the reported value always lies
// inside it.
// ---------------------------------------------------------------------------

enum class Monotone { decreasing, increasing };

struct MonotoneIntegrand {
  std::function<double(double)> factor;  // g(z), monotone on (a, b)
  Monotone direction = Monotone::decreasing;
  double factor_at_a = 0.0;              // finite limit of g at a
  double singular_exponent = 0.0;        // sigma in [0, 1)
  bool convex = false;                   // g convex on (a, b)
  // Certified bound on |\int_T^b f| for T large; required when b = +infinity.
  std::function<double(double)> tail_bound;
};

struct QuadratureResult {
  CertifiedValue integral;
  double lower_sum = 0.0;
  double upper_sum = 0.0;
  double tail_error = 0.0;
  double cutoff = 0.0;     // where the tail was cut (== b when finite)
  std::size_t cells = 0;
};

QuadratureResult integrate_certified_full(const MonotoneIntegrand& f, double a, double b,
                                          double tol);

inline CertifiedValue integrate_certified(const MonotoneIntegrand& f, double a, double b,
                                          double tol) {
  return integrate_certified_full(f, a, b, tol).integral;
}

// Same mesh machinery with an explicit cell budget (no refinement); used by
// tests to check that refining never widens the certified interval.
QuadratureResult integrate_with_cells(const MonotoneIntegrand& f, double a, double b,
                                      std::size_t cells);

}  // namespace sievekit::specfun

namespace sievekit::testhook {
// Perturbs the stored Euler-Mascheroni constant; selfcheck's negative control.
void set_gamma_perturbation(double delta);
double gamma_perturbation();
}  // namespace sievekit::testhook
