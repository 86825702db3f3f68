#include "sievekit/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sievekit/specfun.hpp"

namespace sievekit::constants {

using specfun::MonotoneIntegrand;
using specfun::Monotone;

double euler_gamma() { return specfun::kEulerGamma + testhook::gamma_perturbation(); }

CertifiedValue a_at_one() {
  CertifiedValue g{euler_gamma(), 1e-16};
  return cv::scale(2.0, cv::exp(g));
}

void SieveDimension::validate() const {
  if (!(kappa > 0.0 && kappa < 0.5))
    throw std::domain_error("SieveDimension: kappa must lie in (0, 1/2)");
  if (!(kappa_i > 0.5 && kappa_i <= 1.0))
    throw std::domain_error("SieveDimension: kappa_i must lie in (1/2, 1]");
}

// ---------------------------------------------------------------------------
// p and q.  Writing Ei(-z) = gamma + log z + E(z) with E entire,
//   p-integrand  z^{-k} exp(-z + k Ei(-z)) = e^{k gamma} exp(-z + k E(z)),
//   q-integrand  z^{-k} exp(-z - k Ei(-z)) = e^{-k gamma} z^{-2k} exp(-z - k E(z)),
// so the singular power is an explicit weight and the remaining factor is a
// decreasing convex exponential of an affine-plus-convex phase.
// ---------------------------------------------------------------------------

namespace {

CertifiedValue p_integral(double kappa, double tol) {
  MonotoneIntegrand f;
  f.factor = [kappa](double z) { return std::exp(-z + kappa * specfun::ei_entire_part(z)); };
  f.factor_at_a = 1.0;
  f.direction = Monotone::decreasing;
  f.singular_exponent = 0.0;
  f.convex = true;
  // For z >= 1 the original integrand is <= e^{-z}.
  f.tail_bound = [kappa](double T) { return std::exp(kappa * euler_gamma()) * std::exp(-T); };
  CertifiedValue integral = specfun::integrate_certified(f, 0.0, INFINITY, tol);
  CertifiedValue pref = cv::exp({kappa * euler_gamma(), 1e-16});
  return cv::mul(pref, integral);
}

CertifiedValue q_integral(double kappa, double tol) {
  MonotoneIntegrand f;
  f.factor = [kappa](double z) { return std::exp(-z - kappa * specfun::ei_entire_part(z)); };
  f.factor_at_a = 1.0;
  f.direction = Monotone::decreasing;
  f.singular_exponent = 2.0 * kappa;
  f.convex = true;
  // z^{-2k} G(z) = e^{k gamma} z^{-k} e^{-z} e^{-k Ei(-z)} <= 2 e^{-z} for z >= 1.
  f.tail_bound = [](double T) { return 2.0 * std::exp(-T); };
  CertifiedValue integral = specfun::integrate_certified(f, 0.0, INFINITY, tol);
  CertifiedValue pref = cv::exp({-kappa * euler_gamma(), 1e-16});
  return cv::mul(pref, integral);
}

// q's evaluation (and hence r) is rigorous for kappa < 1/2; the public
// constants API enforces the certified 0.4 cap.
void check_internal_kappa(double kappa) {
  if (!(kappa >= 0.0 && kappa < 0.5))
    throw std::domain_error("kappa must lie in [0, 1/2)");
}

}  // namespace

SieveConstants beta_sieve_constants(double kappa, double tol) {
  if (!(kappa >= 0.0 && kappa <= 0.4))
    throw std::domain_error("beta_sieve_constants: kappa must lie in [0, 0.4]");
  if (!(tol > 0.0)) throw std::domain_error("beta_sieve_constants: tol must be positive");
  SieveConstants out;
  double itol = tol / 8.0;
  out.p = p_integral(kappa, itol);
  out.q = q_integral(kappa, itol);
  CertifiedValue two_egk = cv::scale(2.0, cv::exp({kappa * euler_gamma(), 1e-16}));
  CertifiedValue psum = cv::add(out.p, out.q);
  CertifiedValue gamma1mk = specfun::gamma_cv(1.0 - kappa);
  out.A = cv::div(cv::mul(two_egk, out.q), cv::mul(gamma1mk, psum));
  out.B = cv::div(two_egk, psum);
  out.r = cv::div(out.B, out.A);
  return out;
}

// J(c) = int_0^1 u^{-c} (2-u)^{-1} du.
CertifiedValue threshold_integral(double c, double tol) {
  if (!(c >= 0.0 && c < 1.0)) throw std::domain_error("threshold_integral: c must lie in [0, 1)");
  MonotoneIntegrand f;
  f.factor = [](double u) { return 1.0 / (2.0 - u); };
  f.factor_at_a = 0.5;
  f.direction = Monotone::increasing;
  f.singular_exponent = c;
  f.convex = true;
  return specfun::integrate_certified(f, 0.0, 1.0, tol);
}

CertifiedValue r_of_kappa(double kappa, double tol) {
  check_internal_kappa(kappa);
  CertifiedValue q = q_integral(kappa, tol);
  CertifiedValue g = specfun::gamma_cv(1.0 - kappa);
  return cv::div(g, q);
}

CertifiedValue cubic_H(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("cubic_H: t must lie in (0, 1)");
  CertifiedValue a1 = a_at_one();
  CertifiedValue e1 = cv::exp({euler_gamma() * (t - 1.0), 1e-15});
  CertifiedValue tt = cv::exp({-t * std::log(t), 1e-15});            // t^{-t}
  CertifiedValue t1 = cv::exp({(t + 1.0) * std::log1p(t), 1e-15});   // (t+1)^{t+1}
  CertifiedValue g2 = specfun::gamma_cv(2.0 - t);
  return cv::div(cv::mul(cv::mul(a1, e1), cv::mul(tt, t1)), g2);
}

ThresholdSpec ThresholdSpec::quadratic_general() {
  return {ThresholdVariant::quadratic_general, 1.0, 0.02, 0.45};
}
ThresholdSpec ThresholdSpec::biquadratic_corollary() {
  return {ThresholdVariant::biquadratic_corollary, 2.0 / 3.0, 0.02, 0.48};
}
ThresholdSpec ThresholdSpec::cubic() { return {ThresholdVariant::cubic, 1.0 / 3.0, 0.21, 0.45}; }
ThresholdSpec ThresholdSpec::quadratic_profile(double coefficient) {
  if (!(coefficient > 0.0)) throw std::domain_error("quadratic_profile: coefficient must be > 0");
  return {ThresholdVariant::quadratic_general, coefficient, 0.02, 0.49};
}

ThresholdVariant threshold_variant_from_string(const std::string& s) {
  if (s == "quadratic-general") return ThresholdVariant::quadratic_general;
  if (s == "biquadratic-corollary") return ThresholdVariant::biquadratic_corollary;
  if (s == "cubic") return ThresholdVariant::cubic;
  throw std::domain_error("unknown threshold variant: " + s);
}

std::string to_string(ThresholdVariant v) {
  switch (v) {
    case ThresholdVariant::quadratic_general: return "quadratic-general";
    case ThresholdVariant::biquadratic_corollary: return "biquadratic-corollary";
    case ThresholdVariant::cubic: return "cubic";
  }
  return "?";
}

CertifiedValue threshold_lhs(const ThresholdSpec& spec, double x, double lhs_tol) {
  if (!(lhs_tol > 0.0)) throw std::domain_error("threshold_lhs: tol must be positive");
  if (spec.variant == ThresholdVariant::cubic) {
    if (!(x > 0.2 && x < 0.5))
      throw std::domain_error("threshold_lhs (cubic): t must lie in (0.2, 0.5)");
    CertifiedValue r = r_of_kappa(x, lhs_tol / 6.0);
    CertifiedValue H = cubic_H(x);
    CertifiedValue J = threshold_integral(x, lhs_tol / 6.0);
    CertifiedValue term = cv::scale(spec.coefficient * x, cv::mul(H, J));
    return cv::sub(r, term);
  }
  if (!(x >= 0.0 && x < 0.5))
    throw std::domain_error("threshold_lhs (quadratic): kappa must lie in [0, 0.5)");
  CertifiedValue r = r_of_kappa(x, lhs_tol / 6.0);
  CertifiedValue J = threshold_integral(x, lhs_tol / 3.0);
  CertifiedValue term = cv::scale(spec.coefficient * x, J);
  return cv::sub(r, term);
}

ThresholdSolve solve_threshold_full(const ThresholdSpec& spec, double tol) {
  if (!(tol > 0.0 && tol < 0.1)) throw std::domain_error("solve_threshold: bad tolerance");
  const double lo0 = spec.bracket_lo, hi0 = spec.bracket_hi;
  const double scan_tol = 5e-5;

  // Monotonicity pre-scan at 10 points; also locates the sign change.
  const int kScan = 10;
  std::vector<double> xs(kScan), vs(kScan), rs(kScan);
  for (int i = 0; i < kScan; ++i) {
    xs[i] = lo0 + (hi0 - lo0) * i / (kScan - 1);
    CertifiedValue v = threshold_lhs(spec, xs[i], scan_tol);
    vs[i] = v.value;
    rs[i] = v.error_radius;
  }
  double min_secant = INFINITY;
  int seg = -1;
  for (int i = 0; i + 1 < kScan; ++i) {
    double drop = vs[i] - vs[i + 1];
    if (drop <= rs[i] + rs[i + 1])
      throw std::runtime_error("solve_threshold: lhs not strictly decreasing on bracket");
    min_secant = std::min(min_secant, drop / (xs[i + 1] - xs[i]));
    if (vs[i] > 0.0 && vs[i + 1] <= 0.0) seg = i;
  }
  if (seg < 0) throw std::runtime_error("solve_threshold: no root (no sign change in bracket)");

  double lo = xs[seg], hi = xs[seg + 1];
  const double lhs_tol = std::max(1e-7, tol / 20.0);
  double max_lhs_radius = 0.0;
  int iters = 0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    CertifiedValue v = threshold_lhs(spec, mid, lhs_tol);
    max_lhs_radius = std::max(max_lhs_radius, v.error_radius);
    if (v.value > 0.0)
      lo = mid;
    else
      hi = mid;
    ++iters;
    if (iters > 200) throw std::runtime_error("solve_threshold: bisection failed to converge");
  }

  ThresholdSolve out;
  double root = 0.5 * (lo + hi);
  double slope_bound = 0.5 * min_secant;  // conservative slope lower bound near the root
  double radius = 0.5 * (hi - lo) + max_lhs_radius / slope_bound;
  out.root = {root, radius};
  out.iterations = iters;
  out.min_secant_slope = min_secant;
  return out;
}

CertifiedValue solve_threshold(const ThresholdSpec& spec, double tol) {
  return solve_threshold_full(spec, tol).root;
}

CertifiedValue companion_prefactor(double kappa, double kappa_i) {
  SieveDimension{kappa, kappa_i}.validate();
  double g = euler_gamma();
  CertifiedValue e = cv::exp({-g * kappa_i, 1e-15});
  CertifiedValue gam = specfun::gamma_cv(1.0 + kappa_i);
  double logscale = -kappa * std::log(kappa) - kappa_i * std::log(kappa_i) +
                    (kappa + kappa_i) * std::log(kappa + kappa_i);
  CertifiedValue scale = cv::exp({logscale, 1e-14});
  return cv::mul(cv::scale(kappa_i, cv::div(e, gam)), scale);
}

double W_of_s(double kappa, double kappa_i, double s) {
  SieveDimension{kappa, kappa_i}.validate();
  if (!(s > 0.0 && s < 2.0)) throw std::domain_error("W_of_s: s must lie in (0, 2)");
  double k = kappa, ki = kappa_i, sum = k + ki;
  return std::pow(k / sum, -k) * std::pow(ki / sum, -ki) * std::pow(2.0 - s, -sum) *
         std::pow(s, ki - 1.0);
}

CertifiedValue companion_constant_chi(double kappa, double kappa_i, double u, double tol) {
  SieveDimension{kappa, kappa_i}.validate();
  if (!(u > 0.0 && u <= 1.0)) throw std::domain_error("companion_constant_chi: u must lie in (0, 1]");
  double sum = kappa + kappa_i;
  MonotoneIntegrand f;
  f.factor = [sum](double s) { return std::pow(2.0 - s, -sum); };
  f.factor_at_a = std::pow(2.0, -sum);
  f.direction = Monotone::increasing;
  f.singular_exponent = 1.0 - kappa_i;  // s^{kappa_i - 1} weight
  f.convex = true;
  CertifiedValue integral = specfun::integrate_certified(f, 0.0, u, tol);
  return cv::mul(companion_prefactor(kappa, kappa_i), integral);
}

}  // namespace sievekit::constants
