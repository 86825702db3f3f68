#include "sievekit/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

namespace sievekit::testhook {
namespace {
std::atomic<double> g_gamma_perturbation{0.0};
}
void set_gamma_perturbation(double delta) { g_gamma_perturbation.store(delta); }
double gamma_perturbation() { return g_gamma_perturbation.load(); }
}  // namespace sievekit::testhook

namespace sievekit::specfun {

namespace {
std::atomic<double> g_ei_cutoff{5.0};
}

double ei_series_cutoff() { return g_ei_cutoff.load(); }
void set_ei_series_cutoff(double z) {
  if (!(z > 1.0 && z < 20.0)) throw std::domain_error("ei_series_cutoff must be in (1, 20)");
  g_ei_cutoff.store(z);
}

// E(z) = sum_{n>=1} (-z)^n / (n * n!).  Terms alternate and decay once n > z,
// so the remainder after stopping is bounded by the first omitted term.
static double ei_entire_series(double z, double* trunc_err = nullptr) {
  double term = 1.0;  // (-z)^n / n!
  double sum = 0.0;
  int n = 0;
  while (true) {
    ++n;
    term *= -z / n;
    double contrib = term / n;
    sum += contrib;
    if (n > z + 2 && std::fabs(contrib) < 1e-18 * (std::fabs(sum) + 1.0)) {
      if (trunc_err) *trunc_err = std::fabs(term * z / ((n + 1.0) * (n + 1.0)));
      break;
    }
    if (n > 500) throw std::runtime_error("Ei series failed to converge");
  }
  return sum;
}

// E_1(z) = -Ei(-z) for z > 0 via the standard continued fraction
// (modified Lentz); reliable for z above ~2.
static double e1_continued_fraction(double z, double* rel_err = nullptr) {
  const double tiny = 1e-300;
  const double eps = 1e-16;
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < eps) {
      if (rel_err) *rel_err = std::fabs(del - 1.0) * 8.0 + 4e-16;
      return h * std::exp(-z);
    }
  }
  throw std::runtime_error("Ei continued fraction failed to converge");
}

double ei_entire_part(double z) {
  if (z <= ei_series_cutoff()) return ei_entire_series(z);
  return -e1_continued_fraction(z) - kEulerGamma - std::log(z);
}

CertifiedValue exp_integral_Ei_neg(double z) {
  if (!(z > 0.0)) throw std::domain_error("exp_integral_Ei_neg requires z > 0");
  if (z <= ei_series_cutoff()) {
    double trunc = 0.0;
    double e = ei_entire_series(z, &trunc);
    double v = kEulerGamma + std::log(z) + e;
    double r = trunc + 1e-15 * (std::fabs(v) + std::fabs(std::log(z)) + 1.0);
    return {v, r};
  }
  double rel = 0.0;
  double e1 = e1_continued_fraction(z, &rel);
  double v = -e1;
  return {v, std::fabs(v) * rel + cv::pad(v)};
}

// ---------------------------------------------------------------------------
// log Gamma, Lanczos approximation (g = 7, 9 terms); x in (0, 1/2) goes
// through Gamma(x) = Gamma(x+1)/x.
// ---------------------------------------------------------------------------

static double lanczos_lgamma(double x) {
  static const double coef[9] = {
      0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
      771.32342877765313,    -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return lanczos_lgamma(x + 1.0) - std::log(x);
  double xx = x - 1.0;
  double a = coef[0];
  double t = xx + 7.5;
  for (int i = 1; i < 9; ++i) a += coef[i] / (xx + i);
  const double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (xx + 0.5) * std::log(t) - t + std::log(a);
}

CertifiedValue log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
  double v = lanczos_lgamma(x);
  double r = 2e-14 * (std::fabs(v) + 1.0);
  return {v, r};
}

CertifiedValue gamma_cv(double x) { return cv::exp(log_gamma(x)); }

// ---------------------------------------------------------------------------
// Certified quadrature.  Streaming over the mesh; per cell [z0, z1] with
// u = z - a the weight moments
//    W  = int u^{-sigma} du,   M1 = int u^{-sigma} (z - z0) dz
// are exact, so min/max of g bracket the cell rigorously.  Convex g gets the
// chord majorant and a shifted-tangent minorant (slope of the neighbouring
// chord), tightening the bracket to O(h^2).
// ---------------------------------------------------------------------------

namespace {

struct MeshSpec {
  double a = 0.0, cutoff = 0.0;
  bool geometric = false;
  double z0 = 0.0, ratio = 0.0;  // geometric part (offsets from a)
  std::size_t n = 0;             // cell count (uniform) or step budget (geometric)

  static MeshSpec make(double a, double cutoff, double sigma, std::size_t cells) {
    MeshSpec m;
    m.a = a;
    m.cutoff = cutoff;
    double len = cutoff - a;
    if (sigma == 0.0) {
      m.geometric = false;
      m.n = std::max<std::size_t>(cells, 4);
    } else {
      m.geometric = true;
      m.n = std::max<std::size_t>(cells, 8);
      double nn = static_cast<double>(m.n);
      m.z0 = len / std::max(1e4, nn * nn);
      m.ratio = std::pow(len / m.z0, 1.0 / nn);
    }
    return m;
  }

  // node(0) == a, node(count()) == cutoff, strictly increasing
  std::size_t count() const { return geometric ? n + 1 : n; }
  double node(std::size_t i) const {
    if (!geometric) {
      if (i >= n) return cutoff;
      return a + (cutoff - a) * (static_cast<double>(i) / static_cast<double>(n));
    }
    if (i == 0) return a;
    if (i >= n + 1) return cutoff;
    return a + z0 * std::pow(ratio, static_cast<double>(i - 1));
  }
};

struct Acc {  // Kahan
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

struct BracketSums {
  double lower = 0.0, upper = 0.0, estimate = 0.0;
};

BracketSums bracket_on_mesh(const MonotoneIntegrand& f, const MeshSpec& mesh) {
  const double a = mesh.a;
  const double sigma = f.singular_exponent;
  const double om = 1.0 - sigma;
  const std::size_t n = mesh.count();
  const bool dec = (f.direction == Monotone::decreasing);

  Acc mono_lo, mono_hi, est, conv_lo, conv_hi;

  // One-cell pipeline: the convex minorant of cell i needs the chord slope of
  // cell i+1, so cell i is emitted once cell i+1's chord slope is known.
  double z_prev = mesh.node(0);
  double g_prev = (sigma > 0.0) ? f.factor_at_a : f.factor(z_prev);
  double up_prev = 0.0, up2_prev = 0.0;  // u^{1-sigma}, u^{2-sigma} at z_prev

  struct Cell {
    double W, M1, dz, g0, g1, slope;
  };
  Cell pending{};
  bool have_pending = false;

  for (std::size_t i = 1; i <= n; ++i) {
    double z = mesh.node(i);
    double g = f.factor(z);
    double u = z - a;
    double up, up2;
    if (sigma == 0.0) {
      up = u;
      up2 = u * u;
    } else {
      up = std::pow(u, om);
      up2 = std::pow(u, 2.0 - sigma);
    }
    Cell cell;
    cell.W = (up - up_prev) / om;
    cell.dz = z - z_prev;
    double u0 = z_prev - a;
    cell.M1 = (up2 - up2_prev) / (2.0 - sigma) - u0 * cell.W;
    if (cell.M1 < 0.0) cell.M1 = 0.0;
    if (cell.M1 > cell.dz * cell.W) cell.M1 = cell.dz * cell.W;
    cell.g0 = g_prev;
    cell.g1 = g;
    cell.slope = (cell.dz > 0.0) ? (g - g_prev) / cell.dz : 0.0;

    mono_lo.add((dec ? cell.g1 : cell.g0) * cell.W);
    mono_hi.add((dec ? cell.g0 : cell.g1) * cell.W);
    est.add(0.5 * (cell.g0 + cell.g1) * cell.W);

    if (f.convex) {
      conv_hi.add(cell.g0 * cell.W + cell.slope * cell.M1);
      if (have_pending) {
        // minorant of the pending cell from this cell's chord slope
        conv_lo.add(pending.g1 * pending.W + cell.slope * (pending.M1 - pending.dz * pending.W));
      }
      pending = cell;
      have_pending = true;
    }

    z_prev = z;
    g_prev = g;
    up_prev = up;
    up2_prev = up2;
  }
  if (f.convex && have_pending) {
    // last cell: fall back to the monotone lower bound
    conv_lo.add((dec ? pending.g1 : pending.g0) * pending.W);
  }

  BracketSums out{mono_lo.s, mono_hi.s, est.s};
  if (f.convex) {
    if (conv_lo.s > out.lower) out.lower = conv_lo.s;
    if (conv_hi.s < out.upper) out.upper = conv_hi.s;
    double mid = 0.5 * (conv_lo.s + conv_hi.s);
    if (mid > out.lower && mid < out.upper) out.estimate = mid;
  }
  if (out.estimate < out.lower || out.estimate > out.upper)
    out.estimate = 0.5 * (out.lower + out.upper);
  return out;
}

QuadratureResult finish(const MonotoneIntegrand&, const BracketSums& s, double tail_err,
                        double cutoff, std::size_t cells) {
  QuadratureResult r;
  r.lower_sum = s.lower;
  r.upper_sum = s.upper;
  r.tail_error = tail_err;
  r.cutoff = cutoff;
  r.cells = cells;
  double value = s.estimate;
  double rad =
      0.5 * (s.upper - s.lower) + tail_err + cv::pad(value) + 1e-13 * (std::fabs(value) + 1.0);
  r.integral = {value, rad};
  return r;
}

void validate(const MonotoneIntegrand& f, double a, double b, bool finite_only) {
  if (!(f.singular_exponent >= 0.0 && f.singular_exponent < 1.0))
    throw std::domain_error("integrate_certified: singular exponent must lie in [0, 1)");
  if (!(b > a)) throw std::domain_error("integrate_certified: empty interval");
  if (finite_only && std::isinf(b))
    throw std::domain_error("integrate_with_cells needs a finite interval");
}

}  // namespace

QuadratureResult integrate_with_cells(const MonotoneIntegrand& f, double a, double b,
                                      std::size_t cells) {
  validate(f, a, b, true);
  MeshSpec mesh = MeshSpec::make(a, b, f.singular_exponent, cells);
  BracketSums s = bracket_on_mesh(f, mesh);
  return finish(f, s, 0.0, b, mesh.count());
}

QuadratureResult integrate_certified_full(const MonotoneIntegrand& f, double a, double b,
                                          double tol) {
  if (!(tol > 0.0)) throw std::domain_error("integrate_certified: tol must be positive");
  validate(f, a, b, false);

  double cutoff = b;
  double tail_err = 0.0;
  if (std::isinf(b)) {
    if (!f.tail_bound)
      throw std::domain_error("integrate_certified: infinite range needs a tail bound");
    cutoff = std::max(a + 1.0, 8.0);
    while (f.tail_bound(cutoff) > tol / 4.0) {
      cutoff *= 1.5;
      if (cutoff > 1e5)
        throw std::domain_error("integrate_certified: tail does not decay fast enough");
    }
    tail_err = f.tail_bound(cutoff);
  }
  double budget = tol - tail_err;

  std::size_t cells = 512;
  QuadratureResult r;
  for (int pass = 0; pass < 12; ++pass) {
    MeshSpec mesh = MeshSpec::make(a, cutoff, f.singular_exponent, cells);
    BracketSums s = bracket_on_mesh(f, mesh);
    r = finish(f, s, tail_err, cutoff, mesh.count());
    double width = s.upper - s.lower;
    if (width <= budget || cells >= (1u << 26)) break;
    double factor = f.convex ? (std::sqrt(width / budget) * 1.4 + 1.0) : (width / budget * 1.2 + 1.0);
    factor = std::min(factor, 64.0);
    cells = static_cast<std::size_t>(static_cast<double>(cells) * factor) + 16;
  }
  if (r.integral.error_radius > 4.0 * tol + 1e-12)
    throw std::runtime_error("integrate_certified: failed to reach requested tolerance");
  return r;
}

}  // namespace sievekit::specfun
