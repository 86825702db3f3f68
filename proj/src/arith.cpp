#include "sievekit/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sievekit/threading.hpp"

namespace sievekit {
namespace {
std::atomic<int> g_thread_budget{0};
}
int thread_budget() {
  int n = g_thread_budget.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}
void set_thread_budget(int n) { g_thread_budget.store(n); }
}  // namespace sievekit

namespace sievekit::arith {

// ---------------------------------------------------------------------------
// CyclePredicate
// ---------------------------------------------------------------------------

bool CyclePredicate::operator()(const CycleType& t) const {
  switch (kind) {
    case Kind::always: return true;
    case Kind::no_part_one: return !t.has_fixed_point();
    case Kind::has_part_one: return t.has_fixed_point();
    case Kind::non_coprime: return !t.parts_coprime();
    case Kind::exact_type: return t.parts == type;
  }
  return false;
}

std::string CyclePredicate::str() const {
  switch (kind) {
    case Kind::always: return "always";
    case Kind::no_part_one: return "no-part-1";
    case Kind::has_part_one: return "has-part-1";
    case Kind::non_coprime: return "non-coprime";
    case Kind::exact_type: {
      std::string s = "type=";
      for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(type[i]);
      }
      return s;
    }
  }
  return "?";
}

CyclePredicate CyclePredicate::parse(const std::string& s) {
  CyclePredicate p;
  if (s == "always") {
    p.kind = Kind::always;
  } else if (s == "no-part-1") {
    p.kind = Kind::no_part_one;
  } else if (s == "has-part-1") {
    p.kind = Kind::has_part_one;
  } else if (s == "non-coprime") {
    p.kind = Kind::non_coprime;
  } else if (s.rfind("type=", 0) == 0) {
    p.kind = Kind::exact_type;
    std::stringstream ss(s.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v = std::stoi(tok);
      if (v < 1) throw std::domain_error("bad cycle type part");
      p.type.push_back(v);
    }
    if (p.type.empty()) throw std::domain_error("empty cycle type");
    std::sort(p.type.begin(), p.type.end());
  } else {
    throw std::domain_error("unknown predicate: " + s);
  }
  return p;
}

// ---------------------------------------------------------------------------
// SiftingSet
// ---------------------------------------------------------------------------

SiftingSet SiftingSet::none() { return SiftingSet{}; }

SiftingSet SiftingSet::congruence_union(std::vector<CongruencePair> classes,
                                        std::vector<u64> excluded_primes) {
  if (classes.empty()) throw std::domain_error("congruence_union: no classes");
  for (auto& c : classes) {
    if (c.q < 2) throw std::domain_error("congruence_union: modulus must be >= 2");
    c.t %= c.q;
    if (c.t < 0) c.t += c.q;
    if (std::gcd(c.t, c.q) != 1)
      throw std::domain_error("congruence_union: residue must be coprime to the modulus");
  }
  SiftingSet s;
  s.kind = Kind::congruence_union;
  s.classes = std::move(classes);
  s.excluded = std::move(excluded_primes);
  std::sort(s.excluded.begin(), s.excluded.end());
  return s;
}

SiftingSet SiftingSet::split_condition(Poly g, CyclePredicate pred,
                                       std::vector<u64> excluded_primes) {
  SiftingSet s;
  s.kind = Kind::split_condition;
  s.poly_disc = g.discriminant();
  if (s.poly_disc == 0) throw std::domain_error("split_condition: polynomial is not squarefree");
  s.poly = std::move(g);
  s.pred = std::move(pred);
  s.excluded = std::move(excluded_primes);
  std::sort(s.excluded.begin(), s.excluded.end());
  return s;
}

SiftingSet SiftingSet::explicit_list(std::vector<u64> primes) {
  SiftingSet s;
  s.kind = Kind::explicit_list;
  for (u64 p : primes)
    if (!is_prime(p)) throw std::domain_error("explicit_list: " + std::to_string(p) + " is not prime");
  s.listed = std::move(primes);
  std::sort(s.listed.begin(), s.listed.end());
  return s;
}

bool SiftingSet::is_excluded(u64 p) const {
  if (std::binary_search(excluded.begin(), excluded.end(), p)) return true;
  if (kind == Kind::split_condition && poly_disc % p == 0) return true;
  return false;
}

bool SiftingSet::contains(u64 p) const {
  switch (kind) {
    case Kind::empty: return false;
    case Kind::congruence_union: {
      if (is_excluded(p)) return false;
      for (auto& c : classes)
        if (static_cast<long long>(p % static_cast<u64>(c.q)) == c.t) return true;
      return false;
    }
    case Kind::split_condition: {
      if (is_excluded(p)) return false;  // covers p | disc
      return pred(CycleType(distinct_degree_parts(poly.c, p)));
    }
    case Kind::explicit_list:
      return std::binary_search(listed.begin(), listed.end(), p);
  }
  return false;
}

std::string SiftingSet::describe() const {
  switch (kind) {
    case Kind::empty: return "empty";
    case Kind::congruence_union: {
      std::string s = "primes with";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        s += (i ? " or p=" : " p=");
        s += std::to_string(classes[i].t) + " (mod " + std::to_string(classes[i].q) + ")";
      }
      return s;
    }
    case Kind::split_condition:
      return "primes where the splitting type of " + poly.str() + " is " + pred.str();
    case Kind::explicit_list:
      return "explicit list of " + std::to_string(listed.size()) + " primes";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// nu, rho, psi
// ---------------------------------------------------------------------------

int nu_of_p_scan(const BinaryForm& f, u64 p) {
  if (p > 10000) throw std::domain_error("nu_of_p_scan: p too large for the scan");
  int count = 0;
  for (u64 x = 0; x < p; ++x)
    if (f.eval_mod(static_cast<i64>(x), 1, p) == 0) ++count;
  if (f.eval_mod(1, 0, p) == 0) ++count;  // [1:0]
  return count;
}

int nu_of_p(const BinaryForm& f, u64 p) {
  if (!is_prime(p)) throw std::domain_error("nu_of_p: p must be prime");
  if (p < 10000) return nu_of_p_scan(f, p);
  int count = count_distinct_roots_mod(f.dehomogenized(), p);
  if (f.eval_mod(1, 0, p) == 0) ++count;
  return count;
}

u64 rho_i_of_p(const BinaryForm& f, u64 p) {
  return static_cast<u64>(nu_of_p(f, p)) * (p - 1) + 1;
}

u64 rho_of_pk_exhaustive(const BinaryForm& f, u64 p, int k) {
  double m = std::pow(static_cast<double>(p), k);
  if (m * m > 4.2e8) throw std::domain_error("rho_of_pk_exhaustive: p^k too large for the scan");
  u64 mod = 1;
  for (int i = 0; i < k; ++i) mod *= p;
  u64 count = 0;
  for (u64 a = 0; a < mod; ++a)
    for (u64 b = 0; b < mod; ++b)
      if (f.eval_mod(static_cast<i64>(a), static_cast<i64>(b), mod) == 0) ++count;
  return count;
}

namespace {

// every projective root of f mod p simple?
bool roots_simple_mod(const BinaryForm& f, u64 p) {
  std::vector<i64> g = f.dehomogenized();
  PolyMod gm = pm_reduce(g, p);
  if (gm.is_zero()) return false;
  int mult_inf = f.degree() - gm.degree();
  if (mult_inf >= 2) return false;
  if (gm.degree() >= 1) {
    PolyMod gp{{}, p};
    gp.c.resize(gm.c.size() - 1);
    for (std::size_t i = 1; i < gm.c.size(); ++i)
      gp.c[i - 1] = static_cast<u64>((unsigned __int128)(gm.c[i]) * (i % p) % p);
    while (!gp.c.empty() && gp.c.back() == 0) gp.c.pop_back();
    if (gp.is_zero()) return gm.degree() == 0;
    PolyMod d = pm_gcd(gm, gp);
    if (!d.is_zero() && d.degree() > 0) return false;
  }
  return true;
}

}  // namespace

u64 rho_of_pk(const BinaryForm& f, u64 p, int k) {
  if (k < 1) throw std::domain_error("rho_of_pk: k must be >= 1");
  if (!is_prime(p)) throw std::domain_error("rho_of_pk: p must be prime");
  if (k == 1) return rho_i_of_p(f, p);
  if (!roots_simple_mod(f, p)) {
    // bad prime: the lifting argument does not apply; exact scan or refuse
    return rho_of_pk_exhaustive(f, p, k);
  }
  const int d = f.degree();
  const int nu = nu_of_p(f, p);
  // primitive solutions: nu * (p^k - p^{k-1}); imprimitive ones descend by p
  unsigned __int128 pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  unsigned __int128 prim = static_cast<unsigned __int128>(nu) * (pk - pk / p);
  unsigned __int128 imprim;
  if (k <= d) {
    unsigned __int128 q = 1;
    for (int i = 0; i < k - 1; ++i) q *= p;
    imprim = q * q;
  } else {
    unsigned __int128 q = 1;
    for (int i = 0; i < d - 1; ++i) q *= p;
    imprim = q * q * rho_of_pk(f, p, k - d);
  }
  unsigned __int128 total = prim + imprim;
  if (total > UINT64_MAX) throw std::overflow_error("rho_of_pk overflow");
  return static_cast<u64>(total);
}

u64 rho_of_n(const BinaryForm& f, u64 n) {
  if (n == 0) throw std::domain_error("rho_of_n: n must be positive");
  unsigned __int128 out = 1;
  for (auto [p, e] : factorize(n)) {
    out *= rho_of_pk(f, p, e);
    if (out > UINT64_MAX) throw std::overflow_error("rho_of_n overflow");
  }
  return static_cast<u64>(out);
}

u64 psi_k(u64 d, int k) {
  if (d == 0 || k < 1) throw std::domain_error("psi_k: need d >= 1, k >= 1");
  unsigned __int128 out = 1;
  for (auto [p, e] : factorize(d)) {
    int lifted = (e + k - 1) / k;
    for (int i = 0; i < lifted; ++i) out *= p;
    if (out > UINT64_MAX) throw std::overflow_error("psi_k overflow");
  }
  return static_cast<u64>(out);
}

// ---------------------------------------------------------------------------
// h_i
// ---------------------------------------------------------------------------

Rational h_i_of_r(const BinaryForm& fi, u64 r, const SiftingSet& P) {
  if (r == 0) throw std::domain_error("h_i_of_r: r must be positive");
  if (r == 1) return 1;
  Rational out = 1;
  for (auto [p, e] : factorize(r)) {
    if (P.is_excluded(p) || P.contains(p)) return 0;  // support only on P'
    u64 rp = rho_i_of_p(fi, p);
    BigInt p2 = BigInt(p) * p;
    if (BigInt(rp) >= p2) throw std::logic_error("h_i_of_r: rho(p) >= p^2");
    u64 rpe = (e == 1) ? rp : rho_of_pk(fi, p, e);
    BigInt p2e = 1;
    for (int i = 0; i < e; ++i) p2e *= p2;
    out *= Rational(BigInt(rpe), p2e) * Rational(p2, p2 - rp);
  }
  return out;
}

std::vector<double> h_i_sum_squarefree(const BinaryForm& fi, const SiftingSet& P,
                                       const std::vector<u64>& xs) {
  if (xs.empty()) throw std::domain_error("h_i_sum_squarefree: empty checkpoint list");
  u64 xmax = *std::max_element(xs.begin(), xs.end());
  if (xmax > 20000000ull) throw std::domain_error("h_i_sum_squarefree: x too large");
  auto spf = smallest_prime_factor_table(static_cast<std::uint32_t>(xmax));

  // per-prime factor values h_i(p) for p in P', as doubles
  std::vector<double> hp(xmax + 1, -1.0);
  for_each_prime(2, xmax, [&](u64 p) {
    if (P.is_excluded(p) || P.contains(p)) return;
    double rp = static_cast<double>(rho_i_of_p(fi, p));
    double p2 = static_cast<double>(p) * static_cast<double>(p);
    hp[p] = rp / (p2 - rp);
  });

  std::vector<u64> sorted_xs = xs;
  std::sort(sorted_xs.begin(), sorted_xs.end());
  std::vector<double> sums;
  double acc = 1.0;  // r = 1 contributes h(1) = 1
  std::size_t ci = 0;
  for (u64 r = 1; r <= xmax; ++r) {
    if (r >= 2) {
      u64 m = r;
      double val = 1.0;
      bool ok = true;
      while (m > 1) {
        u64 p = spf[m];
        m /= p;
        if (m % p == 0 || hp[p] < 0.0) {  // not squarefree, or p not in P'
          ok = false;
          break;
        }
        val *= hp[p];
      }
      if (ok) acc += val;
    }
    while (ci < sorted_xs.size() && sorted_xs[ci] == r) {
      sums.push_back(acc);
      ++ci;
    }
  }
  while (ci < sorted_xs.size()) {
    sums.push_back(acc);
    ++ci;
  }
  return sums;
}

double h_i_growth_exponent(const BinaryForm& fi, const SiftingSet& P,
                           const std::vector<u64>& xs) {
  if (xs.size() < 2) throw std::domain_error("h_i_growth_exponent: need at least two checkpoints");
  std::vector<double> sums = h_i_sum_squarefree(fi, P, xs);
  std::vector<u64> sorted_xs = xs;
  std::sort(sorted_xs.begin(), sorted_xs.end());
  // least squares of log(sum) on log(log x)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = static_cast<int>(sums.size());
  for (int i = 0; i < n; ++i) {
    double X = std::log(std::log(static_cast<double>(sorted_xs[i])));
    double Y = std::log(sums[i]);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// Splitting types and densities
// ---------------------------------------------------------------------------

CycleType splitting_type(const Poly& g, u64 p) {
  if (!is_prime(p)) throw std::domain_error("splitting_type: p must be prime");
  BigInt disc = g.discriminant();
  if (disc % p == 0) throw std::domain_error("splitting_type: p is ramified (p | disc)");
  return CycleType(distinct_degree_parts(g.c, p));
}

namespace {

struct DensityTally {
  u64 hits = 0;
  u64 hits_sq = 0;
  u64 total = 0;
};

DensityEstimate finish_density(u64 num, u64 num_sq, u64 den) {
  DensityEstimate e;
  e.numerator = num;
  e.denominator = den;
  if (den == 0) return e;
  double mean = static_cast<double>(num) / static_cast<double>(den);
  e.estimate = mean;
  double var = static_cast<double>(num_sq) / static_cast<double>(den) - mean * mean;
  if (var < 0) var = 0;
  e.half_width_3sigma = 3.0 * std::sqrt(var / static_cast<double>(den));
  return e;
}

}  // namespace

DensityEstimate chebotarev_density(const Poly& g, const CyclePredicate& pred, u64 X,
                                   int threads) {
  if (X > 100000000ull) throw std::domain_error("chebotarev_density: X capped at 1e8");
  BigInt disc = g.discriminant();
  if (disc == 0) throw std::domain_error("chebotarev_density: polynomial not squarefree");
  Poly gc = g;
  CyclePredicate pc = pred;
  auto tallies = parallel_ranges<DensityTally>(
      2, X, threads, [&, gc, pc](u64 lo, u64 hi, DensityTally& t) {
        for_each_prime(lo, hi, [&](u64 p) {
          if (disc % p == 0) return;  // ramified: excluded from the denominator
          CycleType ct(distinct_degree_parts(gc.c, p));
          ++t.total;
          if (pc(ct)) {
            ++t.hits;
            ++t.hits_sq;
          }
        });
      });
  u64 hits = 0, hits_sq = 0, total = 0;
  for (auto& t : tallies) {
    hits += t.hits;
    hits_sq += t.hits_sq;
    total += t.total;
  }
  return finish_density(hits, hits_sq, total);
}

DensityEstimate theta_for_homogenizer() {
  DensityEstimate e;
  e.estimate = 1.0;
  e.exact = true;
  return e;
}

ThetaReport theta_estimate(const FactoredBinaryForm& f, const SiftingSet& P, u64 X,
                           int threads) {
  if (X > 100000000ull) throw std::domain_error("theta_estimate: X capped at 1e8");
  const std::size_t nf = f.factors.size();

  struct Tally {
    std::vector<u64> nu_sum, nu_sq;
    u64 in_p = 0, total = 0;
  };
  auto tallies = parallel_ranges<Tally>(2, X, threads, [&](u64 lo, u64 hi, Tally& t) {
    t.nu_sum.assign(nf, 0);
    t.nu_sq.assign(nf, 0);
    for_each_prime(lo, hi, [&](u64 p) {
      ++t.total;
      if (P.is_excluded(p) || !P.contains(p)) return;
      ++t.in_p;
      for (std::size_t i = 0; i < nf; ++i) {
        if (f.factors[i].is_homogenizer) continue;
        u64 nu = static_cast<u64>(nu_of_p(f.factors[i].form, p));
        t.nu_sum[i] += nu;
        t.nu_sq[i] += nu * nu;
      }
    });
  });

  ThetaReport rep;
  std::vector<u64> nu_sum(nf, 0), nu_sq(nf, 0);
  for (auto& t : tallies) {
    rep.primes_in_P += t.in_p;
    rep.primes_total += t.total;
    for (std::size_t i = 0; i < nf; ++i) {
      nu_sum[i] += t.nu_sum[i];
      nu_sq[i] += t.nu_sq[i];
    }
  }
  if (rep.primes_in_P == 0)
    throw std::runtime_error("theta_estimate: the sifting set has no primes up to X");

  for (std::size_t i = 0; i < nf; ++i) {
    if (f.factors[i].is_homogenizer) {
      DensityEstimate e = theta_for_homogenizer();
      e.denominator = rep.primes_in_P;
      e.numerator = rep.primes_in_P;
      rep.theta.push_back(e);
    } else {
      DensityEstimate e = finish_density(nu_sum[i], nu_sq[i], rep.primes_in_P);
      if (e.estimate > f.factors[i].form.degree())
        throw std::logic_error("theta exceeds the factor degree");
      rep.theta.push_back(e);
    }
  }
  rep.alpha = finish_density(rep.primes_in_P, rep.primes_in_P, rep.primes_total);
  return rep;
}

}  // namespace sievekit::arith
