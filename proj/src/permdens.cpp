#include "sievekit/permdens.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sievekit/primes.hpp"

namespace sievekit::permdens {

CycleType::CycleType(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw std::domain_error("CycleType: parts must be positive");
  if (parts.empty()) throw std::domain_error("CycleType: empty");
  std::sort(parts.begin(), parts.end());
}

int CycleType::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool CycleType::parts_coprime() const {
  int g = 0;
  for (int x : parts) g = std::gcd(g, x);
  return g == 1;
}

bool CycleType::has_fixed_point() const {
  return std::find(parts.begin(), parts.end(), 1) != parts.end();
}

CycleType CycleType::of_permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = images[j];
      if (j < 0 || j >= n) throw std::domain_error("not a permutation");
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(parts);
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kStirlingCap = 64;
constexpr int kTExactCap = 4096;

const BigInt& factorial(int n) {
  static std::vector<BigInt> cache{1};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * int(cache.size()));
  return cache[n];
}

}  // namespace

BigInt stirling_first(int m, int i) {
  if (m < 0 || i < 0) throw std::domain_error("stirling_first: negative argument");
  if (m > kStirlingCap) throw std::domain_error("stirling_first: m exceeds 64");
  if (i > m) return 0;
  static std::vector<std::vector<BigInt>> table;  // table[m][i]
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) table.push_back({BigInt(1)});
  while (static_cast<int>(table.size()) <= m) {
    int mm = static_cast<int>(table.size());
    std::vector<BigInt> row(mm + 1);
    row[0] = 0;
    for (int ii = 1; ii <= mm; ++ii) {
      BigInt up = (ii <= mm - 1) ? table[mm - 1][ii] : BigInt(0);
      row[ii] = table[mm - 1][ii - 1] + BigInt(mm - 1) * up;
    }
    table.push_back(std::move(row));
  }
  return table[m][i];
}

BigInt cycle_class_size(int n, const std::vector<int>& parts) {
  if (std::accumulate(parts.begin(), parts.end(), 0) != n)
    throw std::domain_error("cycle_class_size: parts must sum to n");
  std::map<int, int> mult;
  for (int j : parts) mult[j]++;
  BigInt den = 1;
  for (auto [j, m] : mult) {
    BigInt jp = 1;
    for (int t = 0; t < m; ++t) jp *= j;
    den *= jp * factorial(m);
  }
  return factorial(n) / den;
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 0) throw std::domain_error("for_each_partition: n < 0");
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      fn(parts);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      parts.push_back(p);
      rec(rem - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

Rational T_k_of_n(int n, int k) {
  if (n < 1 || k < 1 || n % k != 0) throw std::domain_error("T_k_of_n: k must divide n >= 1");
  const int m = n / k;
  BigInt num = 1;
  for (int j = 0; j < m; ++j) num *= BigInt(1 + j * k);
  BigInt den = factorial(m);
  BigInt kp = 1;
  for (int j = 0; j < m; ++j) kp *= k;
  return Rational(num, den * kp);
}

Rational T_k_of_n_stirling(int n, int k) {
  if (n < 1 || k < 1 || n % k != 0) throw std::domain_error("T_k_of_n_stirling: k must divide n");
  const int m = n / k;
  if (m > kStirlingCap) throw std::domain_error("T_k_of_n_stirling: n/k exceeds 64");
  // (1/m!) sum_i k^{-i} c(m, i)  =  (1/m!) (sum_i c(m,i) k^{m-i}) / k^m
  BigInt acc = 0;
  BigInt kpow = 1;  // k^{m-i} built downward
  for (int i = m; i >= 1; --i) {
    acc += stirling_first(m, i) * kpow;
    kpow *= k;
  }
  BigInt km = kpow;  // k^m
  return Rational(acc, factorial(m) * km);
}

namespace {

std::vector<long long> divisors_of(long long n) {
  std::vector<long long> d;
  for (long long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

int moebius(long long n) {
  auto f = arith::factorize(static_cast<std::uint64_t>(n));
  for (auto& [p, e] : f)
    if (e > 1) return 0;
  return (f.size() % 2 == 0) ? 1 : -1;
}

}  // namespace

Rational T_exact(int n) {
  if (n < 1) throw std::domain_error("T_exact: n must be positive");
  if (n > kTExactCap) throw std::domain_error("T_exact: n too large");
  static std::map<int, Rational> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Rational sum = 0;
  for (long long k : divisors_of(n)) {
    int mu_k = moebius(k);
    if (mu_k == 0) continue;
    sum += Rational(mu_k) * T_k_of_n(n, static_cast<int>(k));
  }
  Rational out = Rational(1) - sum;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, out);
  return out;
}

double T_upper_bound(int n) {
  if (n < 2) throw std::domain_error("T_upper_bound: n must be >= 2");
  auto f = arith::factorize(static_cast<std::uint64_t>(n));
  double r = static_cast<double>(f.front().first);
  double omega = static_cast<double>(f.size());
  return 2.0 / std::sqrt(M_PI) * std::pow(static_cast<double>(n), 1.0 / r - 1.0) * omega;
}

// ---------------------------------------------------------------------------
// Excluded degrees with tail certification.
//
// For n > n_max with least prime factor r and omega(n) = k we have
//   T(n) < (2/sqrt(pi)) k n^{1/r - 1},
// and n >= primorial of the first k primes >= r.  For each family (r, k) the
// bound falls below the threshold once n >= cut(r, k); families whose
// primorial already exceeds the cut contribute nothing, and the remaining
// finitely many n <= max cut are settled exactly.
// ---------------------------------------------------------------------------

namespace {

double primorial_from(int r, int k) {
  double p = 1.0;
  std::uint64_t q = r;
  for (int i = 0; i < k; ++i) {
    while (!arith::is_prime(q)) ++q;
    p *= static_cast<double>(q);
    ++q;
    if (p > 1e30) return p;
  }
  return p;
}

}  // namespace

ExcludedReport excluded_degrees(const Rational& thr_lo, const Rational& thr_hi, int n_max) {
  if (n_max < 2) throw std::domain_error("excluded_degrees: n_max must be >= 2");
  if (!(thr_lo > 0 && thr_lo <= thr_hi && thr_hi < 1))
    throw std::domain_error("excluded_degrees: threshold must lie in (0, 1)");

  ExcludedReport out;
  for (int n = 2; n <= n_max; ++n) {
    Rational t = T_exact(n);
    if (t > thr_hi)
      out.excluded.push_back(n);
    else if (t >= thr_lo)
      out.boundary.push_back(n);
  }

  // conservative double version of the lower threshold
  double thrd = to_double(thr_lo) * (1.0 - 1e-12);
  const double c0 = 2.0 / std::sqrt(M_PI);

  long long global_cut = n_max;
  for (int r : {2, 3, 5, 7}) {  // r = 7 stands for "least prime >= 7"
    double e = 1.0 - 1.0 / static_cast<double>(r);
    for (int k = 1; k <= 64; ++k) {
      double prim = primorial_from(r, k) * (1.0 - 1e-9);
      if (prim > 1e25) break;
      double cut = std::pow(c0 * k / thrd, 1.0 / e) * (1.0 + 1e-9) + 1.0;
      if (prim >= cut) continue;  // every family member is already past the cut
      global_cut = std::max(global_cut, static_cast<long long>(cut));
    }
  }
  if (global_cut > kTExactCap)
    throw std::runtime_error(
        "excluded_degrees: cannot certify finiteness at this n_max; increase n_max");

  for (long long n = n_max + 1; n <= global_cut; ++n) {
    double bound = T_upper_bound(static_cast<int>(n)) * (1.0 + 1e-9);
    if (bound < thrd) continue;
    Rational t = T_exact(static_cast<int>(n));
    if (t > thr_hi)
      throw std::runtime_error("excluded_degrees: degree above n_max exceeds the threshold; "
                               "increase n_max");
    if (t >= thr_lo)
      throw std::runtime_error("excluded_degrees: boundary value above n_max; increase n_max");
  }
  out.tail_scanned_to = global_cut;
  return out;
}

ExcludedReport excluded_degrees(const Rational& threshold, int n_max) {
  return excluded_degrees(threshold, threshold, n_max);
}

// ---------------------------------------------------------------------------
// Groups.
// ---------------------------------------------------------------------------

GroupSpec GroupSpec::symmetric(int n) {
  if (n < 1 || n > 16) throw std::domain_error("symmetric: n must lie in [1, 16]");
  return {Kind::symmetric, n, {}};
}
GroupSpec GroupSpec::alternating(int n) {
  if (n < 1 || n > 16) throw std::domain_error("alternating: n must lie in [1, 16]");
  return {Kind::alternating, n, {}};
}
GroupSpec GroupSpec::agl1(long long q) {
  if (q < 2 || q > 10000 || !arith::is_prime(static_cast<std::uint64_t>(q)))
    throw std::domain_error("agl1: q must be a prime <= 1e4");
  return {Kind::agl1, q, {}};
}
GroupSpec GroupSpec::explicit_group(std::vector<std::vector<int>> perms) {
  GroupSpec g{Kind::explicit_perms, 0, std::move(perms)};
  if (g.perms.empty()) throw std::domain_error("explicit group: empty list");
  const int n = static_cast<int>(g.perms.front().size());
  if (n < 1 || n > 10) throw std::domain_error("explicit group: degree must lie in [1, 10]");
  g.parameter = n;
  if (g.perms.size() > 6000) throw std::domain_error("explicit group: too many elements");

  std::set<std::vector<int>> elems;
  for (auto& p : g.perms) {
    if (static_cast<int>(p.size()) != n) throw std::domain_error("explicit group: mixed degrees");
    std::vector<char> seen(n, 0);
    for (int x : p) {
      if (x < 0 || x >= n || seen[x]) throw std::domain_error("explicit group: not a permutation");
      seen[x] = 1;
    }
    if (!elems.insert(p).second) throw std::domain_error("explicit group: duplicate element");
  }
  // closure under composition (and hence inverses, by finiteness)
  for (auto& p : g.perms) {
    for (auto& q : g.perms) {
      std::vector<int> pq(n);
      for (int i = 0; i < n; ++i) pq[i] = p[q[i]];
      if (!elems.count(pq)) throw std::domain_error("explicit group: not closed under composition");
    }
  }
  return g;
}

namespace {

// sum over S_n (or A_n) cycle-type classes of weight(parts), as a fraction of
// the group order
Rational class_average(int n, bool alternating_only,
                       const std::function<bool(const std::vector<int>&)>& pred) {
  BigInt hit = 0, total = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    if (alternating_only && (n - static_cast<int>(parts.size())) % 2 != 0) return;
    BigInt sz = cycle_class_size(n, parts);
    total += sz;
    if (pred(parts)) hit += sz;
  });
  if (total == 0) throw std::logic_error("empty group");
  return Rational(hit, total);
}

bool parts_not_coprime(const std::vector<int>& parts) {
  int g = 0;
  for (int x : parts) g = std::gcd(g, x);
  return g != 1;
}

bool parts_fixed_point_free(const std::vector<int>& parts) {
  return std::find(parts.begin(), parts.end(), 1) == parts.end();
}

Rational explicit_average(const GroupSpec& g, bool (*pred)(const std::vector<int>&)) {
  BigInt hit = 0;
  for (auto& p : g.perms) {
    CycleType t = CycleType::of_permutation(p);
    std::vector<int> parts = t.parts;
    if (pred(parts)) ++hit;
  }
  return Rational(hit, BigInt(g.perms.size()));
}

}  // namespace

Rational T_of_group(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::symmetric:
      if (g.parameter > 12) throw std::domain_error("T_of_group: symmetric degree must be <= 12");
      return class_average(static_cast<int>(g.parameter), false, parts_not_coprime);
    case GroupSpec::Kind::alternating:
      if (g.parameter > 12) throw std::domain_error("T_of_group: alternating degree must be <= 12");
      return class_average(static_cast<int>(g.parameter), true, parts_not_coprime);
    case GroupSpec::Kind::agl1:
      // only the q-1 translations are fixed-point-free q-cycles; everything
      // else fixes a point, so its cycle lengths include 1
      return Rational(1, g.parameter);
    case GroupSpec::Kind::explicit_perms:
      return explicit_average(g, parts_not_coprime);
  }
  throw std::logic_error("unreachable");
}

Rational h_fixed_point_free(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::symmetric:
      if (g.parameter > 12) throw std::domain_error("h: symmetric degree must be <= 12");
      return class_average(static_cast<int>(g.parameter), false, parts_fixed_point_free);
    case GroupSpec::Kind::alternating:
      if (g.parameter > 12) throw std::domain_error("h: alternating degree must be <= 12");
      return class_average(static_cast<int>(g.parameter), true, parts_fixed_point_free);
    case GroupSpec::Kind::agl1:
      return Rational(1, g.parameter);
    case GroupSpec::Kind::explicit_perms:
      return explicit_average(g, parts_fixed_point_free);
  }
  throw std::logic_error("unreachable");
}

HwCheck hw_condition_check(const std::vector<int>& degrees, const std::vector<long long>& qs,
                           HwVariant variant) {
  if (degrees.empty() || degrees.size() != qs.size())
    throw std::domain_error("hw_condition_check: degrees and primes must pair up");
  int d = 0;
  for (int deg : degrees) {
    if (deg < 1 || deg > 3) throw std::domain_error("hw_condition_check: degrees must lie in [1,3]");
    if (variant == HwVariant::quadratic && deg > 2)
      throw std::domain_error("hw_condition_check: quadratic variant needs degrees <= 2");
    d += deg;
  }
  Rational lhs = 0;
  for (long long q : qs) {
    if (q < 2 || !arith::is_prime(static_cast<std::uint64_t>(q)))
      throw std::domain_error("hw_condition_check: q must be prime");
    lhs += (variant == HwVariant::quadratic) ? Rational(1, q) : Rational(1, q - 1);
  }
  Rational c = (variant == HwVariant::quadratic) ? Rational(39, 100) : Rational(1619, 5000);
  HwCheck out;
  out.lhs = lhs;
  out.bound = c / d;
  out.margin = out.bound - lhs;
  out.satisfied = (lhs <= out.bound);
  return out;
}

}  // namespace sievekit::permdens
