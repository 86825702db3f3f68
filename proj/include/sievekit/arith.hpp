#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sievekit/forms.hpp"
#include "sievekit/permdens.hpp"
#include "sievekit/polymod.hpp"
#include "sievekit/primes.hpp"

namespace sievekit::arith {

using permdens::CycleType;

// ---------------------------------------------------------------------------
// Predicates on splitting types / cycle types.
// ---------------------------------------------------------------------------
struct CyclePredicate {
  enum class Kind { always, no_part_one, has_part_one, non_coprime, exact_type };
  Kind kind = Kind::always;
  std::vector<int> type;  // for exact_type, sorted ascending

  bool operator()(const CycleType& t) const;
  std::string str() const;
  // "always" | "no-part-1" | "has-part-1" | "non-coprime" | "type=a,b,..."
  static CyclePredicate parse(const std::string& s);
};

// ---------------------------------------------------------------------------
// Sifting sets: the prime sets P whose members must not divide f(a,b).
// ---------------------------------------------------------------------------
struct CongruencePair {
  long long t = 0;
  long long q = 1;  // p = t (mod q), gcd(t, q) = 1
};

struct SiftingSet {
  enum class Kind { empty, congruence_union, split_condition, explicit_list };
  Kind kind = Kind::empty;
  std::vector<u64> excluded;            // finite set S, sorted
  std::vector<CongruencePair> classes;  // congruence_union
  Poly poly;                            // split_condition
  CyclePredicate pred;                  // split_condition
  BigInt poly_disc;                     // split_condition: primes dividing it act as excluded
  std::vector<u64> listed;              // explicit_list, sorted

  static SiftingSet none();
  static SiftingSet congruence_union(std::vector<CongruencePair> classes,
                                     std::vector<u64> excluded_primes);
  static SiftingSet split_condition(Poly g, CyclePredicate pred,
                                    std::vector<u64> excluded_primes);
  static SiftingSet explicit_list(std::vector<u64> primes);

  bool is_empty_set() const { return kind == Kind::empty; }
  bool is_excluded(u64 p) const;
  bool contains(u64 p) const;  // excluded primes are never members
  std::string describe() const;
};

// ---------------------------------------------------------------------------
// Counting functions.
// ---------------------------------------------------------------------------

// Number of projective roots of f over F_p: scan over P^1(F_p) for small p,
// distinct-root count of f(x,1) via gcd(x^p - x, .) plus the point at
// infinity for large p.
int nu_of_p(const BinaryForm& f, u64 p);
int nu_of_p_scan(const BinaryForm& f, u64 p);  // exhaustive route, p <= 1e4

// rho(p) = nu(p)(p-1) + 1.
u64 rho_i_of_p(const BinaryForm& f, u64 p);

// Pairs (a,b) mod p^k with f(a,b) = 0 mod p^k.  Off the bad primes this uses
// Hensel lifting of the (simple) projective roots plus the imprimitive
// recursion; bad primes fall back to the exhaustive scan and are rejected if
// too large for it.
u64 rho_of_pk(const BinaryForm& f, u64 p, int k);
u64 rho_of_pk_exhaustive(const BinaryForm& f, u64 p, int k);  // p^{2k} <= ~4e8
u64 rho_of_n(const BinaryForm& f, u64 n);                     // multiplicative

// Multiplicative: p^r -> p^{ceil(r/k)}.
u64 psi_k(u64 d, int k);

// h_i(r) = rho_i(r)/r^2 prod_{p|r}(1 - rho_i(p)/p^2)^{-1}, zero unless every
// prime factor of r avoids P and S; multiplicative extension off squarefree r.
Rational h_i_of_r(const BinaryForm& fi, u64 r, const SiftingSet& P);

// sum of h_i(r) over squarefree r <= x supported on P' = complement of P u S,
// reported at each checkpoint in xs (ascending).
std::vector<double> h_i_sum_squarefree(const BinaryForm& fi, const SiftingSet& P,
                                       const std::vector<u64>& xs);
// least-squares slope of log(sum) against log(log x) on the checkpoints
double h_i_growth_exponent(const BinaryForm& fi, const SiftingSet& P,
                           const std::vector<u64>& xs);

// Degrees of the irreducible factors of g mod p; throws "ramified" when
// p | disc(g).
CycleType splitting_type(const Poly& g, u64 p);

struct DensityEstimate {
  u64 numerator = 0;    // accumulated statistic over the examined primes
  u64 denominator = 0;  // primes examined
  double estimate = 0.0;
  double half_width_3sigma = 0.0;
  bool exact = false;
};

// Fraction of unramified primes <= X whose splitting type satisfies the
// predicate, with the 3-sigma binomial half width.
DensityEstimate chebotarev_density(const Poly& g, const CyclePredicate& pred, u64 X,
                                   int threads = 0);

struct ThetaReport {
  std::vector<DensityEstimate> theta;  // one per factor, factor order
  DensityEstimate alpha;               // density of P among all primes
  u64 primes_in_P = 0;
  u64 primes_total = 0;
};

// theta_i = (sum_{p in P, p <= X} nu_i(p)) / #P_{<=X} per factor, and
// alpha = #P_{<=X} / pi(X).
ThetaReport theta_estimate(const FactoredBinaryForm& f, const SiftingSet& P, u64 X,
                           int threads = 0);

}  // namespace sievekit::arith
