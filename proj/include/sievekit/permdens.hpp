#pragma once

#include <functional>
#include <vector>

#include "sievekit/rational.hpp"

namespace sievekit::permdens {

// Cycle lengths of a permutation / splitting type of a prime; a partition of
// the ambient degree, kept sorted ascending.
struct CycleType {
  std::vector<int> parts;

  CycleType() = default;
  explicit CycleType(std::vector<int> p);

  int degree() const;
  // gcd of the parts is 1
  bool parts_coprime() const;
  bool has_fixed_point() const;

  // cycle type of a permutation given as 0-indexed images
  static CycleType of_permutation(const std::vector<int>& images);

  bool operator==(const CycleType&) const = default;
};

// Unsigned Stirling numbers of the first kind: c(m, i) = #{sigma in S_m with
// exactly i cycles}.  Exact; c(m, i) = 0 for i > m.  Requires m <= 64.
BigInt stirling_first(int m, int i);

// n! / prod_j (j^{m_j} m_j!), the size of the S_n conjugacy class with the
// given cycle type (parts in any order).
BigInt cycle_class_size(int n, const std::vector<int>& parts);

// Partitions of n, parts non-increasing.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

// Proportion of sigma in S_n with all cycle lengths divisible by k (k | n):
// the rational product (1/k)(1+1/k)...(m-1+1/k)/m! with m = n/k.
Rational T_k_of_n(int n, int k);

// Same quantity through the Stirling sum (1/m!) sum_i k^{-i} c(m, i);
// independent route, m = n/k <= 64.
Rational T_k_of_n_stirling(int n, int k);

// Proportion of sigma in S_n whose cycle lengths share a common factor,
// via the Moebius sum over T_k.  Exact for n up to 4096.
Rational T_exact(int n);

// (2/sqrt(pi)) n^{1/r - 1} omega(n), r = least prime factor.
double T_upper_bound(int n);

struct ExcludedReport {
  std::vector<int> excluded;   // T(n) above the threshold interval
  std::vector<int> boundary;   // T(n) inside the threshold interval
  long long tail_scanned_to = 0;  // largest n settled exactly above n_max
};

// All n in [2, n_max] with T(n) above the interval [thr_lo, thr_hi];
// finiteness beyond n_max is certified from the upper bound (by least prime
// factor and prime-count families with primorial constraints), with the
// finitely many bound violators above n_max settled by the exact formula.
// Throws if certification fails, with a hint to raise n_max.
ExcludedReport excluded_degrees(const Rational& thr_lo, const Rational& thr_hi, int n_max);
ExcludedReport excluded_degrees(const Rational& threshold, int n_max);

struct GroupSpec {
  enum class Kind { symmetric, alternating, agl1, explicit_perms };
  Kind kind = Kind::symmetric;
  long long parameter = 1;                // n for S_n/A_n, q for AGL(1,q)
  std::vector<std::vector<int>> perms;    // explicit groups: 0-indexed images

  static GroupSpec symmetric(int n);
  static GroupSpec alternating(int n);
  static GroupSpec agl1(long long q);
  static GroupSpec explicit_group(std::vector<std::vector<int>> perms);
};

// Fraction of elements whose cycle lengths are not coprime.
Rational T_of_group(const GroupSpec& g);

// Fraction of fixed-point-free elements.
Rational h_fixed_point_free(const GroupSpec& g);

enum class HwVariant { quadratic, cubic };

struct HwCheck {
  bool satisfied = false;
  Rational lhs;     // sum 1/q_i or 1/(q_i - 1)
  Rational bound;   // 0.39000/d or 0.32380/d
  Rational margin;  // bound - lhs
};

// Degree/prime admissibility test: sum 1/q_i <= 0.39000/d (quadratic,
// degrees <= 2) or sum 1/(q_i-1) <= 0.32380/d (cubic, degrees <= 3), with
// d = sum of degrees.  Exact rational arithmetic.
HwCheck hw_condition_check(const std::vector<int>& degrees, const std::vector<long long>& qs,
                           HwVariant variant);

}  // namespace sievekit::permdens
