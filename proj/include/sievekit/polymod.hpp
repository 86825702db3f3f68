#pragma once

#include <cstdint>
#include <vector>

#include "sievekit/forms.hpp"

namespace sievekit::arith {

// Dense univariate polynomials over F_p (ascending coefficients, p <= ~1e9).

struct PolyMod {
  std::vector<u64> c;
  u64 p = 2;

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
};

PolyMod pm_reduce(const std::vector<i64>& ascending, u64 p);
PolyMod pm_mulmod(const PolyMod& a, const PolyMod& b, const PolyMod& mod);
PolyMod pm_rem(PolyMod a, const PolyMod& mod);
PolyMod pm_gcd(PolyMod a, PolyMod b);
// x^e mod m
PolyMod pm_xpow_mod(u64 e, const PolyMod& mod);
// h^e mod m
PolyMod pm_pow_mod(PolyMod h, u64 e, const PolyMod& mod);

// Number of distinct roots of f in F_p (degree of gcd(x^p - x, f)); f need
// not be squarefree.
int count_distinct_roots_mod(const std::vector<i64>& ascending, u64 p);

// Degrees of the irreducible factors of a monic polynomial mod p (with
// multiplicity one each); requires f squarefree mod p.  Distinct-degree
// factorization by gcds with x^{p^d} - x; no splitting into actual factors.
std::vector<int> distinct_degree_parts(const std::vector<i64>& monic_ascending, u64 p);

// All roots of f mod m for a prime power m = p^e: roots mod p by scan
// (p capped), then Hensel lifting of simple roots; non-simple roots are
// refused (caller keeps such primes in the excluded set).
std::vector<u64> roots_mod_prime(const std::vector<i64>& ascending, u64 p);

}  // namespace sievekit::arith
