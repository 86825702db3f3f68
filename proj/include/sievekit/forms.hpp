#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sievekit/rational.hpp"

namespace sievekit::arith {

using i64 = long long;
using i128 = __int128;
using u64 = std::uint64_t;

// Integer binary form sum_i c[i] x^{d-i} y^i; c has d+1 entries.
struct BinaryForm {
  std::vector<i64> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  bool is_y() const;  // the homogenizing factor y
  i64 content() const;

  // f(a, b) in 128-bit; throws on potential overflow.
  i128 eval(i64 a, i64 b) const;
  u64 eval_mod(i64 a, i64 b, u64 p) const;

  // f(x, 1) as coefficients in ascending powers of x
  std::vector<i64> dehomogenized() const;

  BinaryForm operator*(const BinaryForm& o) const;
  bool proportional_to(const BinaryForm& o) const;

  std::string str() const;
  // "x^2-2y^2", "-x^2+3y^2", "y", "3x", ...
  static BinaryForm parse(const std::string& s);
};

struct FormFactor {
  BinaryForm form;
  int multiplicity = 1;
  bool is_homogenizer = false;  // true for the y factor
};

// A form given as a product of pairwise non-proportional content-1 factors;
// the product of the distinct factors must be squarefree (nonzero
// discriminant).  Validation happens in make()/parse().
struct FactoredBinaryForm {
  std::vector<FormFactor> factors;

  int degree() const;  // with multiplicities
  BinaryForm product() const;
  std::string str() const;

  static FactoredBinaryForm make(std::vector<FormFactor> factors);
  // "(x^2-2y^2)(-x^2+3y^2)", "y*(x^2+y^2)", "(x^2+y^2)^2", "x"
  static FactoredBinaryForm parse(const std::string& s);
};

// Monic univariate integer polynomial, ascending coefficients.
struct Poly {
  std::vector<i64> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool monic() const { return !c.empty() && c.back() == 1; }
  BigInt eval_big(const BigInt& x) const;

  BigInt discriminant() const;  // resultant(g, g') / lc, exact

  std::string str() const;
  static Poly parse(const std::string& s);  // "x^3-2"
};

// gcd of integer polynomials (primitive, via a pseudo-remainder sequence);
// used for squarefreeness checks.
std::vector<BigInt> int_poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b);

// Does the form have a linear factor over Q (including x and y)?
bool has_linear_factor(const BinaryForm& f);

}  // namespace sievekit::arith
