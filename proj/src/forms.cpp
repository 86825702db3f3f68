#include "sievekit/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sievekit::arith {

namespace {

[[noreturn]] void parse_fail(const std::string& s, const std::string& why) {
  throw std::domain_error("cannot parse '" + s + "': " + why);
}

struct Term {
  i64 coeff = 1;
  int xdeg = 0, ydeg = 0;
};

// term := [sign] [integer] ['x' ['^' int]] ['y' ['^' int]]
std::vector<Term> parse_terms(const std::string& s, bool allow_y) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i >= s.size()) parse_fail(s, "empty polynomial");
  while (i < s.size()) {
    Term t;
    skip_ws();
    i64 sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!terms.empty()) {
      parse_fail(s, "expected '+' or '-' between terms");
    }
    bool any = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      i64 v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > (1ll << 40)) parse_fail(s, "coefficient too large");
        ++i;
      }
      t.coeff = v;
      any = true;
    }
    auto read_power = [&](char var) -> int {
      if (i < s.size() && s[i] == var) {
        ++i;
        any = true;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            parse_fail(s, "expected exponent");
          int e = 0;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            e = e * 10 + (s[i] - '0');
            if (e > 64) parse_fail(s, "exponent too large");
            ++i;
          }
          return e;
        }
        return 1;
      }
      return 0;
    };
    t.xdeg = read_power('x');
    t.ydeg = read_power('y');
    if (t.ydeg > 0 && !allow_y) parse_fail(s, "'y' not allowed in a univariate polynomial");
    if (!any) parse_fail(s, "expected a term");
    t.coeff *= sign;
    terms.push_back(t);
    skip_ws();
  }
  return terms;
}

}  // namespace

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](i64 c) { return c == 0; });
}

bool BinaryForm::is_y() const { return coeffs.size() == 2 && coeffs[0] == 0 && coeffs[1] == 1; }

i64 BinaryForm::content() const {
  i64 g = 0;
  for (i64 c : coeffs) g = std::gcd(g, std::llabs(c));
  return g;
}

i128 BinaryForm::eval(i64 a, i64 b) const {
  long double mag = std::max(std::llabs(a), std::llabs(b));
  long double bound = 0;
  for (i64 c : coeffs) bound += std::fabs(static_cast<long double>(c));
  bound *= std::pow(std::max<long double>(mag, 1.0L), static_cast<long double>(degree()));
  if (bound > 8e37L) throw std::overflow_error("form evaluation exceeds 128 bits");
  // Horner in x with y powers
  i128 acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    acc = acc * a + static_cast<i128>(coeffs[i]) *
                        [&] {
                          i128 yp = 1;
                          for (std::size_t t = 0; t < i; ++t) yp *= b;
                          return yp;
                        }();
  }
  // the loop above multiplies earlier terms by a once per step: total x^{d-i} y^i
  return acc;
}

u64 BinaryForm::eval_mod(i64 a, i64 b, u64 p) const {
  u64 am = static_cast<u64>(((a % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
  u64 bm = static_cast<u64>(((b % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
  u64 acc = 0;
  u64 yp = 1;
  // sum c[i] a^{d-i} b^i: accumulate backwards so each step multiplies by a
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    i64 c = coeffs[i] % static_cast<i64>(p);
    if (c < 0) c += static_cast<i64>(p);
    acc = (static_cast<unsigned __int128>(acc) * am + static_cast<unsigned __int128>(c) * yp) % p;
    yp = static_cast<u64>(static_cast<unsigned __int128>(yp) * bm % p);
  }
  return acc;
}

std::vector<i64> BinaryForm::dehomogenized() const {
  // f(x,1) = sum c[i] x^{d-i}; ascending inx
  std::vector<i64> out(coeffs.rbegin(), coeffs.rend());
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  std::vector<i64> c(coeffs.size() + o.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) {
      i128 prod = static_cast<i128>(coeffs[i]) * o.coeffs[j] + c[i + j];
      if (prod > INT64_MAX / 2 || prod < INT64_MIN / 2)
        throw std::overflow_error("form product coefficients overflow");
      c[i + j] = static_cast<i64>(prod);
    }
  return BinaryForm{c};
}

bool BinaryForm::proportional_to(const BinaryForm& o) const {
  if (coeffs.size() != o.coeffs.size()) return false;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (static_cast<i128>(coeffs[i]) * o.coeffs[j] != static_cast<i128>(coeffs[j]) * o.coeffs[i])
        return false;
  return true;
}

std::string BinaryForm::str() const {
  std::string out;
  const int d = degree();
  for (int i = 0; i <= d; ++i) {
    i64 c = coeffs[i];
    if (c == 0) continue;
    int xd = d - i, yd = i;
    if (!out.empty())
      out += (c > 0) ? "+" : "-";
    else if (c < 0)
      out += "-";
    i64 ac = std::llabs(c);
    if (ac != 1 || (xd == 0 && yd == 0)) out += std::to_string(ac);
    if (xd > 0) out += (xd == 1) ? "x" : ("x^" + std::to_string(xd));
    if (yd > 0) out += (yd == 1) ? "y" : ("y^" + std::to_string(yd));
  }
  return out.empty() ? "0" : out;
}

BinaryForm BinaryForm::parse(const std::string& s) {
  auto terms = parse_terms(s, true);
  int deg = 0;
  for (auto& t : terms) deg = std::max(deg, t.xdeg + t.ydeg);
  for (auto& t : terms)
    if (t.coeff != 0 && t.xdeg + t.ydeg != deg)
      parse_fail(s, "form is not homogeneous");
  std::vector<i64> c(deg + 1, 0);
  for (auto& t : terms) c[t.ydeg] += t.coeff;
  BinaryForm f{c};
  if (f.is_zero()) parse_fail(s, "zero form");
  return f;
}

// ---------------------------------------------------------------------------

int FactoredBinaryForm::degree() const {
  int d = 0;
  for (auto& f : factors) d += f.form.degree() * f.multiplicity;
  return d;
}

BinaryForm FactoredBinaryForm::product() const {
  BinaryForm p{{1}};
  for (auto& f : factors)
    for (int m = 0; m < f.multiplicity; ++m) p = p * f.form;
  return p;
}

std::string FactoredBinaryForm::str() const {
  std::string out;
  for (auto& f : factors) {
    out += "(" + f.form.str() + ")";
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

FactoredBinaryForm FactoredBinaryForm::make(std::vector<FormFactor> factors) {
  if (factors.empty()) throw std::domain_error("form must have at least one factor");
  for (auto& f : factors) {
    if (f.form.is_zero()) throw std::domain_error("zero factor");
    if (f.form.content() != 1)
      throw std::domain_error("factor '" + f.form.str() + "' must have content 1");
    if (f.multiplicity < 1) throw std::domain_error("factor multiplicity must be >= 1");
    f.is_homogenizer = f.form.is_y();
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i].form.proportional_to(factors[j].form))
        throw std::domain_error("factors '" + factors[i].form.str() + "' and '" +
                                factors[j].form.str() + "' are proportional");

  // squarefree product of the distinct factors: y appears at most to the first
  // power, and the dehomogenized part has squarefree content
  FactoredBinaryForm out{std::move(factors)};
  BinaryForm sq{{1}};
  int ypow = 0;
  for (auto& f : out.factors) {
    if (f.is_homogenizer)
      ++ypow;
    else
      sq = sq * f.form;
  }
  if (ypow > 1) throw std::domain_error("repeated homogenizing factor y");
  std::vector<i64> p = sq.dehomogenized();
  std::vector<BigInt> pb(p.begin(), p.end());
  std::vector<BigInt> pd;
  for (std::size_t i = 1; i < pb.size(); ++i) pd.push_back(pb[i] * static_cast<int>(i));
  if (!pd.empty()) {
    std::vector<BigInt> g = int_poly_gcd(pb, pd);
    if (g.size() > 1)
      throw std::domain_error("squarefree product of factors has zero discriminant");
  }
  return out;
}

FactoredBinaryForm FactoredBinaryForm::parse(const std::string& s) {
  // split into top-level units: parenthesized groups with optional ^k,
  // and bare polynomial runs; '*' separators optional
  std::vector<FormFactor> factors;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
  };
  skip();
  if (i >= s.size()) parse_fail(s, "empty form");
  while (i < s.size()) {
    skip();
    if (i >= s.size()) break;
    if (s[i] == '(') {
      int depth = 1;
      std::size_t start = ++i;
      while (i < s.size() && depth > 0) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        ++i;
      }
      if (depth != 0) parse_fail(s, "unbalanced parentheses");
      std::string inner = s.substr(start, i - start - 1);
      int mult = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          parse_fail(s, "expected multiplicity");
        mult = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          mult = mult * 10 + (s[i++] - '0');
        if (mult < 1 || mult > 8) parse_fail(s, "bad multiplicity");
      }
      factors.push_back({BinaryForm::parse(inner), mult, false});
    } else {
      // bare run up to the next top-level '('
      std::size_t start = i;
      while (i < s.size() && s[i] != '(') ++i;
      std::string run = s.substr(start, i - start);
      while (!run.empty() && (run.back() == '*' || std::isspace(static_cast<unsigned char>(run.back()))))
        run.pop_back();
      if (!run.empty()) factors.push_back({BinaryForm::parse(run), 1, false});
    }
    skip();
  }
  return make(std::move(factors));
}

// ---------------------------------------------------------------------------

BigInt Poly::eval_big(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::vector<BigInt> trim(std::vector<BigInt> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<BigInt> primitive_part(std::vector<BigInt> v) {
  BigInt g = 0;
  for (auto& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
  if (!v.empty() && v.back() < 0)
    for (auto& x : v) x = -x;
  return v;
}

// pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero)
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  BigInt lb = b.back();
  while (a.size() >= b.size()) {
    BigInt la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

std::vector<BigInt> int_poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
  a = primitive_part(trim(std::move(a)));
  b = primitive_part(trim(std::move(b)));
  while (!b.empty()) {
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<BigInt> r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt Poly::discriminant() const {
  // resultant(g, g') via the Sylvester matrix with Bareiss elimination
  if (degree() < 1) return 1;
  std::vector<BigInt> f(c.begin(), c.end());
  std::vector<BigInt> fp;
  for (std::size_t i = 1; i < c.size(); ++i) fp.push_back(BigInt(c[i]) * static_cast<int>(i));
  int n = static_cast<int>(f.size()) - 1;
  int m = static_cast<int>(fp.size()) - 1;
  int dim = n + m;
  std::vector<std::vector<BigInt>> mat(dim, std::vector<BigInt>(dim, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) mat[i][i + j] = f[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) mat[m + i][i + j] = fp[m - j];
  // Bareiss
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < dim - 1; ++k) {
    if (mat[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < dim; ++r)
        if (mat[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  BigInt res = mat[dim - 1][dim - 1] * sign;
  // disc = (-1)^{n(n-1)/2} res / lc
  BigInt disc = res / f[n];
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

std::string Poly::str() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    i64 v = c[i];
    if (v == 0) continue;
    if (!out.empty())
      out += (v > 0) ? "+" : "-";
    else if (v < 0)
      out += "-";
    i64 av = std::llabs(v);
    if (av != 1 || i == 0) out += std::to_string(av);
    if (i >= 1) out += (i == 1) ? "x" : ("x^" + std::to_string(i));
  }
  return out.empty() ? "0" : out;
}

Poly Poly::parse(const std::string& s) {
  auto terms = parse_terms(s, false);
  int deg = 0;
  for (auto& t : terms) deg = std::max(deg, t.xdeg);
  std::vector<i64> c(deg + 1, 0);
  for (auto& t : terms) c[t.xdeg] += t.coeff;
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  Poly p{c};
  if (p.degree() < 1) throw std::domain_error("polynomial '" + s + "' must be non-constant");
  if (!p.monic()) throw std::domain_error("polynomial '" + s + "' must be monic");
  return p;
}

bool has_linear_factor(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (f.coeffs[0] == 0) return true;  // y | f
  if (f.coeffs[d] == 0) return true;  // x | f
  // rational root [p : q] of f needs p | c_d and q | c_0
  auto divisors = [](i64 n) {
    std::vector<i64> out;
    n = std::llabs(n);
    for (i64 i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        out.push_back(i);
        if (i != n / i) out.push_back(n / i);
      }
    return out;
  };
  for (i64 p : divisors(f.coeffs[d])) {
    for (i64 q : divisors(f.coeffs[0])) {
      if (std::gcd(p, q) != 1) continue;
      for (i64 sp : {p, -p}) {
        if (f.eval(sp, q) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace sievekit::arith
