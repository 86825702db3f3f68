#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "sievekit/arith.hpp"

using namespace sievekit;
using namespace sievekit::arith;

TEST_CASE("form parsing round trips and rejects junk") {
  BinaryForm f = BinaryForm::parse("x^2-2y^2");
  CHECK(f.coeffs == std::vector<i64>{1, 0, -2});
  CHECK(BinaryForm::parse("-x^2+3y^2").coeffs == std::vector<i64>{-1, 0, 3});
  CHECK(BinaryForm::parse("y").coeffs == std::vector<i64>{0, 1});
  CHECK(BinaryForm::parse("x").coeffs == std::vector<i64>{1, 0});
  CHECK(BinaryForm::parse("x^2-2y^2").str() == "x^2-2y^2");
  CHECK_THROWS_AS(BinaryForm::parse("x^2-2y"), std::domain_error);  // not homogeneous
  CHECK_THROWS_AS(BinaryForm::parse(""), std::domain_error);
  CHECK_THROWS_AS(BinaryForm::parse("x^2 + zebra"), std::domain_error);

  FactoredBinaryForm g = FactoredBinaryForm::parse("(x^2-2y^2)(-x^2+3y^2)");
  CHECK(g.factors.size() == 2);
  CHECK(g.degree() == 4);
  FactoredBinaryForm h = FactoredBinaryForm::parse("y*(x^2+y^2)");
  CHECK(h.factors.size() == 2);
  CHECK(h.factors[0].is_homogenizer);

  CHECK_THROWS_AS(FactoredBinaryForm::parse("(x+y)(2x+2y)"), std::domain_error);  // content 2
  CHECK_THROWS_AS(FactoredBinaryForm::parse("(x+y)(x+y)"), std::domain_error);    // proportional
  CHECK_THROWS_AS(FactoredBinaryForm::parse("(x+y)(-x-y)"), std::domain_error);   // proportional
}

TEST_CASE("form evaluation and overflow guard") {
  BinaryForm f = BinaryForm::parse("x^2-2y^2");
  CHECK(static_cast<long long>(f.eval(3, 2)) == 1);
  CHECK(static_cast<long long>(f.eval(-3, 2)) == 1);
  CHECK(f.eval_mod(3, 2, 7) == 1);
  BinaryForm big = BinaryForm::parse("x^8+y^8");
  CHECK_THROWS_AS(big.eval(1000000000000ll, 1), std::overflow_error);
}

TEST_CASE("poly parsing and discriminant") {
  Poly g = Poly::parse("x^3-2");
  CHECK(g.c == std::vector<i64>{-2, 0, 0, 1});
  CHECK(g.discriminant() == BigInt(-108));  // disc(x^3 + c) = -27 c^2
  CHECK(Poly::parse("x^2-2").discriminant() == BigInt(8));
  CHECK_THROWS_AS(Poly::parse("2x^2-1"), std::domain_error);  // not monic
  CHECK_THROWS_AS(Poly::parse("x^2-2y^2"), std::domain_error);
}

TEST_CASE("nu: trivial homogenizer, quadratic examples, both routes agree") {
  BinaryForm y = BinaryForm::parse("y");
  for (u64 p : {2ull, 3ull, 7ull, 101ull, 10007ull, 1000003ull}) CHECK(nu_of_p(y, p) == 1);

  BinaryForm f = BinaryForm::parse("x^2-2y^2");
  CHECK(nu_of_p(f, 7) == 2);  // 4^2 = 16 = 2 mod 7
  CHECK(nu_of_p(f, 3) == 0);

  BinaryForm cubic = BinaryForm::parse("x^3-2y^3");
  CHECK(nu_of_p(cubic, 31) >= 1);  // x/y = 4

  std::vector<BinaryForm> forms = {
      BinaryForm::parse("y"),           BinaryForm::parse("x"),
      BinaryForm::parse("x^2-2y^2"),    BinaryForm::parse("-x^2+3y^2"),
      BinaryForm::parse("x^2+y^2"),     BinaryForm::parse("x^2-5y^2"),
      BinaryForm::parse("x^3-2y^3"),    BinaryForm::parse("x^3+x y^2+y^3"),
      BinaryForm::parse("2x^2+3xy+5y^2"), BinaryForm::parse("x^4+y^4"),
  };
  // scan vs gcd path agreement: exercise the gcd path below its usual 1e4 gate
  for (auto& form : forms) {
    for (u64 p : {211ull, 1009ull, 9973ull}) {
      int scan = nu_of_p_scan(form, p);
      int viagcd = count_distinct_roots_mod(form.dehomogenized(), p) +
                   (form.eval_mod(1, 0, p) == 0 ? 1 : 0);
      CHECK(scan == viagcd);
    }
  }
}

TEST_CASE("rho: identity against exhaustive residue counts, p <= 200") {
  std::vector<BinaryForm> forms = {
      BinaryForm::parse("y"),           BinaryForm::parse("x"),
      BinaryForm::parse("x^2-2y^2"),    BinaryForm::parse("-x^2+3y^2"),
      BinaryForm::parse("x^2+y^2"),     BinaryForm::parse("x^2-5y^2"),
      BinaryForm::parse("x^3-2y^3"),    BinaryForm::parse("x^3+x y^2+y^3"),
      BinaryForm::parse("2x^2+3xy+5y^2"), BinaryForm::parse("x^4+y^4"),
  };
  std::vector<u64> primes;
  for_each_prime(2, 200, [&](u64 p) { primes.push_back(p); });
  for (auto& f : forms) {
    for (u64 p : primes) {
      u64 direct = 0;
      for (u64 a = 0; a < p; ++a)
        for (u64 b = 0; b < p; ++b)
          if (f.eval_mod(static_cast<i64>(a), static_cast<i64>(b), p) == 0) ++direct;
      CHECK(rho_i_of_p(f, p) == direct);
      CHECK(direct == static_cast<u64>(nu_of_p(f, p)) * (p - 1) + 1);
    }
  }
}

TEST_CASE("rho at prime powers: f = y, Hensel vs exhaustive, multiplicativity") {
  BinaryForm y = BinaryForm::parse("y");
  for (u64 p : {3ull, 5ull, 7ull})
    for (int k = 1; k <= 3; ++k) {
      u64 mod = 1;
      for (int i = 0; i < k; ++i) mod *= p;
      CHECK(rho_of_pk(y, p, k) == mod);  // b = 0 mod p^k, a free
    }

  BinaryForm f = BinaryForm::parse("x^2-2y^2");
  CHECK(rho_of_pk(f, 7, 1) == 13);
  for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull})
    for (int k = 1; k <= 3; ++k)
      CHECK(rho_of_pk(f, p, k) == rho_of_pk_exhaustive(f, p, k));

  // multiplicativity on coprime moduli up to 100
  BinaryForm g = BinaryForm::parse("x^2+y^2");
  for (u64 d1 = 2; d1 <= 100; ++d1) {
    for (u64 d2 = d1 + 1; d1 * d2 <= 100; ++d2) {
      if (std::gcd(d1, d2) != 1) continue;
      u64 direct = 0;
      u64 m = d1 * d2;
      for (u64 a = 0; a < m; ++a)
        for (u64 b = 0; b < m; ++b)
          if (g.eval_mod(static_cast<i64>(a), static_cast<i64>(b), m) == 0) ++direct;
      CHECK(rho_of_n(g, d1) * rho_of_n(g, d2) == direct);
      CHECK(rho_of_n(g, m) == direct);
    }
  }
}

TEST_CASE("psi_k: values, multiplicativity, divisibility equivalence") {
  CHECK(psi_k(8, 3) == 2);
  CHECK(psi_k(12, 2) == 6);
  for (u64 d : {1ull, 2ull, 6ull, 30ull, 210ull, 2310ull})
    for (int k = 1; k <= 4; ++k) CHECK(psi_k(d, k) == d);  // squarefree

  for (u64 d = 1; d <= 10000; ++d) {
    for (int k = 1; k <= 4; ++k) {
      u64 ps = psi_k(d, k);
      // multiplicative: psi(d) = prod psi(p^e)
      u64 prod = 1;
      for (auto [p, e] : factorize(d)) {
        u64 ppart = 1;
        for (int i = 0; i < (e + k - 1) / k; ++i) ppart *= p;
        prod *= ppart;
      }
      CHECK(ps == prod);
      // equivalence: for e | psi_k(d), p | psi_k(d)/e  <=>  p | d / gcd(d, e^k);
      // gcd(d, e^k) per prime to dodge e^k overflow
      auto dfac = factorize(d);
      for (u64 e = 1; e <= ps; ++e) {
        if (ps % e != 0) continue;
        u64 gk = 1;
        for (auto [p, vd] : dfac) {
          u64 etmp = e;
          int vep = 0;
          while (etmp % p == 0) {
            etmp /= p;
            ++vep;
          }
          int take = std::min(vd, k * vep);
          for (int i = 0; i < take; ++i) gk *= p;
        }
        u64 lhs_base = ps / e;
        u64 rhs_base = d / gk;
        bool all_match = true;
        for (auto [p, vd] : dfac) {
          (void)vd;
          if ((lhs_base % p == 0) != (rhs_base % p == 0)) all_match = false;
        }
        CHECK(all_match);
      }
    }
  }
}

TEST_CASE("h_i values") {
  BinaryForm f = BinaryForm::parse("x^2-2y^2");
  SiftingSet P = SiftingSet::congruence_union({{3, 4}}, {2});
  CHECK(h_i_of_r(f, 1, P) == 1);

  // p = 5: 5 = 1 mod 4 so 5 is in P'; nu(5) = 0 since 2 is not a QR mod 5
  CHECK(nu_of_p(f, 5) == 0);
  CHECK(h_i_of_r(f, 5, P) == Rational(1, 24));  // 1/(p^2-1)

  // members of P (or S) give zero
  CHECK(h_i_of_r(f, 3, P) == 0);
  CHECK(h_i_of_r(f, 2, P) == 0);
  CHECK(h_i_of_r(f, 15, P) == 0);
}

TEST_CASE("h_i partial sums grow like (log x)^{kappa_i}") {
  // f = x^2-2y^2, P = {p = 3 mod 4}: alpha = 1/2, theta = 1, kappa_i = 1/2
  BinaryForm f = BinaryForm::parse("x^2-2y^2");
  SiftingSet P = SiftingSet::congruence_union({{3, 4}}, {2});
  std::vector<u64> xs;
  for (double e = 3.0; e <= 6.01; e += 0.5)
    xs.push_back(static_cast<u64>(std::pow(10.0, e)));
  double slope = h_i_growth_exponent(f, P, xs);
  CHECK(std::fabs(slope - 0.5) < 0.1);
}

TEST_CASE("splitting types") {
  Poly g = Poly::parse("x^3-2");
  CycleType t5 = splitting_type(g, 5);
  CHECK(t5.parts == std::vector<int>{1, 2});
  CycleType t31 = splitting_type(g, 31);
  CHECK(t31.has_fixed_point());

  CHECK(splitting_type(Poly::parse("x-7"), 5).parts == std::vector<int>{1});
  CHECK_THROWS_AS(splitting_type(g, 3), std::domain_error);  // 3 | disc = -108

  // parts sum to deg; for irreducible prime degree, no part 1 <=> single part
  for (u64 p : {5ull, 7ull, 11ull, 101ull, 997ull}) {
    if (BigInt(-108) % p == 0) continue;
    CycleType t = splitting_type(g, p);
    CHECK(t.degree() == 3);
    if (!t.has_fixed_point()) CHECK(t.parts == std::vector<int>{3});
  }
  // quadratic: inert iff 2 is a non-residue iff p = 3,5 mod 8
  Poly q = Poly::parse("x^2-2");
  for (u64 p = 3; p < 500; p += 2) {
    if (!is_prime(p)) continue;
    CycleType t = splitting_type(q, p);
    bool inert = (t.parts == std::vector<int>{2});
    bool nonresidue = (p % 8 == 3 || p % 8 == 5);
    CHECK(inert == nonresidue);
  }
}

TEST_CASE("chebotarev densities at small X") {
  // x^3-2: no-root density 1/3 (with S3 Galois group, fixed-point-free = 2/6)
  Poly g = Poly::parse("x^3-2");
  DensityEstimate d = chebotarev_density(g, CyclePredicate::parse("no-part-1"), 100000, 2);
  CHECK(std::fabs(d.estimate - 1.0 / 3.0) < d.half_width_3sigma);

  Poly q = Poly::parse("x^2-2");
  DensityEstimate inert = chebotarev_density(q, CyclePredicate::parse("type=2"), 100000, 2);
  CHECK(std::fabs(inert.estimate - 0.5) < inert.half_width_3sigma);

  DensityEstimate all = chebotarev_density(Poly::parse("x-1"), CyclePredicate::parse("always"),
                                           10000, 1);
  CHECK(all.estimate == 1.0);

  // estimates converge: the X = 1e5 band contains the X = 1e6-lite point (2e5)
  DensityEstimate d2 = chebotarev_density(g, CyclePredicate::parse("no-part-1"), 200000, 2);
  CHECK(std::fabs(d.estimate - d2.estimate) < d.half_width_3sigma);
}

TEST_CASE("theta estimates: iskovskikh shape at small X") {
  FactoredBinaryForm f = FactoredBinaryForm::parse("(x^2-2y^2)(-x^2+3y^2)");
  SiftingSet P = SiftingSet::congruence_union({{3, 4}}, {2});
  ThetaReport rep = theta_estimate(f, P, 200000, 2);
  REQUIRE(rep.theta.size() == 2);
  CHECK(std::fabs(rep.theta[0].estimate - 1.0) < rep.theta[0].half_width_3sigma);
  CHECK(std::fabs(rep.theta[1].estimate - 1.0) < rep.theta[1].half_width_3sigma);
  CHECK(std::fabs(rep.alpha.estimate - 0.5) < rep.alpha.half_width_3sigma);

  // homogenizer factor: theta_0 = 1 exactly
  FactoredBinaryForm fy = FactoredBinaryForm::parse("y*(x^2+y^2)");
  ThetaReport repy = theta_estimate(fy, P, 50000, 1);
  CHECK(repy.theta[0].exact);
  CHECK(repy.theta[0].estimate == 1.0);

  // all primes, irreducible quadratic: theta -> 1
  SiftingSet all = SiftingSet::congruence_union({{1, 2}}, {});  // odd primes
  FactoredBinaryForm f2 = FactoredBinaryForm::parse("x^2+y^2");
  ThetaReport rep2 = theta_estimate(f2, all, 200000, 2);
  CHECK(std::fabs(rep2.theta[0].estimate - 1.0) < rep2.theta[0].half_width_3sigma);

  // empty P errors
  SiftingSet empty = SiftingSet::explicit_list({});
  CHECK_THROWS(theta_estimate(f, empty, 1000, 1));
}

TEST_CASE("sifting set membership") {
  SiftingSet P = SiftingSet::congruence_union({{3, 4}}, {2});
  CHECK(P.contains(3));
  CHECK(P.contains(7));
  CHECK(!P.contains(5));
  CHECK(!P.contains(2));  // excluded

  SiftingSet split = SiftingSet::split_condition(Poly::parse("x^3-2"),
                                                 CyclePredicate::parse("no-part-1"), {});
  CHECK(!split.contains(2));   // ramified (2 | disc)
  CHECK(!split.contains(3));   // ramified
  CHECK(!split.contains(31));  // has root 4
  CHECK(split.contains(7));    // x^3-2 irreducible mod 7

  SiftingSet listed = SiftingSet::explicit_list({3, 7, 11});
  CHECK(listed.contains(7));
  CHECK(!listed.contains(5));
  CHECK_THROWS_AS(SiftingSet::explicit_list({4}), std::domain_error);
  CHECK_THROWS_AS(SiftingSet::congruence_union({{2, 4}}, {}), std::domain_error);
}

TEST_CASE("primes_in and pi(1e6)") {
  PrimeRange r{2, 20, {}};
  CHECK(primes_in(r) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19});
  PrimeRange rx{2, 20, {2, 5}};
  CHECK(primes_in(rx) == std::vector<u64>{3, 7, 11, 13, 17, 19});

  // independent naive sieve oracle
  const int N = 1000000;
  std::vector<char> is(N + 1, 1);
  is[0] = is[1] = 0;
  for (int i = 2; 1ll * i * i <= N; ++i)
    if (is[i])
      for (int j = i * i; j <= N; j += i) is[j] = 0;
  u64 naive = std::count(is.begin(), is.end(), char(1));
  CHECK(naive == 78498);
  CHECK(count_primes_up_to(N) == naive);
}

TEST_CASE("linear factor detection") {
  CHECK(has_linear_factor(BinaryForm::parse("x")));
  CHECK(has_linear_factor(BinaryForm::parse("y")));
  CHECK(has_linear_factor(BinaryForm::parse("x^2-y^2")));
  CHECK(!has_linear_factor(BinaryForm::parse("x^2+y^2")));
  CHECK(!has_linear_factor(BinaryForm::parse("x^2-2y^2")));
  CHECK(has_linear_factor(BinaryForm::parse("x^2-4y^2")));
  CHECK(!has_linear_factor(BinaryForm::parse("x^3-2y^3")));
}
