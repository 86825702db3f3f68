#include "sievekit/polymod.hpp"

#include <stdexcept>

namespace sievekit::arith {

namespace {
using u128 = unsigned __int128;

void pm_trim(PolyMod& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}
}  // namespace

PolyMod pm_reduce(const std::vector<i64>& ascending, u64 p) {
  PolyMod out;
  out.p = p;
  out.c.reserve(ascending.size());
  for (i64 v : ascending) {
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    out.c.push_back(static_cast<u64>(r));
  }
  pm_trim(out);
  return out;
}

PolyMod pm_rem(PolyMod a, const PolyMod& mod) {
  const u64 p = mod.p;
  if (mod.is_zero()) throw std::domain_error("pm_rem: zero modulus");
  // make modulus monic
  u64 lead = mod.c.back();
  u64 inv_lead = 1;
  if (lead != 1) {
    // Fermat inverse
    u64 e = p - 2, base = lead, r = 1;
    while (e) {
      if (e & 1) r = static_cast<u64>(u128(r) * base % p);
      base = static_cast<u64>(u128(base) * base % p);
      e >>= 1;
    }
    inv_lead = r;
  }
  while (a.c.size() >= mod.c.size() && !a.c.empty()) {
    u64 q = static_cast<u64>(u128(a.c.back()) * inv_lead % p);
    std::size_t shift = a.c.size() - mod.c.size();
    if (q != 0) {
      for (std::size_t i = 0; i < mod.c.size(); ++i) {
        u64 sub = static_cast<u64>(u128(q) * mod.c[i] % p);
        u64& t = a.c[i + shift];
        t = (t >= sub) ? t - sub : t + p - sub;
      }
    }
    a.c.pop_back();
    pm_trim(a);
  }
  return a;
}

PolyMod pm_mulmod(const PolyMod& a, const PolyMod& b, const PolyMod& mod) {
  const u64 p = mod.p;
  if (a.is_zero() || b.is_zero()) return PolyMod{{}, p};
  std::vector<u64> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    u128 ai = a.c[i];
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      c[i + j] = static_cast<u64>((ai * b.c[j] + c[i + j]) % p);
    }
  }
  PolyMod out{std::move(c), p};
  pm_trim(out);
  return pm_rem(std::move(out), mod);
}

PolyMod pm_gcd(PolyMod a, PolyMod b) {
  while (!b.is_zero()) {
    PolyMod r = pm_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // normalize monic
  if (!a.is_zero() && a.c.back() != 1) {
    const u64 p = a.p;
    u64 lead = a.c.back(), e = p - 2, inv = 1;
    while (e) {
      if (e & 1) inv = static_cast<u64>(u128(inv) * lead % p);
      lead = static_cast<u64>(u128(lead) * lead % p);
      e >>= 1;
    }
    for (u64& x : a.c) x = static_cast<u64>(u128(x) * inv % p);
  }
  return a;
}

PolyMod pm_pow_mod(PolyMod h, u64 e, const PolyMod& mod) {
  PolyMod r{{1}, mod.p};
  h = pm_rem(std::move(h), mod);
  while (e) {
    if (e & 1) r = pm_mulmod(r, h, mod);
    h = pm_mulmod(h, h, mod);
    e >>= 1;
  }
  return r;
}

PolyMod pm_xpow_mod(u64 e, const PolyMod& mod) {
  PolyMod x{{0, 1}, mod.p};
  return pm_pow_mod(std::move(x), e, mod);
}

int count_distinct_roots_mod(const std::vector<i64>& ascending, u64 p) {
  PolyMod f = pm_reduce(ascending, p);
  if (f.is_zero()) throw std::domain_error("count_distinct_roots_mod: zero polynomial mod p");
  if (f.degree() == 0) return 0;
  if (p <= 3) {
    int n = 0;
    for (u64 x = 0; x < p; ++x) {
      u128 acc = 0;
      for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = (acc * x + *it) % p;
      if (acc == 0) ++n;
    }
    return n;
  }
  // gcd(x^p - x, f)
  PolyMod xp = pm_xpow_mod(p, f);
  // xp - x
  PolyMod d = xp;
  if (d.c.size() < 2) d.c.resize(2, 0);
  d.c[1] = (d.c[1] >= 1) ? d.c[1] - 1 : p - 1;
  pm_trim(d);
  PolyMod g = pm_gcd(f, d);
  return g.is_zero() ? 0 : g.degree();
}

std::vector<int> distinct_degree_parts(const std::vector<i64>& monic_ascending, u64 p) {
  PolyMod v = pm_reduce(monic_ascending, p);
  if (v.is_zero() || v.c.back() != 1)
    throw std::domain_error("distinct_degree_parts: polynomial must stay monic mod p");
  std::vector<int> parts;
  PolyMod h{{0, 1}, p};  // x
  int d = 0;
  while (v.degree() > 0) {
    ++d;
    if (2 * d > v.degree()) {
      parts.push_back(v.degree());
      break;
    }
    h = pm_pow_mod(std::move(h), p, v);  // x^{p^d} mod v
    PolyMod hx = h;
    if (hx.c.size() < 2) hx.c.resize(2, 0);
    hx.c[1] = (hx.c[1] >= 1) ? hx.c[1] - 1 : p - 1;
    pm_trim(hx);
    PolyMod g = pm_gcd(v, hx);
    if (!g.is_zero() && g.degree() > 0) {
      if (g.degree() % d != 0)
        throw std::logic_error("distinct_degree_parts: input not squarefree mod p");
      for (int i = 0; i < g.degree() / d; ++i) parts.push_back(d);
      // v /= g
      PolyMod q{{}, p};
      {
        // polynomial division (both monic)
        PolyMod rem = v;
        std::vector<u64> qc(v.c.size() - g.c.size() + 1, 0);
        while (rem.c.size() >= g.c.size() && !rem.is_zero()) {
          u64 lead = rem.c.back();
          std::size_t shift = rem.c.size() - g.c.size();
          qc[shift] = lead;
          for (std::size_t i = 0; i < g.c.size(); ++i) {
            u64 sub = static_cast<u64>(u128(lead) * g.c[i] % p);
            u64& t = rem.c[i + shift];
            t = (t >= sub) ? t - sub : t + p - sub;
          }
          rem.c.pop_back();
          pm_trim(rem);
        }
        q.c = std::move(qc);
        pm_trim(q);
      }
      v = std::move(q);
      h = pm_rem(std::move(h), v);
    }
  }
  return parts;
}

std::vector<u64> roots_mod_prime(const std::vector<i64>& ascending, u64 p) {
  if (p > 2000000) throw std::domain_error("roots_mod_prime: prime too large for scan");
  PolyMod f = pm_reduce(ascending, p);
  std::vector<u64> roots;
  if (f.is_zero()) throw std::domain_error("roots_mod_prime: zero polynomial mod p");
  for (u64 x = 0; x < p; ++x) {
    u128 acc = 0;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace sievekit::arith
