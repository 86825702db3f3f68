#include "sievekit/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sievekit::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 brent_rho(u64 n) {
  if (!(n & 1)) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += lim;
      }
      lam *= 2;
      if (lam > (1 << 24)) break;
    }
    if (d == n) {
      // the gcd batch collapsed; redo one step at a time
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n && d > 1) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<u64, int>> out;
  if (n == 0) throw std::domain_error("factorize(0)");
  for (u64 p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    if (is_prime(n)) {
      out.emplace_back(n, 1);
    } else {
      std::vector<u64> rest;
      factor_rec(n, rest);
      std::sort(rest.begin(), rest.end());
      for (std::size_t i = 0; i < rest.size();) {
        std::size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        out.emplace_back(rest[i], static_cast<int>(j - i));
        i = j;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn) {
  if (hi < 2 || hi < lo) return;
  lo = std::max<u64>(lo, 2);
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi))) + 2;
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (small[i]) {
      base.push_back(i);
      for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    }
  }
  const u64 kSeg = 1 << 20;
  std::vector<char> seg;
  for (u64 low = lo; low <= hi; low += kSeg) {
    u64 high = std::min(hi, low + kSeg - 1);
    seg.assign(high - low + 1, 1);
    for (u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (u64 v = std::max(low, u64(2)); v <= high; ++v) {
      if (!seg[v - low]) continue;
      if (v <= root) {
        if (small[v]) fn(v);
      } else {
        fn(v);
      }
    }
  }
}

std::vector<std::uint64_t> primes_in(const PrimeRange& range) {
  if (range.hi < range.lo) throw std::domain_error("primes_in: hi < lo");
  std::vector<u64> excl = range.excluded;
  std::sort(excl.begin(), excl.end());
  std::vector<u64> out;
  for_each_prime(range.lo, range.hi, [&](u64 p) {
    if (!std::binary_search(excl.begin(), excl.end(), p)) out.push_back(p);
  });
  return out;
}

std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
  return spf;
}

std::uint64_t count_primes_up_to(std::uint64_t x) {
  u64 n = 0;
  for_each_prime(2, x, [&](u64) { ++n; });
  return n;
}

}  // namespace sievekit::arith
