#include "trinom/factor.hpp"

#include <algorithm>
#include <numeric>

#include "trinom/errors.hpp"

namespace trinom {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1);
    std::vector<u64> out;
    for (u64 p = 2; p <= kTrialLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (u64 q = p * p; q <= kTrialLimit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant; n odd composite.
u64 rho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 batch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factor(const mpz_class& n) {
  mpz_class a = abs(n);
  if (a == 0) throw DomainError("factor: zero has no factorization");
  if (mpz_sizeinbase(a.get_mpz_t(), 2) > 64) {
    throw ResourceError("factor: " + a.get_str() + " exceeds the 64-bit factoring range");
  }
  u64 m = mpz_get_ui(a.get_mpz_t());
  if constexpr (sizeof(unsigned long) < 8) {
    m = static_cast<u64>(mpz_class(a >> 32).get_ui()) << 32 | mpz_class(a & 0xffffffffUL).get_ui();
  }

  std::vector<u64> primes;
  if (m > 1 && !is_prime_u64(m)) {
    for (u64 p : small_primes()) {
      if (p * p > m) break;
      while (m % p == 0) {
        primes.push_back(p);
        m /= p;
      }
    }
  }
  split(m, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

}  // namespace trinom
