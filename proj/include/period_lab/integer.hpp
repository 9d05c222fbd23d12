#pragma once

// Exact 64-bit integer helpers: checked arithmetic, primality, factorization,
// and the prime-stripping search for element orders.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"

namespace plab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Characteristics at or above this are rejected by the field constructor.
inline constexpr u64 kMaxCharacteristic = u64{1} << 20;
/// Upper bound (exclusive) for integers handed to the factorizer.
inline constexpr u64 kMaxFactorInput = u64{1} << 63;
inline constexpr u64 kTrialDivisionBudget = 1'000'000;

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "addition overflows 64 bits");
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "multiplication overflows 64 bits");
  return r;
}

inline u64 checked_pow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline u64 checked_lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic trial division; intended for small inputs such as field characteristics.
inline bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Miller-Rabin with the first twelve prime bases, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases)
    if (n % b == 0) return n == b;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes ascending. The empty list represents 1.
struct IntFactorization {
  std::vector<PrimePower> factors;

  u64 value() const {
    u64 v = 1;
    for (const auto& f : factors) v = checked_mul(v, checked_pow(f.prime, f.exponent));
    return v;
  }
  friend bool operator==(const IntFactorization&, const IntFactorization&) = default;
};

namespace detail {

// Brent's variant of Pollard rho. The increment sequence c = 1, 2, 3, ... is fixed
// so that any failure is reproducible.
inline u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBlock = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(kBlock, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBlock;
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

inline void split_large(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  split_large(d, primes);
  split_large(n / d, primes);
}

}  // namespace detail

/// Trial division by every d up to the budget, then Pollard rho on what remains.
inline IntFactorization factor_integer(u64 n) {
  if (n == 0 || n >= kMaxFactorInput)
    fail(Errc::OutOfRange, "factor_integer expects 1 <= n < 2^63, got " + std::to_string(n));
  IntFactorization out;
  auto take = [&](u64 d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.factors.push_back({d, e});
  };
  take(2);
  u64 d = 3;
  for (; d <= kTrialDivisionBudget && d <= n / d; d += 2) take(d);
  if (n == 1) return out;
  if (d > n / d) {
    out.factors.push_back({n, 1});
    return out;
  }
  std::vector<u64> big;
  detail::split_large(n, big);
  std::sort(big.begin(), big.end());
  for (std::size_t i = 0; i < big.size();) {
    std::size_t j = i;
    while (j < big.size() && big[j] == big[i]) ++j;
    out.factors.push_back({big[i], static_cast<unsigned>(j - i)});
    i = j;
  }
  return out;
}

/// Returns (p, e) with q = p^e, or nullopt if q is not a prime power.
inline std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
  if (q < 2 || q >= kMaxFactorInput) return std::nullopt;
  auto f = factor_integer(q);
  if (f.factors.size() != 1) return std::nullopt;
  return std::pair{f.factors[0].prime, f.factors[0].exponent};
}

/// Smallest t >= 0 with p^t >= b. Integer loop, no logarithms.
inline unsigned ceil_log(u64 p, u64 b) {
  unsigned t = 0;
  u64 pt = 1;
  while (pt < b) {
    pt = checked_mul(pt, p);
    ++t;
  }
  return t;
}

/// Order of an element inside a cyclic group whose exponent divides `group_exponent`.
/// `is_identity(n)` must report whether the element raised to n is the identity.
/// Each prime is stripped from the exponent while the power stays trivial.
template <class IsIdentity>
u64 order_by_stripping(u64 group_exponent, const IntFactorization& fac, IsIdentity&& is_identity) {
  u64 order = group_exponent;
  for (const auto& [prime, exponent] : fac.factors) {
    for (unsigned i = 0; i < exponent; ++i) {
      if (!is_identity(order / prime)) break;
      order /= prime;
    }
  }
  return order;
}

}  // namespace plab
