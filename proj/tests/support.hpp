#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "period_lab/period_lab.hpp"

// Expects `stmt` to throw plab::Error with the given code.
#define EXPECT_ERRC(stmt, errc)                                            \
  do {                                                                     \
    try {                                                                  \
      (void)(stmt);                                                        \
      ADD_FAILURE() << "expected " << plab::errc_name(errc) << ", no throw"; \
    } catch (const plab::Error& e_) {                                      \
      EXPECT_EQ(e_.code(), errc) << e_.what();                             \
    }                                                                      \
  } while (0)

namespace testutil {

using namespace plab;

inline Poly P(const Field& f, const char* text) { return parse_poly(f, text); }

inline std::vector<u64> V(const PeriodSet& s) { return s.elems(); }

// All monic polynomials of degree d.
inline std::vector<Poly> monics(const Field& f, unsigned d) {
  std::vector<Poly> out;
  u64 total = 1;
  for (unsigned i = 0; i < d; ++i) total *= f.q();
  for (u64 idx = 0; idx < total; ++idx) {
    std::vector<Elem> c(d + 1, f.zero());
    c[d] = f.one();
    u64 v = idx;
    for (unsigned i = 0; i < d; ++i, v /= f.q()) c[i] = f.from_index(v % f.q());
    out.emplace_back(f, c);
  }
  return out;
}

// Irreducible iff no monic divisor of degree 1..d/2.
inline bool irreducible_by_trial(const Poly& f) {
  const auto d = f.degree();
  if (d < 1) return false;
  for (unsigned k = 1; 2 * static_cast<std::int64_t>(k) <= d; ++k)
    for (const auto& g : monics(f.field(), k))
      if ((f % g).is_zero()) return false;
  return true;
}

// Smallest n with g | x^n - 1, building x^n mod g by repeated multiplication by x.
inline u64 order_by_scan(const Poly& g, u64 limit) {
  const Field& f = g.field();
  const Poly x = Poly::x(f);
  Poly r = x % g;
  for (u64 n = 1; n <= limit; ++n) {
    if ((r - Poly::one(f)) % g == Poly(f)) return n;
    r = (r * x) % g;
  }
  return 0;
}

inline u64 euler_phi(u64 n) {
  u64 r = n;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace testutil
