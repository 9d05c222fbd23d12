#pragma once

// Order of a polynomial: the smallest n > 0 such that g | x^n - 1, where f = x^r g
// and g(0) != 0. The pipeline strips x^r, factors g, computes e * p^t for every
// irreducible power and combines the contributions by lcm. ord_bruteforce walks the
// powers of x modulo g directly and shares nothing with the pipeline beyond Poly.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/factor.hpp"
#include "period_lab/integer.hpp"
#include "period_lab/poly.hpp"

namespace plab {

struct OrderFactor {
  Poly factor;  // monic irreducible g_i
  unsigned multiplicity = 1;
  u64 irreducible_order = 1;  // e_i = ord(g_i)
  unsigned p_exponent = 0;    // smallest t with p^t >= multiplicity
  u64 contribution = 1;       // e_i * p^t
};

struct OrderResult {
  u64 order = 1;
  std::size_t stripped = 0;  // r in f = x^r g
  std::vector<OrderFactor> per_factor;
};

/// f = x^r g with g(0) != 0.
inline std::pair<std::size_t, Poly> strip_x_power(const Poly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot strip x from zero");
  const auto& c = f.coeffs();
  std::size_t r = 0;
  while (f.field().is_zero(c[r])) ++r;
  return {r, Poly(f.field(), std::vector<Elem>(c.begin() + static_cast<std::ptrdiff_t>(r), c.end()))};
}

/// Multiplicative order of x in F_q[x]/<g> for irreducible g with g(0) != 0.
inline u64 ord_irreducible(const Poly& g) {
  if (g.degree() < 1) fail(Errc::ReduciblePolynomial, "ord_irreducible needs a polynomial of degree >= 1");
  if (g.field().is_zero(g.coeff(0))) fail(Errc::XDividesG, "g(0) = 0");
  if (!is_irreducible(g)) fail(Errc::ReduciblePolynomial, "ord_irreducible given a reducible polynomial");
  const Poly m = monic(g);
  const auto d = static_cast<u64>(m.degree());
  const u64 n = checked_pow(g.field().q(), d) - 1;
  if (n >= kMaxFactorInput) fail(Errc::OutOfRange, "q^d - 1 exceeds 2^63");
  const Poly x = Poly::x(m.field());
  return order_by_stripping(n, factor_integer(n), [&](u64 k) { return powmod(x, k, m).is_one(); });
}

/// e * p^t with e = ord(g) and t the least integer with p^t >= b.
inline u64 ord_prime_power(const Poly& g, unsigned b) {
  const u64 e = ord_irreducible(g);
  return checked_mul(e, checked_pow(g.field().p(), ceil_log(g.field().p(), b)));
}

inline OrderResult ord(const Poly& f, std::uint64_t seed = kDefaultSeed) {
  auto [r, g] = strip_x_power(f);
  OrderResult out;
  out.stripped = r;
  if (g.degree() == 0) return out;
  const u64 p = f.field().p();
  for (auto& term : factor(g, seed).factors) {
    OrderFactor of{term.factor, term.multiplicity};
    of.irreducible_order = ord_irreducible(term.factor);
    of.p_exponent = ceil_log(p, term.multiplicity);
    of.contribution = checked_mul(of.irreducible_order, checked_pow(p, of.p_exponent));
    out.order = checked_lcm(out.order, of.contribution);
    out.per_factor.push_back(std::move(of));
  }
  return out;
}

/// Definition-based oracle: steps h <- h*x mod g until h = 1. The default limit is
/// q^deg(g) - 1, which the true order never exceeds.
inline u64 ord_bruteforce(const Poly& f, std::optional<u64> limit = std::nullopt) {
  const Poly g = strip_x_power(f).second;
  if (g.degree() == 0) return 1;
  const u64 cap = limit ? *limit : checked_pow(f.field().q(), static_cast<u64>(g.degree())) - 1;
  const Poly x = Poly::x(g.field());
  Poly h = x % g;
  for (u64 n = 1; n <= cap; ++n) {
    if (h.is_one()) return n;
    h = (h * x) % g;
  }
  fail(Errc::LimitExceeded, "no n <= " + std::to_string(cap) + " with g | x^n - 1");
}

}  // namespace plab
