#pragma once

// Irreducibility testing and complete factorization over F_q: square-free
// decomposition, distinct-degree splitting, then Cantor-Zassenhaus equal-degree
// splitting driven by an explicitly seeded generator.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/integer.hpp"
#include "period_lab/poly.hpp"

namespace plab {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1a5b'0f0e'1d5aULL;

struct FactorTerm {
  Poly factor;  // monic irreducible
  unsigned multiplicity = 1;
  friend bool operator==(const FactorTerm&, const FactorTerm&) = default;
};

struct Factorization {
  Elem unit;
  std::vector<FactorTerm> factors;

  Poly reconstruct(const Field& f) const {
    Poly acc = Poly::constant(f, unit);
    for (const auto& t : factors)
      for (unsigned i = 0; i < t.multiplicity; ++i) acc = acc * t.factor;
    return acc;
  }
};

namespace detail {

// x^(q^j) mod f for j = 0..count, by repeated q-th powering.
inline std::vector<Poly> frobenius_orbit_of_x(const Poly& f, std::size_t count) {
  const auto& F = f.field();
  std::vector<Poly> out;
  out.reserve(count + 1);
  out.push_back(Poly::x(F) % f);
  for (std::size_t j = 0; j < count; ++j) out.push_back(powmod(out.back(), F.q(), f));
  return out;
}

inline Poly pth_root(const Poly& a) {
  const auto& F = a.field();
  const u64 p = F.p();
  std::vector<Elem> c;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) c.push_back(F.pth_root(a.coeffs()[i]));
  return Poly(F, std::move(c));
}

}  // namespace detail

/// Rabin test: x^(q^d) = x mod f and gcd(x^(q^(d/l)) - x, f) = 1 for each prime l | d.
inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) fail(Errc::ConstantPolynomial, "irreducibility of a constant");
  const auto d = static_cast<std::size_t>(f.degree());
  const Poly g = monic(f);
  const auto orbit = detail::frobenius_orbit_of_x(g, d);
  const Poly x = Poly::x(g.field()) % g;
  if (!(orbit[d] == x)) return false;
  for (const auto& pp : factor_integer(d).factors) {
    if (!gcd(orbit[d / pp.prime] - x, g).is_one()) return false;
  }
  return true;
}

/// Pairs (s_i, i) with monic f = prod s_i^i and each s_i square-free, pairwise coprime.
inline std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "square-free decomposition of zero");
  const auto& F = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  Poly a = monic(f);
  if (a.degree() == 0) return out;
  Poly c = gcd(a, derivative(a));
  Poly w = a / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly part = w / y;
    if (!part.is_one()) out.emplace_back(part, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    // Remaining factors have multiplicity divisible by p; c is a polynomial in x^p.
    for (auto& [s, m] : squarefree_decomposition(detail::pth_root(c))) out.emplace_back(s, m * static_cast<unsigned>(F.p()));
  }
  return out;
}

/// Pairs (g_d, d) where g_d is the product of all degree-d irreducible factors of a
/// monic square-free f.
inline std::vector<std::pair<Poly, unsigned>> distinct_degree_factor(Poly f) {
  const auto& F = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = Poly::x(F);
  Poly h = x % f;
  for (unsigned d = 1; 2 * static_cast<std::int64_t>(d) <= f.degree(); ++d) {
    h = powmod(h, F.q(), f);
    Poly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

/// Splits a monic f whose irreducible factors all have degree d (Cantor-Zassenhaus).
inline std::vector<Poly> equal_degree_factor(const Poly& f, unsigned d, std::mt19937_64& rng) {
  if (f.degree() == static_cast<std::int64_t>(d)) return {f};
  const auto& F = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  std::uniform_int_distribution<u64> coef(0, F.q() - 1);
  for (;;) {
    std::vector<Elem> rc(n);
    for (auto& c : rc) c = F.from_index(coef(rng));
    Poly a(F, std::move(rc));
    if (a.degree() < 1) continue;
    Poly b(F);
    if (F.p() == 2) {
      // Absolute trace to F_2: a + a^2 + ... + a^(2^(e*d - 1)).
      Poly t = a;
      b = a;
      for (unsigned j = 1; j < F.e() * d; ++j) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      // a^((q^d - 1)/2) = (prod_{j<d} a^(q^j))^((q-1)/2), avoiding a huge exponent.
      Poly prod = a;
      Poly t = a;
      for (unsigned j = 1; j < d; ++j) {
        t = powmod(t, F.q(), f);
        prod = (prod * t) % f;
      }
      b = powmod(prod, (F.q() - 1) / 2, f) - Poly::one(F);
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factor(g, d, rng);
      auto right = equal_degree_factor(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// Complete factorization; factors are canonically ordered by degree then coefficients.
inline Factorization factor(const Poly& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "factorization of zero");
  std::mt19937_64 rng(seed);
  Factorization out{f.lead(), {}};
  for (const auto& [sf, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factor(sf)) {
      for (auto& g : equal_degree_factor(block, d, rng)) out.factors.push_back({monic(g), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorTerm& a, const FactorTerm& b) { return canonical_less(a.factor, b.factor); });
  // Merge repeats, should the square-free parts ever share a factor.
  std::vector<FactorTerm> merged;
  for (auto& t : out.factors) {
    if (!merged.empty() && merged.back().factor == t.factor)
      merged.back().multiplicity += t.multiplicity;
    else
      merged.push_back(std::move(t));
  }
  out.factors = std::move(merged);
  return out;
}

}  // namespace plab
