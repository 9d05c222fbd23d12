#pragma once

// Recurrences over products of finite fields R = F_{q_1} + ... + F_{q_r}. A sequence
// over R is the tuple of its component sequences, so its period is the lcm of the
// component periods and P(k, R) is the lcm-closure of the component period sets.
// Also covers the cyclic group algebras A_n = F_p[t]/<t^n - 1>, which split into
// such a product exactly when t^n - 1 is square-free over F_p.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/factor.hpp"
#include "period_lab/field.hpp"
#include "period_lab/integer.hpp"
#include "period_lab/period_set.hpp"
#include "period_lab/poly.hpp"
#include "period_lab/recurrence.hpp"
#include "period_lab/sequence.hpp"

namespace plab {

using RingElem = std::vector<Elem>;

class ProductRing {
 public:
  using value_type = RingElem;

  explicit ProductRing(std::vector<Field> components) : comps_(std::move(components)) {
    if (comps_.empty()) fail(Errc::OutOfRange, "a product ring needs at least one component");
  }

  std::size_t size() const noexcept { return comps_.size(); }
  const Field& component(std::size_t i) const {
    if (i >= comps_.size()) fail(Errc::IndexOutOfRange, "component index " + std::to_string(i) + " out of range");
    return comps_[i];
  }
  const std::vector<Field>& components() const noexcept { return comps_; }
  bool is_field() const noexcept { return comps_.size() == 1; }

  /// |R| = prod q_i.
  u64 cardinality() const {
    u64 n = 1;
    for (const auto& f : comps_) n = checked_mul(n, f.q());
    return n;
  }

  RingElem zero() const { return map([](const Field& f) { return f.zero(); }); }
  RingElem one() const { return map([](const Field& f) { return f.one(); }); }

  /// Element from integers, one per component.
  RingElem from_ints(std::initializer_list<std::int64_t> parts) const {
    if (parts.size() != comps_.size()) fail(Errc::LengthMismatch, "element arity does not match the ring");
    RingElem out;
    std::size_t i = 0;
    for (auto v : parts) out.push_back(comps_[i++].from_int(v));
    return out;
  }

  RingElem add(const RingElem& a, const RingElem& b) const {
    return zip(a, b, [](const Field& f, Elem x, Elem y) { return f.add(x, y); });
  }
  RingElem sub(const RingElem& a, const RingElem& b) const {
    return zip(a, b, [](const Field& f, Elem x, Elem y) { return f.sub(x, y); });
  }
  RingElem mul(const RingElem& a, const RingElem& b) const {
    return zip(a, b, [](const Field& f, Elem x, Elem y) { return f.mul(x, y); });
  }
  bool is_unit(const RingElem& a) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (comps_[i].is_zero(a[i])) return false;
    return true;
  }
  bool contains(const RingElem& a) const {
    if (a.size() != comps_.size()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (!comps_[i].contains(a[i])) return false;
    return true;
  }

  /// Mixed-radix bijection with 0..|R|-1, component 0 least significant.
  RingElem from_index(u64 idx) const {
    RingElem out;
    out.reserve(comps_.size());
    for (const auto& f : comps_) {
      out.push_back(f.from_index(idx % f.q()));
      idx /= f.q();
    }
    return out;
  }

  u64 index(const RingElem& a) const {
    u64 v = 0;
    for (std::size_t i = comps_.size(); i-- > 0;) v = v * comps_[i].q() + comps_[i].index(a[i]);
    return v;
  }

  friend bool operator==(const ProductRing& a, const ProductRing& b) { return a.comps_ == b.comps_; }

 private:
  template <class F>
  RingElem map(F fn) const {
    RingElem out;
    out.reserve(comps_.size());
    for (const auto& f : comps_) out.push_back(fn(f));
    return out;
  }
  template <class F>
  RingElem zip(const RingElem& a, const RingElem& b, F fn) const {
    RingElem out(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out[i] = fn(comps_[i], a[i], b[i]);
    return out;
  }

  std::vector<Field> comps_;
};

using RingRecurrence = Recurrence<ProductRing>;

inline ProductRing make_product_ring(std::vector<Field> components) { return ProductRing(std::move(components)); }

// Projections pi_i onto component i (0-based).

inline Elem project(const ProductRing& ring, const RingElem& a, std::size_t i) {
  ring.component(i);
  return a[i];
}

inline std::vector<Elem> project(const ProductRing& ring, const std::vector<RingElem>& seq, std::size_t i) {
  ring.component(i);
  std::vector<Elem> out;
  out.reserve(seq.size());
  for (const auto& a : seq) out.push_back(a[i]);
  return out;
}

inline FieldRecurrence project(const RingRecurrence& rec, std::size_t i) {
  const Field& f = rec.ring().component(i);
  std::vector<Elem> c;
  for (const auto& ci : rec.coeffs()) c.push_back(ci[i]);
  return FieldRecurrence(f, std::move(c));
}

enum class RingPeriodMode { Lcm, Direct };

/// lcm of the component periods, or the direct state-cycle walk over R.
inline u64 period_over_ring(const RingRecurrence& rec, const std::vector<RingElem>& s0,
                            RingPeriodMode mode = RingPeriodMode::Lcm) {
  rec.check_state(s0);
  if (mode == RingPeriodMode::Direct) return period_bruteforce(rec, s0);
  u64 period = 1;
  for (std::size_t i = 0; i < rec.ring().size(); ++i)
    period = checked_lcm(period, period_bruteforce(project(rec, i), project(rec.ring(), s0, i)));
  return period;
}

enum class PeriodMethod { Closed, Bound, Bruteforce, Auto };

/// P(k, F_q) by the requested method; Auto uses the closed form when k <= 4.
inline PeriodSet field_period_set(unsigned k, const Field& f, PeriodMethod method, u64 budget = kDefaultBudget,
                                  unsigned jobs = 1) {
  switch (method) {
    case PeriodMethod::Closed: return period_set_closed_form(k, f.q());
    case PeriodMethod::Bound: return period_set_lower_bound(k, f.q());
    case PeriodMethod::Bruteforce: return order_set_bruteforce(k, f, budget, jobs);
    case PeriodMethod::Auto:
      return k <= 4 ? period_set_closed_form(k, f.q()) : order_set_bruteforce(k, f, budget, jobs);
  }
  return {};
}

/// { lcm(w_1, ..., w_r) | w_i in P(k, F_{q_i}) }, folded one component at a time.
inline PeriodSet period_set_over_ring(unsigned k, const ProductRing& ring, PeriodMethod method = PeriodMethod::Auto,
                                      u64 budget = kDefaultBudget, unsigned jobs = 1) {
  PeriodSet acc{1};
  for (const auto& f : ring.components()) acc = lcm_closure(acc, field_period_set(k, f, method, budget, jobs));
  return acc.with_provenance(Provenance::LcmClosure);
}

/// Periods of every sequence of every degree-k recurrence with unit c_0 over the
/// ring, by direct simulation. Work is (#recurrences) * |R|^k, checked against budget.
template <FiniteRing Ring>
PeriodSet exhaustive_period_set(const Ring& ring, unsigned k, u64 budget = kDefaultBudget) {
  const u64 n = ring.cardinality();
  const u64 states = checked_pow(n, k);
  const u64 work = checked_mul(states, states);
  if (work > budget)
    fail(Errc::BudgetExceeded, std::to_string(work) + " recurrence/state pairs exceed the budget of " +
                                   std::to_string(budget));
  std::set<u64> found;
  for (u64 ci = 0; ci < states; ++ci) {
    std::vector<typename Ring::value_type> c;
    u64 v = ci;
    for (unsigned i = 0; i < k; ++i) {
      c.push_back(ring.from_index(v % n));
      v /= n;
    }
    if (!ring.is_unit(c[0])) continue;
    Recurrence<Ring> rec(ring, std::move(c));
    std::vector<bool> seen(states, false);
    for (u64 si = 0; si < states; ++si) {
      // States on one cycle share the period, so each cycle is walked once.
      if (seen[si]) continue;
      std::vector<typename Ring::value_type> s;
      u64 w = si;
      for (unsigned i = 0; i < k; ++i) {
        s.push_back(ring.from_index(w % n));
        w /= n;
      }
      auto cur = s;
      u64 len = 0;
      do {
        u64 code = 0;
        for (unsigned i = k; i-- > 0;) code = code * n + ring.index(cur[i]);
        seen[code] = true;
        rec.step(cur);
        ++len;
      } while (!(cur == s));
      found.insert(len);
    }
  }
  return PeriodSet(std::vector<u64>(found.begin(), found.end()), Provenance::Bruteforce);
}

/// prod (q_i^k - 1), an upper bound on every period over the ring.
inline u64 max_period_bound(unsigned k, const ProductRing& ring) {
  u64 b = 1;
  for (const auto& f : ring.components()) b = checked_mul(b, checked_pow(f.q(), k) - 1);
  return b;
}

struct FieldCharacterization {
  unsigned k = 0;
  std::size_t components = 0;
  u64 max_period = 0;
  u64 trivial_bound = 0;  // |R|^k - 1
  u64 product_bound = 0;  // prod (q_i^k - 1)
  bool achieved = false;  // max_period == |R|^k - 1
  bool consistent = false;  // achieved exactly when the ring is a field
};

inline FieldCharacterization verify_field_characterization(unsigned k, const ProductRing& ring,
                                                           PeriodMethod method = PeriodMethod::Auto,
                                                           u64 budget = kDefaultBudget) {
  FieldCharacterization r;
  r.k = k;
  r.components = ring.size();
  r.max_period = period_set_over_ring(k, ring, method, budget).max();
  r.trivial_bound = checked_pow(ring.cardinality(), k) - 1;
  r.product_bound = max_period_bound(k, ring);
  r.achieved = r.max_period == r.trivial_bound;
  r.consistent = r.achieved == ring.is_field() && r.max_period <= r.product_bound;
  return r;
}

/// F_p[t]/<t^n - 1>, elements as length-n coefficient vectors; t^n wraps to 1.
class CyclicGroupAlgebra {
 public:
  using value_type = std::vector<u64>;

  CyclicGroupAlgebra(u64 p, unsigned n) : base_(Field::prime(p)), n_(n) {
    if (n < 1) fail(Errc::OutOfRange, "group order must be positive");
  }

  const Field& base() const noexcept { return base_; }
  unsigned n() const noexcept { return n_; }
  u64 cardinality() const { return checked_pow(base_.p(), n_); }

  value_type zero() const { return value_type(n_, 0); }
  value_type one() const {
    value_type v(n_, 0);
    v[0] = 1;
    return v;
  }
  value_type add(const value_type& a, const value_type& b) const {
    value_type out(n_);
    for (unsigned i = 0; i < n_; ++i) out[i] = (a[i] + b[i]) % base_.p();
    return out;
  }
  value_type mul(const value_type& a, const value_type& b) const {
    const u64 p = base_.p();
    value_type out(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        unsigned k = i + j;
        if (k >= n_) k -= n_;
        out[k] = (out[k] + mulmod(a[i], b[j], p)) % p;
      }
    }
    return out;
  }
  /// a is a unit iff gcd(a(t), t^n - 1) = 1.
  bool is_unit(const value_type& a) const { return gcd(to_poly(a), modulus()).is_one(); }

  value_type from_index(u64 idx) const {
    value_type out(n_);
    for (auto& c : out) {
      c = idx % base_.p();
      idx /= base_.p();
    }
    return out;
  }
  u64 index(const value_type& a) const {
    u64 v = 0;
    for (unsigned i = n_; i-- > 0;) v = v * base_.p() + a[i];
    return v;
  }

  Poly to_poly(const value_type& a) const {
    std::vector<Elem> c;
    for (u64 v : a) c.push_back(Elem{v});
    return Poly(base_, std::move(c));
  }
  /// t^n - 1
  Poly modulus() const { return Poly::monomial(base_, base_.one(), n_) - Poly::one(base_); }

 private:
  Field base_;
  unsigned n_;
};

struct GroupAlgebraSpec {
  u64 p = 0;
  unsigned n = 0;
  Factorization factorization;       // of t^n - 1 over F_p
  bool semisimple = false;           // all multiplicities 1, equivalently p does not divide n
  std::optional<ProductRing> decomposition;  // F_p[t]/<f_i> for each factor f_i, canonical order
  CyclicGroupAlgebra algebra;

  /// Image of an algebra element under the CRT isomorphism: reduction mod each f_i.
  RingElem crt_project(const std::vector<u64>& a) const {
    if (!decomposition) fail(Errc::OutOfRange, "t^n - 1 has repeated factors; no CRT decomposition");
    const Poly g = algebra.to_poly(a);
    RingElem out;
    for (std::size_t i = 0; i < factorization.factors.size(); ++i) {
      const Poly& fi = factorization.factors[i].factor;
      const Field& comp = decomposition->component(i);
      const Poly r = g % fi;
      if (fi.degree() == 1) {
        out.push_back(comp.from_index(r.coeff(0).v));
      } else {
        std::vector<u64> c;
        for (const Elem& e : r.coeffs()) c.push_back(e.v);
        out.push_back(comp.from_coeffs(c));
      }
    }
    return out;
  }
};

inline GroupAlgebraSpec make_group_algebra(u64 p, unsigned n) {
  if (n < 2) fail(Errc::OutOfRange, "group algebra needs n >= 2");
  CyclicGroupAlgebra alg(p, n);
  GroupAlgebraSpec spec{p, n, factor(alg.modulus()), false, std::nullopt, alg};
  spec.semisimple = std::all_of(spec.factorization.factors.begin(), spec.factorization.factors.end(),
                                [](const FactorTerm& t) { return t.multiplicity == 1; });
  if (spec.semisimple) {
    std::vector<Field> comps;
    for (const auto& t : spec.factorization.factors) {
      std::vector<u64> m;
      for (const Elem& e : t.factor.coeffs()) m.push_back(e.v);
      comps.push_back(Field::extension_unchecked(p, std::move(m)));
    }
    spec.decomposition = ProductRing(std::move(comps));
  }
  return spec;
}

/// Largest period of a degree-k recurrence over A_n. Semisimple algebras use the
/// lcm-closure over the CRT components. Otherwise every unit-c_0 recurrence over A_n
/// is simulated from the impulse state, whose period is divisible by the period of
/// every other sequence of the same recurrence; p^(nk) must fit the budget.
inline u64 group_algebra_max_period(const GroupAlgebraSpec& spec, unsigned k, u64 budget = kDefaultBudget,
                                    PeriodMethod method = PeriodMethod::Auto) {
  if (spec.semisimple) return period_set_over_ring(k, *spec.decomposition, method, budget).max();
  const auto& alg = spec.algebra;
  const u64 n = alg.cardinality();
  const u64 recs = checked_pow(n, k);
  if (recs > budget)
    fail(Errc::BudgetExceeded, std::to_string(recs) + " recurrences exceed the budget of " + std::to_string(budget));
  u64 best = 1;
  for (u64 ci = 0; ci < recs; ++ci) {
    std::vector<std::vector<u64>> c;
    u64 v = ci;
    for (unsigned i = 0; i < k; ++i) {
      c.push_back(alg.from_index(v % n));
      v /= n;
    }
    if (!alg.is_unit(c[0])) continue;
    Recurrence<CyclicGroupAlgebra> rec(alg, std::move(c));
    best = std::max(best, impulse_response_period(rec));
  }
  return best;
}

}  // namespace plab
