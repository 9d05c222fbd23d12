#pragma once

// Self-check suite: golden values, theorem-level equalities between the formula
// paths and the brute-force oracles, and property sweeps. Deterministic; every
// random choice flows from a fixed seed.

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "period_lab/period_lab.hpp"

namespace plab {

enum class VerifyScope { All, Orders, PeriodSets, Rings, Properties };

inline std::optional<VerifyScope> parse_verify_scope(std::string_view s) {
  if (s == "all") return VerifyScope::All;
  if (s == "orders" || s == "§2") return VerifyScope::Orders;
  if (s == "period-sets" || s == "§3") return VerifyScope::PeriodSets;
  if (s == "rings" || s == "§4") return VerifyScope::Rings;
  if (s == "properties") return VerifyScope::Properties;
  return std::nullopt;
}

constexpr std::string_view scope_name(VerifyScope s) noexcept {
  switch (s) {
    case VerifyScope::All: return "all";
    case VerifyScope::Orders: return "orders";
    case VerifyScope::PeriodSets: return "period-sets";
    case VerifyScope::Rings: return "rings";
    case VerifyScope::Properties: return "properties";
  }
  return "unknown";
}

struct VerifyCheck {
  std::string name;
  std::string reference;  // what the expected value is anchored to
  VerifyScope scope = VerifyScope::All;
  int criterion = 0;      // acceptance criterion number
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
  }
};

namespace detail {

inline std::string set_str(const PeriodSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.elems()[i]);
  }
  return out + "}";
}

struct Outcome {
  std::string expected;
  std::string computed;
  bool pass;
};

inline Outcome same(const std::string& expected, const std::string& computed) {
  return {expected, computed, expected == computed};
}

// Every monic polynomial of degree d over f.
template <class Fn>
void for_each_monic(const Field& f, unsigned d, Fn&& fn) {
  const u64 total = checked_pow(f.q(), d);
  std::vector<Elem> c(d + 1, f.zero());
  c[d] = f.one();
  for (u64 idx = 0; idx < total; ++idx) {
    u64 v = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = f.from_index(v % f.q());
      v /= f.q();
    }
    fn(Poly(f, c));
  }
}

// Every degree-k recurrence over f with c_0 != 0.
template <class Fn>
void for_each_recurrence(const Field& f, unsigned k, Fn&& fn) {
  const u64 total = checked_pow(f.q(), k);
  for (u64 idx = 0; idx < total; ++idx) {
    std::vector<Elem> c(k);
    u64 v = idx;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = f.from_index(v % f.q());
      v /= f.q();
    }
    if (f.is_zero(c[0])) continue;
    fn(FieldRecurrence(f, std::move(c)));
  }
}

inline std::vector<Elem> state_from_index(const Field& f, unsigned k, u64 idx) {
  std::vector<Elem> s(k);
  for (auto& e : s) {
    e = f.from_index(idx % f.q());
    idx /= f.q();
  }
  return s;
}

// ---- orders, sequences, matrices ------------------------------------------

inline Outcome check_remark_order21() {
  const Field f2 = Field::prime(2);
  const Poly f = parse_poly(f2, "x^5+x^4+1");
  const auto rec = recurrence_from_char_poly(f);
  std::ostringstream got;
  got << "pipeline=" << ord(f).order << " bruteforce=" << ord_bruteforce(f)
      << " impulse=" << impulse_response_period(rec);
  return same("pipeline=21 bruteforce=21 impulse=21", got.str());
}

inline Outcome check_order_oracle() {
  std::size_t count = 0, mismatches = 0;
  for (u64 q : {2, 3}) {
    const Field f = Field::prime(q);
    for (unsigned d = 1; d <= 4; ++d)
      for_each_monic(f, d, [&](const Poly& g) {
        ++count;
        if (ord(g).order != ord_bruteforce(g)) ++mismatches;
      });
  }
  return same("150 polynomials, 0 mismatches",
              std::to_string(count) + " polynomials, " + std::to_string(mismatches) + " mismatches");
}

inline Outcome check_period_matrix_equivalence() {
  std::size_t recs = 0, bad_equiv = 0, bad_div = 0;
  for (u64 q : {2, 3}) {
    const Field f = Field::prime(q);
    for (unsigned k = 1; k <= 3; ++k)
      for_each_recurrence(f, k, [&](const FieldRecurrence& rec) {
        ++recs;
        const u64 o = ord(char_poly(rec)).order;
        if (impulse_response_period(rec) != o || companion_order_bruteforce(rec) != o) ++bad_equiv;
        const u64 states = checked_pow(q, k);
        for (u64 s = 0; s < states; ++s)
          if (o % period_bruteforce(rec, state_from_index(f, k, s)) != 0) ++bad_div;
      });
  }
  return same("33 recurrences, 0 equivalence failures, 0 divisibility failures",
              std::to_string(recs) + " recurrences, " + std::to_string(bad_equiv) + " equivalence failures, " +
                  std::to_string(bad_div) + " divisibility failures");
}

inline Outcome check_fibonacci() {
  std::ostringstream got;
  const Field f2 = Field::prime(2), f5 = Field::prime(5);
  const auto fib2 = make_recurrence(f2, {1, 1});
  const auto fib5 = make_recurrence(f5, {1, 1});
  got << "F2:" << period_bruteforce(fib2, {f2.zero(), f2.one()});
  got << " F5:" << period_bruteforce(fib5, {f5.zero(), f5.one()});
  std::size_t primes = 0, bad = 0;
  for (u64 p = 2; p < 50; ++p) {
    if (!is_prime_trial(p) || (p % 5 != 2 && p % 5 != 3)) continue;
    ++primes;
    const Field f = Field::prime(p);
    if ((2 * (p + 1)) % impulse_response_period(make_recurrence(f, {1, 1})) != 0) ++bad;
  }
  got << " inert primes:" << primes << " non-dividing:" << bad;
  return same("F2:3 F5:20 inert primes:9 non-dividing:0", got.str());
}

inline Outcome check_minimal_polynomial() {
  std::mt19937_64 rng(kDefaultSeed);
  const std::vector<Field> fields{Field::prime(2), Field::prime(3), make_field(2, 2), Field::prime(5)};
  std::size_t bad_order = 0, bad_div = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Field& f = fields[rng() % fields.size()];
    const unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    std::vector<Elem> c(k);
    for (auto& e : c) e = f.from_index(rng() % f.q());
    if (f.is_zero(c[0])) c[0] = f.from_index(1 + rng() % (f.q() - 1));
    const FieldRecurrence rec(f, c);
    std::vector<Elem> s0(k);
    for (auto& e : s0) e = f.from_index(rng() % f.q());
    const auto prefix = generate(rec, s0, 2 * k);
    const Poly m = minimal_poly(f, prefix, k);
    if (ord(m).order != period_bruteforce(rec, s0)) ++bad_order;
    if (!(char_poly(rec) % m).is_zero()) ++bad_div;
  }
  return same("200 sequences, 0 order mismatches, 0 divisibility failures",
              "200 sequences, " + std::to_string(bad_order) + " order mismatches, " + std::to_string(bad_div) +
                  " divisibility failures");
}

// ---- period sets ----------------------------------------------------------

inline Outcome check_closed_form_equality(unsigned jobs) {
  std::string diffs;
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto [p, e] = *prime_power_decompose(q);
    const Field f = make_field(p, e);
    for (unsigned k = 1; k <= 4; ++k) {
      if (!(order_set_bruteforce(k, f, kDefaultBudget, jobs) == period_set_closed_form(k, q)))
        diffs += " (k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")";
    }
  }
  return same("28 cases equal", diffs.empty() ? "28 cases equal" : "mismatch at" + diffs);
}

inline Outcome check_golden_f2() {
  std::string got;
  for (unsigned k = 1; k <= 4; ++k) got += (k > 1 ? " " : "") + set_str(period_set_closed_form(k, 2));
  return same("{1} {1,2,3} {1,2,3,4,7} {1,2,3,4,5,6,7,15}", got);
}

inline Outcome check_golden_f2_bruteforce() {
  std::string got;
  const Field f2 = Field::prime(2);
  for (unsigned k = 1; k <= 4; ++k) got += (k > 1 ? " " : "") + set_str(order_set_bruteforce(k, f2));
  return same("{1} {1,2,3} {1,2,3,4,7} {1,2,3,4,5,6,7,15}", got);
}

inline Outcome check_strictness() {
  const auto brute = order_set_bruteforce(5, Field::prime(2));
  const auto bound = period_set_lower_bound(5, 2);
  std::ostringstream got;
  got << "21 in O(5,F2):" << brute.contains(21) << " 21 in bound:" << bound.contains(21)
      << " bound subset:" << bound.subset_of(brute) << " extra:" << set_str(set_difference(brute, bound));
  // Beyond 21: (x^2+x+1)(x+1)^3 has order 12 and (x^3+x+1)(x+1)^2 has order 14,
  // and neither is p^j times a divisor of 2^i - 1 within the bound's exponent limits.
  return same("21 in O(5,F2):1 21 in bound:0 bound subset:1 extra:{12,14,21}", got.str());
}

// ---- product rings --------------------------------------------------------

inline Outcome check_ring_golden() {
  const ProductRing r = parse_components("2,3,5");
  return same("{1,2,4} {1,2,3,4,5,6,8,10,12,15,20,24,30,40,60,120}",
              set_str(period_set_over_ring(1, r)) + " " + set_str(period_set_over_ring(2, r)));
}

inline Outcome check_lcm_closure_oracle() {
  const ProductRing r = parse_components("2,3");
  std::string got;
  for (unsigned k = 1; k <= 2; ++k) {
    const auto brute = exhaustive_period_set(r, k);
    const auto closure = period_set_over_ring(k, r);
    got += (k > 1 ? " " : "") + std::string(brute == closure ? "equal" : "differ") + set_str(brute);
  }
  return same("equal{1,2} equal{1,2,3,4,6,8,12,24}", got);
}

inline Outcome check_field_characterization() {
  std::string got;
  for (const char* spec : {"2", "4", "2,3", "2,3,5"}) {
    const ProductRing r = parse_components(spec);
    for (unsigned k = 1; k <= 2; ++k) {
      const auto res = verify_field_characterization(k, r);
      if (!res.consistent) got += std::string(" [") + spec + " k=" + std::to_string(k) + "]";
    }
  }
  return same("8 cases consistent", got.empty() ? "8 cases consistent" : "inconsistent:" + got);
}

inline Outcome check_group_algebra() {
  const auto spec = make_group_algebra(2, 5);
  std::ostringstream got;
  got << "components:";
  for (const auto& f : spec.decomposition->components()) got << ' ' << f.q();
  const u64 max1 = group_algebra_max_period(spec, 1);
  got << " max(k=1):" << max1 << " >=15:" << (max1 >= 15);
  // Direct simulation in F_2[t]/<t^5 - 1> against the CRT image.
  std::mt19937_64 rng(kDefaultSeed);
  const auto& alg = spec.algebra;
  std::size_t agree = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(trial % 2);
    std::vector<std::vector<u64>> c(k);
    do {
      c[0] = alg.from_index(rng() % alg.cardinality());
    } while (!alg.is_unit(c[0]));
    for (unsigned i = 1; i < k; ++i) c[i] = alg.from_index(rng() % alg.cardinality());
    std::vector<std::vector<u64>> s0(k);
    for (auto& s : s0) s = alg.from_index(rng() % alg.cardinality());
    const Recurrence<CyclicGroupAlgebra> direct(alg, c);
    std::vector<RingElem> cc, ss;
    for (const auto& x : c) cc.push_back(spec.crt_project(x));
    for (const auto& x : s0) ss.push_back(spec.crt_project(x));
    const RingRecurrence split(*spec.decomposition, cc);
    if (period_bruteforce(direct, s0) == period_over_ring(split, ss)) ++agree;
  }
  got << " crt agreement:" << agree << "/4";
  return same("components: 2 16 max(k=1):15 >=15:1 crt agreement:4/4", got.str());
}

// ---- properties -----------------------------------------------------------

inline Outcome check_factor_reconstruction() {
  std::mt19937_64 rng(kDefaultSeed ^ 0xfac7);
  const std::vector<Field> fields{Field::prime(2), Field::prime(3), Field::prime(5)};
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Field& f = fields[static_cast<std::size_t>(trial) % fields.size()];
    const unsigned d = static_cast<unsigned>(rng() % 9);
    std::vector<Elem> c(d + 1);
    for (auto& e : c) e = f.from_index(rng() % f.q());
    if (f.is_zero(c[d])) c[d] = f.one();
    const Poly g(f, c);
    const auto fac = factor(g);
    bool ok = fac.reconstruct(f) == g;
    for (const auto& t : fac.factors) ok = ok && t.factor.is_monic() && is_irreducible(t.factor);
    if (!ok) ++bad;
  }
  return same("1000 polynomials, 0 failures", "1000 polynomials, " + std::to_string(bad) + " failures");
}

inline Outcome check_field_axioms() {
  std::size_t fields = 0, bad = 0;
  for (u64 q = 2; q <= 64; ++q) {
    const auto pe = prime_power_decompose(q);
    if (!pe) continue;
    ++fields;
    const Field f = make_field(pe->first, pe->second);
    for (u64 a = 0; a < q; ++a) {
      const Elem x{a};
      if (a && !f.is_one(f.mul(x, f.inv(x)))) ++bad;
      if (!f.is_zero(f.add(x, f.neg(x)))) ++bad;
      for (u64 b = 0; b < q; ++b) {
        const Elem y{b};
        if (!(f.add(x, y) == f.add(y, x)) || !(f.mul(x, y) == f.mul(y, x))) ++bad;
        for (u64 c = 0; c < q; ++c) {
          const Elem z{c};
          if (!(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)))) ++bad;
          if (!(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)))) ++bad;
          if (!(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)))) ++bad;
        }
      }
    }
  }
  return same("27 fields, 0 violations",
              std::to_string(fields) + " fields, " + std::to_string(bad) + " violations");
}

inline Outcome check_poly_text_roundtrip() {
  std::mt19937_64 rng(kDefaultSeed ^ 0x7e47);
  const std::vector<Field> fields{Field::prime(2), Field::prime(7), make_field(3, 2), make_field(2, 3)};
  std::size_t bad = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Field& f = fields[static_cast<std::size_t>(trial) % fields.size()];
    std::vector<Elem> c(rng() % 8);
    for (auto& e : c) e = f.from_index(rng() % f.q());
    const Poly g(f, c);
    if (!(parse_poly(f, format_poly(g)) == g)) ++bad;
  }
  return same("400 polynomials, 0 failures", "400 polynomials, " + std::to_string(bad) + " failures");
}

}  // namespace detail

/// Runs every check in the scope; exceptions inside a check are recorded as failures.
inline VerifyReport run_verify(VerifyScope scope = VerifyScope::All, unsigned jobs = 1) {
  using detail::Outcome;
  struct Spec {
    const char* name;
    const char* reference;
    VerifyScope scope;
    int criterion;
    std::function<Outcome()> run;
  };
  const std::vector<Spec> specs{
      {"P(k,F_q) closed form = bruteforce, k<=4, q in {2,3,4,5,7,8,9}", "closed forms for degrees 1-4",
       VerifyScope::PeriodSets, 1, [jobs] { return detail::check_closed_form_equality(jobs); }},
      {"P(1..4,F_2) golden sets, closed form", "worked binary example", VerifyScope::PeriodSets, 2,
       detail::check_golden_f2},
      {"P(4,F_2) = {1,2,3,4,5,6,7,15}", "worked binary example", VerifyScope::PeriodSets, 2,
       detail::check_golden_f2_bruteforce},
      {"ord(x^5+x^4+1)/F_2 = 21", "product of primitive quadratic and cubic", VerifyScope::Orders, 3,
       detail::check_remark_order21},
      {"21 in O(5,F_2) but not in the lower bound", "strict containment at k=5", VerifyScope::PeriodSets, 3,
       detail::check_strictness},
      {"ord pipeline = ord bruteforce, all monic deg 1..4 over F_2, F_3", "definition of polynomial order",
       VerifyScope::Orders, 4, detail::check_order_oracle},
      {"impulse period = ord(C) = ord(f), rho | ord(f), q in {2,3}, k<=3", "period/matrix/polynomial order",
       VerifyScope::Orders, 5, detail::check_period_matrix_equivalence},
      {"Fibonacci periods and 2(p+1) divisibility", "Fibonacci modulo 2 and 5", VerifyScope::Orders, 6,
       detail::check_fibonacci},
      {"ord(minimal polynomial) = period, m | f", "minimal polynomial determines the period", VerifyScope::Orders,
       7, detail::check_minimal_polynomial},
      {"P(2, F_2⊕F_3⊕F_5) has 16 elements ending 120", "the ring Z/30", VerifyScope::Rings, 8,
       detail::check_ring_golden},
      {"exhaustive ring periods = lcm-closure over F_2⊕F_3", "lcm-closure of component sets", VerifyScope::Rings, 9,
       detail::check_lcm_closure_oracle},
      {"max period |R|^k-1 iff R is a field", "field characterization by maximal period", VerifyScope::Rings, 10,
       detail::check_field_characterization},
      {"A_5 over F_2 = F_2⊕F_16, max period 15, CRT agreement", "cyclic group algebra", VerifyScope::Rings, 11,
       detail::check_group_algebra},
      {"factorization reconstruction, 1000 random polynomials", "property", VerifyScope::Properties, 12,
       detail::check_factor_reconstruction},
      {"field axioms, every field with q <= 64", "property", VerifyScope::Properties, 12,
       detail::check_field_axioms},
      {"polynomial text round-trip", "property", VerifyScope::Properties, 12, detail::check_poly_text_roundtrip},
  };
  VerifyReport report;
  for (const auto& s : specs) {
    if (scope != VerifyScope::All && scope != s.scope) continue;
    VerifyCheck c{s.name, s.reference, s.scope, s.criterion, {}, {}, false, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto o = s.run();
      c.expected = std::move(o.expected);
      c.computed = std::move(o.computed);
      c.pass = o.pass;
    } catch (const std::exception& e) {
      c.computed = std::string("exception: ") + e.what();
      c.pass = false;
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace plab
