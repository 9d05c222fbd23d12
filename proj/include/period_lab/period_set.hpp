#pragma once

// Sets of attainable periods. D(n) is the divisor set of n; aS and S1*S2 are the
// elementwise scalings and products. P(k, F_q) is computed three ways: the general
// lower bound (a union of p-power multiples of D(q^i - 1)), the exact closed forms
// for k <= 4, and exhaustive enumeration of the orders of all monic degree-k
// polynomials.

#include <algorithm>
#include <exception>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/field.hpp"
#include "period_lab/integer.hpp"
#include "period_lab/order.hpp"
#include "period_lab/poly.hpp"

namespace plab {

enum class Provenance { Derived, LowerBound, ClosedForm, Bruteforce, LcmClosure };

constexpr std::string_view provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::Derived: return "derived";
    case Provenance::LowerBound: return "bound";
    case Provenance::ClosedForm: return "closed";
    case Provenance::Bruteforce: return "bruteforce";
    case Provenance::LcmClosure: return "lcm_closure";
  }
  return "unknown";
}

/// Sorted, deduplicated set of positive integers.
class PeriodSet {
 public:
  PeriodSet() = default;
  PeriodSet(std::vector<u64> elems, Provenance prov = Provenance::Derived) : elems_(std::move(elems)), prov_(prov) {
    normalize();
  }
  PeriodSet(std::initializer_list<u64> elems) : elems_(elems) { normalize(); }

  const std::vector<u64>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  u64 max() const { return elems_.empty() ? 0 : elems_.back(); }
  bool contains(u64 v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }
  bool subset_of(const PeriodSet& o) const {
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
  }
  Provenance provenance() const noexcept { return prov_; }
  PeriodSet with_provenance(Provenance p) const {
    PeriodSet s = *this;
    s.prov_ = p;
    return s;
  }

  /// Equality compares the elements only.
  friend bool operator==(const PeriodSet& a, const PeriodSet& b) { return a.elems_ == b.elems_; }

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() == 0) fail(Errc::OutOfRange, "period sets hold positive integers only");
  }

  std::vector<u64> elems_;
  Provenance prov_ = Provenance::Derived;
};

inline PeriodSet divisors(u64 n) {
  if (n == 0 || n >= kMaxFactorInput) fail(Errc::OutOfRange, "divisors expects 1 <= n < 2^63");
  std::vector<u64> ds{1};
  for (const auto& [prime, exponent] : factor_integer(n).factors) {
    const std::size_t base = ds.size();
    u64 pk = 1;
    for (unsigned j = 1; j <= exponent; ++j) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return PeriodSet(std::move(ds));
}

/// aS
inline PeriodSet set_scale(u64 a, const PeriodSet& s) {
  std::vector<u64> out;
  out.reserve(s.size());
  for (u64 x : s.elems()) out.push_back(checked_mul(a, x));
  return PeriodSet(std::move(out));
}

/// S1 S2
inline PeriodSet set_product(const PeriodSet& a, const PeriodSet& b) {
  std::vector<u64> out;
  out.reserve(a.size() * b.size());
  for (u64 x : a.elems())
    for (u64 y : b.elems()) out.push_back(checked_mul(x, y));
  return PeriodSet(std::move(out));
}

inline PeriodSet set_union(std::initializer_list<PeriodSet> sets) {
  std::vector<u64> out;
  for (const auto& s : sets) out.insert(out.end(), s.elems().begin(), s.elems().end());
  return PeriodSet(std::move(out));
}

inline PeriodSet set_union(const PeriodSet& a, const PeriodSet& b) { return set_union({a, b}); }

/// Elements of a that are not in b.
inline PeriodSet set_difference(const PeriodSet& a, const PeriodSet& b) {
  std::vector<u64> out;
  std::set_difference(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(), std::back_inserter(out));
  return PeriodSet(std::move(out));
}

/// { lcm(x, y) | x in a, y in b }
inline PeriodSet lcm_closure(const PeriodSet& a, const PeriodSet& b) {
  std::vector<u64> out;
  out.reserve(a.size() * b.size());
  for (u64 x : a.elems())
    for (u64 y : b.elems()) out.push_back(checked_lcm(x, y));
  return PeriodSet(std::move(out), Provenance::LcmClosure);
}

namespace detail {

inline std::pair<u64, unsigned> require_prime_power(u64 q) {
  auto pe = prime_power_decompose(q);
  if (!pe) fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return *pe;
}

// D(q^i - 1)
inline PeriodSet dq(u64 q, unsigned i) { return divisors(checked_pow(q, i) - 1); }

}  // namespace detail

/// Union over 1 <= i <= k of {p^j | 0 <= j <= t_i} D(q^i - 1), where t_i is the least
/// t with p^t >= floor(k / i).
inline PeriodSet period_set_lower_bound(unsigned k, u64 q) {
  if (k == 0) fail(Errc::DegreeOutOfRange, "degree must be at least 1");
  const u64 p = detail::require_prime_power(q).first;
  std::vector<u64> acc;
  for (unsigned i = 1; i <= k; ++i) {
    const unsigned t = ceil_log(p, k / i);
    const PeriodSet d = detail::dq(q, i);
    u64 pj = 1;
    for (unsigned j = 0; j <= t; ++j) {
      for (u64 x : d.elems()) acc.push_back(checked_mul(pj, x));
      if (j < t) pj = checked_mul(pj, p);
    }
  }
  return PeriodSet(std::move(acc), Provenance::LowerBound);
}

/// Exact P(k, F_q) for 1 <= k <= 4, evaluated case by case.
inline PeriodSet period_set_closed_form(unsigned k, u64 q) {
  const u64 p = detail::require_prime_power(q).first;
  using detail::dq;
  PeriodSet out;
  switch (k) {
    case 1:
      out = dq(q, 1);
      break;
    case 2:
      out = set_union(dq(q, 2), set_scale(p, dq(q, 1)));
      break;
    case 3:
      if (p == 2)
        out = set_union({dq(q, 3), dq(q, 2), set_product(PeriodSet{2, 4}, dq(q, 1))});
      else
        out = set_union({dq(q, 3), dq(q, 2), set_scale(p, dq(q, 1))});
      break;
    case 4:
      if (p == 2 || p == 3)
        out = set_union({dq(q, 4), dq(q, 3), set_scale(p, dq(q, 2)), set_scale(p * p, dq(q, 1))});
      else
        out = set_union({dq(q, 4), dq(q, 3), set_scale(p, dq(q, 2))});
      break;
    default:
      fail(Errc::DegreeOutOfRange, "closed forms exist only for 1 <= k <= 4, got k = " + std::to_string(k));
  }
  return out.with_provenance(Provenance::ClosedForm);
}

inline constexpr u64 kDefaultBudget = 1'000'000;

/// { ord(f) | f monic of degree k over the field }. Enumerates the q^k monic
/// polynomials in little-endian counting order, split across `jobs` workers.
inline PeriodSet order_set_bruteforce(unsigned k, const Field& field, u64 budget = kDefaultBudget, unsigned jobs = 1) {
  if (k == 0) fail(Errc::DegreeOutOfRange, "degree must be at least 1");
  u64 total;
  try {
    total = checked_pow(field.q(), k);
  } catch (const Error&) {
    fail(Errc::BudgetExceeded, "q^k overflows");
  }
  if (total > budget)
    fail(Errc::BudgetExceeded, std::to_string(total) + " polynomials exceed the budget of " + std::to_string(budget));
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<u64>(total, 64))));

  auto sweep = [&](u64 begin, u64 end, std::set<u64>& local) {
    std::vector<Elem> c(k + 1, field.zero());
    c[k] = field.one();
    for (u64 idx = begin; idx < end; ++idx) {
      u64 v = idx;
      for (unsigned i = 0; i < k; ++i) {
        c[i] = field.from_index(v % field.q());
        v /= field.q();
      }
      local.insert(ord(Poly(field, c)).order);
    }
  };

  std::vector<std::set<u64>> partial(jobs);
  if (jobs == 1) {
    sweep(0, total, partial[0]);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    const u64 chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const u64 b = std::min(total, w * chunk), e = std::min(total, b + chunk);
      workers.emplace_back([&, w, b, e] {
        try {
          sweep(b, e, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<u64> merged;
  for (const auto& s : partial) merged.insert(merged.end(), s.begin(), s.end());
  return PeriodSet(std::move(merged), Provenance::Bruteforce);
}

}  // namespace plab
