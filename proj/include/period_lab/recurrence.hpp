#pragma once

// Linear recurrences a_{n+k} = sum_{i<k} c_i a_{n+i} over any finite commutative
// ring exposing the small interface below. c_0 must be a unit, which makes the
// state map invertible, so every sequence is purely periodic and the period is the
// number of steps until the initial state recurs.

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/integer.hpp"

namespace plab {

template <class R>
concept FiniteRing = requires(const R& r, const typename R::value_type& a) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.cardinality() } -> std::convertible_to<u64>;
  { a == a } -> std::convertible_to<bool>;
};

template <FiniteRing Ring>
class Recurrence {
 public:
  using value_type = typename Ring::value_type;
  using State = std::vector<value_type>;

  /// coeffs = (c_0, ..., c_{k-1}); k = coeffs.size() >= 1 and c_0 must be a unit.
  Recurrence(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (c_.empty()) fail(Errc::LengthMismatch, "a recurrence needs degree k >= 1");
    if (!ring_.is_unit(c_[0])) fail(Errc::NonUnitC0, "c_0 must be a unit");
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return c_.size(); }
  const std::vector<value_type>& coeffs() const noexcept { return c_; }

  /// sum_i c_i * state_i, the term following `state`.
  value_type next_term(std::span<const value_type> state) const {
    value_type acc = ring_.zero();
    for (std::size_t i = 0; i < c_.size(); ++i) acc = ring_.add(acc, ring_.mul(c_[i], state[i]));
    return acc;
  }

  /// s_n -> s_{n+1} in place.
  void step(State& state) const {
    value_type t = next_term(state);
    for (std::size_t i = 0; i + 1 < state.size(); ++i) state[i] = std::move(state[i + 1]);
    state.back() = std::move(t);
  }

  void check_state(const State& s) const {
    if (s.size() != c_.size())
      fail(Errc::LengthMismatch,
           "state has " + std::to_string(s.size()) + " entries, recurrence degree is " + std::to_string(c_.size()));
  }

  /// Initial state (0, ..., 0, 1) of the impulse response sequence.
  State impulse_state() const {
    State s(c_.size(), ring_.zero());
    s.back() = ring_.one();
    return s;
  }

 private:
  Ring ring_;
  std::vector<value_type> c_;
};

/// First n terms a_0, ..., a_{n-1} of the sequence with initial state s0.
template <FiniteRing Ring>
std::vector<typename Ring::value_type> generate(const Recurrence<Ring>& rec, typename Recurrence<Ring>::State s0,
                                                std::size_t n) {
  rec.check_state(s0);
  std::vector<typename Ring::value_type> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(s0.front());
    rec.step(s0);
  }
  return out;
}

/// |R|^k, the trivial bound on the number of distinct states.
template <FiniteRing Ring>
u64 state_space_size(const Recurrence<Ring>& rec) {
  return checked_pow(rec.ring().cardinality(), rec.degree());
}

/// Steps from s0 until the state first returns to s0. The cap defaults to |R|^k.
template <FiniteRing Ring>
u64 period_bruteforce(const Recurrence<Ring>& rec, const typename Recurrence<Ring>::State& s0,
                      std::optional<u64> cap = std::nullopt) {
  rec.check_state(s0);
  const u64 limit = cap ? *cap : state_space_size(rec);
  auto s = s0;
  for (u64 n = 1; n <= limit; ++n) {
    rec.step(s);
    if (s == s0) return n;
  }
  fail(Errc::CapExceeded, "state did not recur within " + std::to_string(limit) + " steps");
}

/// Period of the sequence with initial state (0, ..., 0, 1).
template <FiniteRing Ring>
u64 impulse_response_period(const Recurrence<Ring>& rec) {
  return period_bruteforce(rec, rec.impulse_state());
}

}  // namespace plab
