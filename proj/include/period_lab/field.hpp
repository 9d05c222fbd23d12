#pragma once

// Finite fields F_{p^e}. Elements are dense little-endian coefficient vectors over
// F_p in the power basis of the modulus root, packed as base-p digits of a single
// integer (coefficient i is digit i), so equal elements always compare equal.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/integer.hpp"

namespace plab {

struct Elem {
  u64 v = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

namespace detail {

// Tables are only built for fields small enough that they stay cheap.
inline constexpr u64 kAddTableLimit = 256;
inline constexpr u64 kLogTableLimit = u64{1} << 16;

struct FieldData {
  u64 p = 0;
  unsigned e = 1;
  u64 q = 0;
  std::vector<u64> modulus;  // monic, length e + 1; empty for prime fields
  std::vector<u64> add_table;
  std::vector<u64> exp_table;  // exp_table[i] = g^i for a fixed generator g
  std::vector<u64> log_table;  // inverse of exp_table on nonzero elements
};

}  // namespace detail

class Field {
 public:
  using value_type = Elem;

  /// The prime field F_p. Throws CompositeCharacteristic unless p is a prime below 2^20.
  static Field prime(u64 p) {
    if (p >= kMaxCharacteristic)
      fail(Errc::CompositeCharacteristic, "characteristic " + std::to_string(p) + " exceeds the 2^20 ceiling");
    if (!is_prime_trial(p)) fail(Errc::CompositeCharacteristic, std::to_string(p) + " is not prime");
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->e = 1;
    d->q = p;
    return Field(std::move(d));
  }

  /// F_p[x]/<modulus>. The caller guarantees that the monic modulus is irreducible;
  /// use make_field() for a validated construction.
  static Field extension_unchecked(u64 p, std::vector<u64> modulus) {
    if (modulus.size() < 2) return prime(p);
    if (modulus.size() == 2) return prime(p);
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->e = static_cast<unsigned>(modulus.size() - 1);
    d->q = checked_pow(p, d->e);
    if (d->q >= kMaxFactorInput) fail(Errc::OutOfRange, "field order exceeds 2^63");
    d->modulus = std::move(modulus);
    Field f(d);
    f.build_tables(*d);
    return f;
  }

  u64 p() const noexcept { return d_->p; }
  unsigned e() const noexcept { return d_->e; }
  u64 q() const noexcept { return d_->q; }
  u64 cardinality() const noexcept { return d_->q; }
  bool is_prime_field() const noexcept { return d_->e == 1; }
  /// Monic defining polynomial over F_p, little-endian; empty for prime fields.
  const std::vector<u64>& modulus() const noexcept { return d_->modulus; }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus);
  }

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const noexcept {
    auto p = static_cast<std::int64_t>(d_->p);
    auto r = n % p;
    if (r < 0) r += p;
    return {static_cast<u64>(r)};
  }

  /// Element with the given little-endian coefficients; missing high coefficients are zero.
  Elem from_coeffs(std::span<const u64> coeffs) const {
    if (coeffs.size() > d_->e)
      fail(Errc::DegreeMismatch, "element has " + std::to_string(coeffs.size()) + " coefficients, field degree is " +
                                     std::to_string(d_->e));
    u64 v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] >= d_->p) fail(Errc::OutOfRange, "coefficient " + std::to_string(coeffs[i]) + " not reduced mod p");
      v = v * d_->p + coeffs[i];
    }
    return {v};
  }

  std::vector<u64> coeffs(Elem a) const {
    std::vector<u64> out(d_->e);
    for (auto& c : out) {
      c = a.v % d_->p;
      a.v /= d_->p;
    }
    return out;
  }

  /// Enumeration helpers: elements are in bijection with 0..q-1.
  Elem from_index(u64 i) const noexcept { return {i}; }
  u64 index(Elem a) const noexcept { return a.v; }
  bool contains(Elem a) const noexcept { return a.v < d_->q; }

  bool is_zero(Elem a) const noexcept { return a.v == 0; }
  bool is_one(Elem a) const noexcept { return a.v == 1; }
  bool is_unit(Elem a) const noexcept { return a.v != 0; }

  Elem add(Elem a, Elem b) const noexcept {
    const auto& d = *d_;
    if (d.e == 1) {
      u64 s = a.v + b.v;
      return {s >= d.p ? s - d.p : s};
    }
    if (d.p == 2) return {a.v ^ b.v};
    if (!d.add_table.empty()) return {d.add_table[a.v * d.q + b.v]};
    return digitwise(a, b, [p = d.p](u64 x, u64 y) { return (x + y) % p; });
  }

  Elem neg(Elem a) const noexcept {
    const auto& d = *d_;
    if (d.e == 1) return {a.v == 0 ? 0 : d.p - a.v};
    if (d.p == 2) return a;
    return digitwise(a, Elem{0}, [p = d.p](u64 x, u64) { return (p - x) % p; });
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    const auto& d = *d_;
    if (d.e == 1) return {mulmod(a.v, b.v, d.p)};
    if (a.v == 0 || b.v == 0) return {0};
    if (!d.log_table.empty()) {
      u64 s = d.log_table[a.v] + d.log_table[b.v];
      if (s >= d.q - 1) s -= d.q - 1;
      return {d.exp_table[s]};
    }
    return mul_slow(a, b);
  }

  Elem pow(Elem a, u64 n) const {
    Elem r = one();
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a.v == 0) fail(Errc::DivisionByZero, "inverse of zero");
    const auto& d = *d_;
    if (!d.log_table.empty()) {
      u64 l = d.log_table[a.v];
      return {d.exp_table[l == 0 ? 0 : d.q - 1 - l]};
    }
    return pow(a, d.q - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// The unique b with b^p = a (Frobenius is an automorphism of a finite field).
  Elem pth_root(Elem a) const { return pow(a, d_->q / d_->p); }

  /// Smallest n >= 1 with a^n = 1; always divides q - 1.
  u64 multiplicative_order(Elem a) const {
    if (a.v == 0) fail(Errc::ZeroElement, "multiplicative order of zero");
    const u64 n = d_->q - 1;
    return order_by_stripping(n, factor_integer(n), [&](u64 m) { return is_one(pow(a, m)); });
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  template <class Op>
  Elem digitwise(Elem a, Elem b, Op op) const noexcept {
    const u64 p = d_->p;
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < d_->e; ++i) {
      out += op(a.v % p, b.v % p) * scale;
      a.v /= p;
      b.v /= p;
      scale *= p;
    }
    return {out};
  }

  Elem mul_slow(Elem a, Elem b) const {
    const auto& d = *d_;
    const u64 p = d.p;
    const unsigned e = d.e;
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<u64> prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], p)) % p;
    }
    // Reduce with the monic modulus: x^e = -sum m_i x^i.
    for (std::size_t k = prod.size(); k-- > e;) {
      u64 c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < e; ++i) {
        u64 sub = mulmod(c, d.modulus[i], p);
        prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
      }
    }
    prod.resize(e);
    return from_coeffs(prod);
  }

  // `d` is the (still exclusively owned) data behind d_.
  void build_tables(detail::FieldData& d) const {
    if (d.q <= detail::kAddTableLimit && d.p != 2) {
      d.add_table.resize(d.q * d.q);
      for (u64 a = 0; a < d.q; ++a)
        for (u64 b = 0; b < d.q; ++b)
          d.add_table[a * d.q + b] = digitwise(Elem{a}, Elem{b}, [p = d.p](u64 x, u64 y) { return (x + y) % p; }).v;
    }
    if (d.q > detail::kLogTableLimit) return;
    const u64 n = d.q - 1;
    const auto fac = factor_integer(n);
    auto pow_slow = [&](Elem a, u64 m) {
      Elem r{1};
      while (m) {
        if (m & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        m >>= 1;
      }
      return r;
    };
    for (u64 g = 2; g < d.q; ++g) {
      bool generator = true;
      for (const auto& f : fac.factors) {
        if (pow_slow(Elem{g}, n / f.prime).v == 1) {
          generator = false;
          break;
        }
      }
      if (!generator) continue;
      d.exp_table.resize(n);
      d.log_table.assign(d.q, 0);
      Elem x{1};
      for (u64 i = 0; i < n; ++i) {
        d.exp_table[i] = x.v;
        d.log_table[x.v] = i;
        x = mul_slow(x, Elem{g});
      }
      return;
    }
  }

  std::shared_ptr<const detail::FieldData> d_;
};

}  // namespace plab
