#pragma once

// Dense univariate polynomials over a Field, little-endian, no trailing zeros.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/field.hpp"

namespace plab {

class Poly {
 public:
  /// Degree of the zero polynomial.
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  /// Little-endian integer coefficients mapped through Z -> F_p.
  static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(f.from_int(v));
    return Poly(f, std::move(c));
  }
  static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
  static Poly one(const Field& f) { return constant(f, f.one()); }
  static Poly monomial(const Field& f, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, f.zero());
    v[degree] = c;
    return Poly(f, std::move(v));
  }
  static Poly x(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t degree() const noexcept { return c_.empty() ? kNegInf : static_cast<std::int64_t>(c_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : field_.zero(); }
  Elem lead() const noexcept { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && field_.is_one(c_.back()); }
  bool is_one() const noexcept { return c_.size() == 1 && field_.is_one(c_[0]); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  Field field_;
  std::vector<Elem> c_;
};

namespace detail {

inline void require_same(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) fail(Errc::MixedContexts, "polynomials over different fields");
}

}  // namespace detail

inline Poly operator+(const Poly& a, const Poly& b) {
  detail::require_same(a, b);
  const auto& f = a.field();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

inline Poly operator-(const Poly& a) {
  const auto& f = a.field();
  std::vector<Elem> c = a.coeffs();
  for (auto& x : c) x = f.neg(x);
  return Poly(f, std::move(c));
}

inline Poly operator-(const Poly& a, const Poly& b) {
  detail::require_same(a, b);
  const auto& f = a.field();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

inline Poly operator*(const Poly& a, const Poly& b) {
  detail::require_same(a, b);
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Elem> c(ca.size() + cb.size() - 1, f.zero());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (f.is_zero(ca[i])) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(ca[i], cb[j]));
  }
  return Poly(f, std::move(c));
}

inline Poly scale(const Poly& a, Elem s) {
  const auto& f = a.field();
  std::vector<Elem> c = a.coeffs();
  for (auto& x : c) x = f.mul(x, s);
  return Poly(f, std::move(c));
}

/// a scaled so that its leading coefficient is 1; the zero polynomial is returned unchanged.
inline Poly monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.lead()));
}

/// (quotient, remainder) with deg(remainder) < deg(b).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  detail::require_same(a, b);
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  const auto& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  const Elem lead_inv = f.inv(cb.back());
  std::vector<Elem> q(r.size() - db, f.zero());
  for (std::size_t k = r.size(); k-- > db;) {
    if (f.is_zero(r[k])) continue;
    Elem t = f.mul(r[k], lead_inv);
    q[k - db] = t;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(t, cb[i]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  detail::require_same(a, b);
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

struct ExtendedGcd {
  Poly g, s, t;  // g = s*a + t*b, g monic
};

inline ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  detail::require_same(a, b);
  const auto& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1(f), t0(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem li = f.inv(r0.lead());
  return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

inline Elem eval(const Poly& a, Elem x) {
  const auto& f = a.field();
  Elem acc = f.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
  return acc;
}

inline Poly derivative(const Poly& a) {
  const auto& f = a.field();
  if (a.coeffs().size() <= 1) return Poly(f);
  std::vector<Elem> c(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    c[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i % f.p())), a.coeffs()[i]);
  return Poly(f, std::move(c));
}

/// base^n mod m by square-and-multiply.
inline Poly powmod(Poly base, u64 n, const Poly& m) {
  detail::require_same(base, m);
  if (m.is_zero()) fail(Errc::DivisionByZero, "powmod with zero modulus");
  Poly r = Poly::one(m.field()) % m;
  base = base % m;
  while (n) {
    if (n & 1) r = (r * base) % m;
    n >>= 1;
    if (n) base = (base * base) % m;
  }
  return r;
}

/// Canonical total order: degree first, then coefficient vectors compared
/// little-endian, each coefficient by its own little-endian F_p digits.
inline bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& f = a.field();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == b.coeffs()[i]) continue;
    return f.coeffs(a.coeffs()[i]) < f.coeffs(b.coeffs()[i]);
  }
  return false;
}

}  // namespace plab
