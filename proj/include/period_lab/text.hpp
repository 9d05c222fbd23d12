#pragma once

// Text formats shared by the CLI and the tests.
//
//   field:    "p" | "p^e" | "p^e/<poly over F_p>"       e.g. 2^3/x^3+x+1
//             (a bare prime power q is read as F_q with the default modulus)
//   element:  integer for prime fields, "[c0,c1,...]" little-endian for extensions
//   poly:     term (('+'|'-') term)*,
//             term := coeff | coeff '*' x ['^' exp] | x ['^' exp]
//             where x is the variable letter ('x', or 't' for group algebras)
//   ring element: "(a1,...,ar)", one element per component

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/field.hpp"
#include "period_lab/make_field.hpp"
#include "period_lab/poly.hpp"
#include "period_lab/product_ring.hpp"

namespace plab {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected an integer");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + i_, v);
    if (ec != std::errc{}) error("integer out of range");
    return neg ? -v : v;
  }
  u64 unsigned_integer() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected a nonnegative integer");
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + i_, v);
    if (ec != std::errc{}) error("integer out of range");
    return v;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, what + " at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }
  std::size_t pos() const noexcept { return i_; }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

inline Elem parse_element_at(Cursor& cur, const Field& f) {
  if (cur.accept('[')) {
    std::vector<u64> c;
    if (!cur.accept(']')) {
      do {
        c.push_back(f.from_int(cur.integer()).v);
      } while (cur.accept(','));
      cur.expect(']');
    }
    if (c.size() > f.e()) cur.error("element has more than e coefficients");
    return f.from_coeffs(c);
  }
  return f.from_int(cur.integer());
}

// Coefficient list over F_p from a polynomial in x or t; used for moduli.
inline std::vector<std::pair<Elem, u64>> parse_terms(Cursor& cur, const Field& f, std::string_view vars) {
  std::vector<std::pair<Elem, u64>> terms;
  bool negate = false;
  if (cur.accept('-'))
    negate = true;
  else
    cur.accept('+');
  for (;;) {
    Elem coef = f.one();
    u64 exp = 0;
    const char c = cur.peek();
    auto is_var = [&](char ch) { return vars.find(ch) != std::string_view::npos && ch != '\0'; };
    if (is_var(c)) {
      cur.accept(c);
      exp = 1;
      if (cur.accept('^')) exp = cur.unsigned_integer();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '[') {
      coef = parse_element_at(cur, f);
      if (cur.accept('*')) {
        const char v = cur.peek();
        if (!is_var(v)) cur.error("expected the variable after '*'");
        cur.accept(v);
        exp = 1;
        if (cur.accept('^')) exp = cur.unsigned_integer();
      }
    } else {
      cur.error("expected a term");
    }
    if (exp > 4096) cur.error("exponent too large");
    terms.emplace_back(negate ? f.neg(coef) : coef, exp);
    if (cur.accept('+'))
      negate = false;
    else if (cur.accept('-'))
      negate = true;
    else
      break;
  }
  return terms;
}

}  // namespace detail

/// Parses a polynomial in `x` (or `t`) over the field.
inline Poly parse_poly(const Field& f, std::string_view text) {
  detail::Cursor cur(text);
  auto terms = detail::parse_terms(cur, f, "xt");
  if (!cur.done()) cur.error("trailing input");
  std::vector<Elem> c;
  for (const auto& [coef, exp] : terms) {
    if (c.size() <= exp) c.resize(exp + 1, f.zero());
    c[exp] = f.add(c[exp], coef);
  }
  return Poly(f, std::move(c));
}

inline Elem parse_element(const Field& f, std::string_view text) {
  detail::Cursor cur(text);
  Elem e = detail::parse_element_at(cur, f);
  if (!cur.done()) cur.error("trailing input");
  return e;
}

/// Comma-separated elements; brackets nest, so "[1,0],[0,1]" is two elements.
inline std::vector<Elem> parse_element_list(const Field& f, std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Elem> out;
  if (cur.done()) return out;
  do {
    out.push_back(detail::parse_element_at(cur, f));
  } while (cur.accept(','));
  if (!cur.done()) cur.error("trailing input");
  return out;
}

inline std::string format_element(const Field& f, Elem a) {
  if (f.is_prime_field()) return std::to_string(a.v);
  std::string s = "[";
  auto c = f.coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

/// Descending-degree rendering that parse_poly maps back to the same polynomial.
inline std::string format_poly(const Poly& a, char var = 'x') {
  if (a.is_zero()) return "0";
  const Field& f = a.field();
  std::string s;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const Elem c = a.coeffs()[i];
    if (f.is_zero(c)) continue;
    if (!s.empty()) s += '+';
    const bool show_coef = i == 0 || !f.is_one(c);
    if (show_coef) s += format_element(f, c);
    if (i > 0) {
      if (show_coef) s += '*';
      s += var;
      if (i > 1) s += '^' + std::to_string(i);
    }
  }
  return s;
}

inline Field parse_field(std::string_view text) {
  detail::Cursor cur(text);
  const u64 p = cur.unsigned_integer();
  unsigned e = 1;
  if (cur.accept('^')) {
    const u64 ev = cur.unsigned_integer();
    if (ev == 0 || ev > 64) cur.error("extension degree out of range");
    e = static_cast<unsigned>(ev);
  }
  std::optional<std::vector<u64>> modulus;
  if (cur.accept('/')) {
    const Field base = Field::prime(p);
    auto terms = detail::parse_terms(cur, base, "xt");
    std::vector<u64> m;
    for (const auto& [coef, exp] : terms) {
      if (m.size() <= exp) m.resize(exp + 1, 0);
      m[exp] = base.add(Elem{m[exp]}, coef).v;
    }
    modulus = std::move(m);
  }
  if (!cur.done()) cur.error("trailing input");
  if (!modulus && e == 1) {
    // A bare prime power q stands for F_q with the default modulus.
    if (p >= 2 && !is_prime_trial(p)) {
      auto pe = prime_power_decompose(p);
      if (!pe) fail(Errc::NotPrimePower, std::to_string(p) + " is not a prime power");
      return make_field(pe->first, pe->second);
    }
    return Field::prime(p);
  }
  return make_field(p, e, modulus);
}

inline std::string format_field(const Field& f) {
  if (f.is_prime_field()) return std::to_string(f.p());
  std::vector<Elem> m;
  const Field base = Field::prime(f.p());
  for (u64 c : f.modulus()) m.push_back(Elem{c});
  return std::to_string(f.p()) + "^" + std::to_string(f.e()) + "/" + format_poly(Poly(base, std::move(m)));
}

/// "(a1,...,ar)"
inline RingElem parse_ring_element(const ProductRing& ring, std::string_view text) {
  detail::Cursor cur(text);
  RingElem out;
  cur.expect('(');
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i) cur.expect(',');
    out.push_back(detail::parse_element_at(cur, ring.component(i)));
  }
  cur.expect(')');
  if (!cur.done()) cur.error("trailing input");
  return out;
}

/// "(..),(..),..."
inline std::vector<RingElem> parse_ring_element_list(const ProductRing& ring, std::string_view text) {
  std::vector<RingElem> out;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') {
      if (depth == 0) fail(Errc::ParseError, "unbalanced brackets in \"" + std::string(text) + "\"");
      --depth;
    }
    if (c == ',' && depth == 0) {
      out.push_back(parse_ring_element(ring, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) fail(Errc::ParseError, "unbalanced brackets in \"" + std::string(text) + "\"");
  return out;
}

inline std::string format_ring_element(const ProductRing& ring, const RingElem& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i) s += ',';
    s += format_element(ring.component(i), a[i]);
  }
  return s + ")";
}

/// Comma-separated field specs, e.g. "2,3,5" or "2,2^2".
inline ProductRing parse_components(std::string_view text) {
  std::vector<Field> comps;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      comps.push_back(parse_field(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return ProductRing(std::move(comps));
}

}  // namespace plab
