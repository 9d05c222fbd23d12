#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/field.hpp"
#include "period_lab/poly.hpp"
#include "period_lab/recurrence.hpp"

namespace plab {

using FieldRecurrence = Recurrence<Field>;

/// Recurrence over a field from integer coefficients (c_0, ..., c_{k-1}).
inline FieldRecurrence make_recurrence(const Field& f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elem> c;
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return FieldRecurrence(f, std::move(c));
}

/// x^k - sum c_i x^i.
inline Poly char_poly(const FieldRecurrence& rec) {
  const Field& f = rec.ring();
  std::vector<Elem> c;
  c.reserve(rec.degree() + 1);
  for (Elem ci : rec.coeffs()) c.push_back(f.neg(ci));
  c.push_back(f.one());
  return Poly(f, std::move(c));
}

/// Recurrence whose characteristic polynomial is the monic f; f(0) must be nonzero.
inline FieldRecurrence recurrence_from_char_poly(const Poly& f) {
  if (f.degree() < 1) fail(Errc::DegreeOutOfRange, "characteristic polynomial must have degree >= 1");
  const Poly m = monic(f);
  const Field& F = m.field();
  std::vector<Elem> c;
  for (std::size_t i = 0; i + 1 < m.coeffs().size(); ++i) c.push_back(F.neg(m.coeffs()[i]));
  return FieldRecurrence(F, std::move(c));
}

using Matrix = std::vector<std::vector<Elem>>;

/// k x k matrix with s_{n+1} = s_n C for row state vectors s_n = (a_n, ..., a_{n+k-1}).
inline Matrix companion_matrix(const FieldRecurrence& rec) {
  const Field& f = rec.ring();
  const std::size_t k = rec.degree();
  Matrix m(k, std::vector<Elem>(k, f.zero()));
  for (std::size_t i = 1; i < k; ++i) m[i][i - 1] = f.one();
  for (std::size_t i = 0; i < k; ++i) m[i][k - 1] = rec.coeffs()[i];
  return m;
}

inline Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Elem>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (f.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][l], b[l][j]));
    }
  return out;
}

/// Smallest n with C^n = I by repeated multiplication. Default cap q^k - 1.
inline u64 companion_order_bruteforce(const FieldRecurrence& rec, std::optional<u64> cap = std::nullopt) {
  const Field& f = rec.ring();
  const std::size_t k = rec.degree();
  const u64 limit = cap ? *cap : checked_pow(f.q(), k) - 1;
  Matrix id(k, std::vector<Elem>(k, f.zero()));
  for (std::size_t i = 0; i < k; ++i) id[i][i] = f.one();
  const Matrix c = companion_matrix(rec);
  Matrix m = c;
  for (u64 n = 1; n <= limit; ++n) {
    if (m == id) return n;
    m = mat_mul(f, m, c);
  }
  fail(Errc::CapExceeded, "companion matrix order exceeds " + std::to_string(limit));
}

/// Berlekamp-Massey. Returns the monic minimal polynomial of a sequence whose
/// linear complexity is at most `degree_bound`; the zero sequence gives 1.
inline Poly minimal_poly(const Field& f, std::span<const Elem> terms, std::size_t degree_bound) {
  if (terms.size() < 2 * degree_bound)
    fail(Errc::InsufficientPrefix, "need " + std::to_string(2 * degree_bound) + " terms, got " +
                                       std::to_string(terms.size()));
  // Connection polynomial C(z) = 1 + c_1 z + ... with sum_{i<=L} c_i s_{n-i} = 0.
  std::vector<Elem> conn{f.one()}, prev{f.one()};
  std::size_t length = 0, shift = 1;
  Elem prev_disc = f.one();
  for (std::size_t n = 0; n < terms.size(); ++n) {
    Elem disc = terms[n];
    for (std::size_t i = 1; i <= length && i < conn.size(); ++i) disc = f.add(disc, f.mul(conn[i], terms[n - i]));
    if (f.is_zero(disc)) {
      ++shift;
      continue;
    }
    const Elem coef = f.div(disc, prev_disc);
    auto saved = conn;
    if (conn.size() < prev.size() + shift) conn.resize(prev.size() + shift, f.zero());
    for (std::size_t i = 0; i < prev.size(); ++i) conn[i + shift] = f.sub(conn[i + shift], f.mul(coef, prev[i]));
    if (2 * length <= n) {
      length = n + 1 - length;
      prev = std::move(saved);
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
  }
  if (length > degree_bound)
    fail(Errc::InsufficientPrefix, "linear complexity " + std::to_string(length) + " exceeds the bound " +
                                       std::to_string(degree_bound));
  // m(x) = x^L C(1/x).
  conn.resize(length + 1, f.zero());
  std::vector<Elem> m(conn.rbegin(), conn.rend());
  return monic(Poly(f, std::move(m)));
}

/// True iff a_{n+m} = a_n for every n with n + m inside the prefix.
inline bool is_m_periodic(std::span<const Elem> terms, std::size_t m) {
  for (std::size_t n = 0; n + m < terms.size(); ++n)
    if (!(terms[n] == terms[n + m])) return false;
  return true;
}

}  // namespace plab
