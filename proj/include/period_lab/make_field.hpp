#pragma once

#include <optional>
#include <string>
#include <vector>

#include "period_lab/error.hpp"
#include "period_lab/factor.hpp"
#include "period_lab/field.hpp"
#include "period_lab/poly.hpp"

namespace plab {

/// Lexicographically smallest monic irreducible of degree e over F_p, comparing the
/// little-endian tuple (c_0, ..., c_{e-1}) with c_0 most significant.
inline std::vector<u64> default_modulus(u64 p, unsigned e) {
  const Field base = Field::prime(p);
  std::vector<u64> low(e, 0);  // low[0] = c_0 is the most significant counter digit
  for (;;) {
    if (low[0] != 0) {
      std::vector<Elem> c;
      for (u64 v : low) c.push_back(base.from_int(static_cast<std::int64_t>(v)));
      c.push_back(base.one());
      if (e == 1 || is_irreducible(Poly(base, c))) {
        auto m = low;
        m.push_back(1);
        return m;
      }
    }
    std::size_t i = e;
    while (i-- > 0) {
      if (++low[i] < p) break;
      low[i] = 0;
      if (i == 0) fail(Errc::OutOfRange, "no irreducible polynomial found");  // unreachable
    }
  }
}

/// Validated construction of F_{p^e}. A supplied modulus is a little-endian
/// coefficient list over F_p and must be monic, of degree e, and irreducible.
inline Field make_field(u64 p, unsigned e = 1, std::optional<std::vector<u64>> modulus = std::nullopt) {
  if (e == 0) fail(Errc::DegreeMismatch, "extension degree must be at least 1");
  const Field base = Field::prime(p);
  if (modulus) {
    auto m = *modulus;
    while (!m.empty() && m.back() % p == 0) m.pop_back();
    if (m.size() != e + 1)
      fail(Errc::DegreeMismatch, "modulus degree " + std::to_string(static_cast<long>(m.size()) - 1) +
                                     " does not match extension degree " + std::to_string(e));
    for (auto& c : m) c %= p;
    if (m.back() != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
    std::vector<Elem> c;
    for (u64 v : m) c.push_back(Elem{v});
    if (!is_irreducible(Poly(base, std::move(c)))) fail(Errc::ReducibleModulus, "supplied modulus is reducible");
    if (e == 1) return base;
    return Field::extension_unchecked(p, std::move(m));
  }
  if (e == 1) return base;
  checked_pow(p, e);
  return Field::extension_unchecked(p, default_modulus(p, e));
}

}  // namespace plab
