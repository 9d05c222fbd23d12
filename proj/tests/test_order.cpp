#include <random>

#include "support.hpp"

using namespace plab;
using testutil::P;

TEST(StripXPower, Examples) {
  const Field f2 = make_field(2);
  EXPECT_EQ(strip_x_power(P(f2, "x^3+x^2")), (std::pair<std::size_t, Poly>{2, P(f2, "x+1")}));
  EXPECT_EQ(strip_x_power(P(f2, "x^2+x+1")), (std::pair<std::size_t, Poly>{0, P(f2, "x^2+x+1")}));
  EXPECT_EQ(strip_x_power(P(f2, "x^5")), (std::pair<std::size_t, Poly>{5, P(f2, "1")}));
  EXPECT_ERRC(strip_x_power(Poly(f2)), Errc::ZeroPolynomial);
}

TEST(OrdIrreducible, Examples) {
  const Field f2 = make_field(2), f7 = make_field(7);
  EXPECT_EQ(ord_irreducible(P(f2, "x^2+x+1")), 3u);
  EXPECT_EQ(ord_irreducible(P(f2, "x^3+x+1")), 7u);
  EXPECT_EQ(ord_irreducible(P(f7, "x-1")), 1u);
  EXPECT_ERRC(ord_irreducible(P(f2, "x^2+1")), Errc::ReduciblePolynomial);
  EXPECT_ERRC(ord_irreducible(P(f2, "x")), Errc::XDividesG);
}

TEST(OrdPrimePower, Examples) {
  const Field f2 = make_field(2), f5 = make_field(5);
  EXPECT_EQ(ord_prime_power(P(f5, "x-3"), 2), 20u);
  EXPECT_EQ(ord_prime_power(P(f2, "x^3+x+1"), 1), 7u);
  EXPECT_EQ(ord_prime_power(P(f2, "x+1"), 3), 4u);
  // Oracle: (x+1)^3 divides x^4 - 1 and no smaller x^n - 1.
  EXPECT_EQ(testutil::order_by_scan(P(f2, "x^3+x^2+x+1"), 100), 4u);
}

TEST(Ord, Examples) {
  const Field f2 = make_field(2), f5 = make_field(5);
  EXPECT_EQ(ord(P(f2, "x^5+x^4+1")).order, 21u);
  EXPECT_EQ(ord(P(f5, "x^2-x-1")).order, 20u);
  EXPECT_EQ(ord(P(f2, "x^2-x-1")).order, 3u);
  EXPECT_EQ(ord(P(f5, "4")).order, 1u);
  EXPECT_ERRC(ord(Poly(f2)), Errc::ZeroPolynomial);
}

TEST(Ord, LedgerEntries) {
  const Field f2 = make_field(2);
  // x^2 (x+1)^3 (x^3+x+1)
  const auto r = ord(P(f2, "x^2") * P(f2, "x^3+x^2+x+1") * P(f2, "x^3+x+1"));
  EXPECT_EQ(r.stripped, 2u);
  ASSERT_EQ(r.per_factor.size(), 2u);
  EXPECT_EQ(r.per_factor[0].factor, P(f2, "x+1"));
  EXPECT_EQ(r.per_factor[0].multiplicity, 3u);
  EXPECT_EQ(r.per_factor[0].p_exponent, 2u);
  EXPECT_EQ(r.per_factor[0].contribution, 4u);
  EXPECT_EQ(r.per_factor[1].contribution, 7u);
  EXPECT_EQ(r.order, 28u);
}

TEST(OrdBruteforce, Examples) {
  const Field f2 = make_field(2), f3 = make_field(3), f5 = make_field(5);
  EXPECT_EQ(ord_bruteforce(P(f2, "x^2+x+1")), 3u);
  EXPECT_EQ(ord_bruteforce(P(f3, "x-1")), 1u);
  EXPECT_EQ(ord_bruteforce(P(f5, "x^2-x-1")), 20u);
  EXPECT_ERRC(ord_bruteforce(P(f5, "x^2-x-1"), 19), Errc::LimitExceeded);
}

TEST(Ord, OracleEquivalenceAllSmallMonics) {
  for (u64 q : {2, 3}) {
    const Field f = make_field(q);
    for (unsigned d = 1; d <= 4; ++d)
      for (const auto& g : testutil::monics(f, d)) {
        const u64 o = ord(g).order;
        EXPECT_EQ(o, ord_bruteforce(g)) << format_poly(g);
        EXPECT_EQ(o, testutil::order_by_scan(strip_x_power(g).second, 1000)) << format_poly(g);
      }
  }
}

TEST(Ord, OracleEquivalenceRandomF4F5) {
  std::mt19937_64 rng(21);
  for (const Field& f : {make_field(2, 2), make_field(5)})
    for (int i = 0; i < 250; ++i) {
      const unsigned d = 1 + static_cast<unsigned>(rng() % 6);
      std::vector<Elem> c(d + 1);
      for (auto& e : c) e = f.from_index(rng() % f.q());
      c[d] = f.one();
      const Poly g(f, c);
      EXPECT_EQ(ord(g).order, ord_bruteforce(g)) << format_poly(g);
    }
}

TEST(Ord, InsensitiveToXPowersAndScalars) {
  std::mt19937_64 rng(23);
  const Field f = make_field(3, 2);
  for (int i = 0; i < 100; ++i) {
    std::vector<Elem> c(1 + rng() % 5);
    for (auto& e : c) e = f.from_index(rng() % f.q());
    const Poly g(f, c);
    if (g.is_zero()) continue;
    const u64 o = ord(g).order;
    EXPECT_EQ(ord(g * Poly::monomial(f, f.one(), rng() % 4)).order, o);
    EXPECT_EQ(ord(scale(g, f.from_index(1 + rng() % (f.q() - 1)))).order, o);
  }
}

TEST(Ord, IrreducibleOrderDividesGroupOrder) {
  for (u64 q : {2, 3, 4}) {
    const auto pe = *prime_power_decompose(q);
    const Field f = make_field(pe.first, pe.second);
    for (unsigned d = 1; d <= 4; ++d)
      for (const auto& g : testutil::monics(f, d)) {
        if (f.is_zero(g.coeff(0)) || !is_irreducible(g)) continue;
        EXPECT_EQ((checked_pow(q, d) - 1) % ord_irreducible(g), 0u);
      }
  }
}

TEST(Ord, PrimitiveCountMatchesTotient) {
  const std::vector<std::pair<u64, unsigned>> cases{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}};
  for (const auto& [q, k] : cases) {
    const Field f = make_field(q);
    const u64 full = checked_pow(q, k) - 1;
    u64 count = 0;
    for (const auto& g : testutil::monics(f, k))
      if (!f.is_zero(g.coeff(0)) && testutil::irreducible_by_trial(g) && ord(g).order == full) ++count;
    EXPECT_EQ(count, testutil::euler_phi(full) / k) << "q=" << q << " k=" << k;
  }
}

TEST(Ord, LargeDegreeUsesIntegerFactorization) {
  // x^31 + x^3 + 1 is primitive over F_2, so its order is the Mersenne prime 2^31 - 1.
  const Field f2 = make_field(2);
  EXPECT_EQ(ord(P(f2, "x^31+x^3+1")).order, (u64{1} << 31) - 1);
  // A degree-40 product keeps the lcm within 64 bits.
  EXPECT_EQ(ord(P(f2, "x^31+x^3+1") * P(f2, "x^9+x^4+1")).order, ((u64{1} << 31) - 1) * 511);
}
