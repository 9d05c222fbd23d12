#include <random>

#include "support.hpp"

using namespace plab;
using testutil::V;

using Vec = std::vector<u64>;

namespace {

ProductRing ring(std::initializer_list<u64> qs) {
  std::vector<Field> comps;
  for (u64 q : qs) {
    const auto pe = *prime_power_decompose(q);
    comps.push_back(make_field(pe.first, pe.second));
  }
  return ProductRing(std::move(comps));
}

RingRecurrence ring_fib(const ProductRing& r) { return RingRecurrence(r, {r.one(), r.one()}); }

}  // namespace

TEST(ProductRing, Construction) {
  EXPECT_EQ(ring({2, 3, 5}).cardinality(), 30u);
  const auto r1 = ring({7});
  EXPECT_TRUE(r1.is_field());
  EXPECT_EQ(V(period_set_over_ring(2, r1)), V(period_set_closed_form(2, 7)));
  const auto r22 = ring({2, 2});
  EXPECT_EQ(r22.cardinality(), 4u);
  EXPECT_EQ(r22.mul(r22.from_ints({1, 0}), r22.from_ints({0, 1})), r22.zero());
  EXPECT_FALSE(r22.is_unit(r22.from_ints({1, 0})));
  EXPECT_ERRC(ring({2, 3}).component(2), Errc::IndexOutOfRange);
  EXPECT_ERRC(make_product_ring({make_field(6)}), Errc::CompositeCharacteristic);
}

TEST(Project, Examples) {
  const auto r = ring({2, 3, 5});
  EXPECT_EQ(project(r, r.from_ints({1, 2, 4}), 1), Elem{2});
  const std::vector<RingElem> ones(4, r.one());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(project(r, ones, i), std::vector<Elem>(4, Elem{1}));
  EXPECT_ERRC(project(r, r.one(), 3), Errc::IndexOutOfRange);

  const auto r25 = ring({2, 5});
  const auto fib = ring_fib(r25);
  const std::vector<RingElem> s0{r25.zero(), r25.one()};
  EXPECT_EQ(period_bruteforce(project(fib, 0), project(r25, s0, 0)), 3u);
  EXPECT_EQ(period_bruteforce(project(fib, 1), project(r25, s0, 1)), 20u);
}

TEST(PeriodOverRing, Examples) {
  const auto r25 = ring({2, 5});
  const auto fib = ring_fib(r25);
  const std::vector<RingElem> s0{r25.zero(), r25.one()};
  EXPECT_EQ(period_over_ring(fib, s0), 60u);
  EXPECT_EQ(period_over_ring(fib, s0, RingPeriodMode::Direct), 60u);
  EXPECT_EQ(period_over_ring(fib, {r25.zero(), r25.zero()}), 1u);
  const auto r5 = ring({5});
  EXPECT_EQ(period_over_ring(ring_fib(r5), {r5.zero(), r5.one()}), 20u);
  EXPECT_ERRC(RingRecurrence(r25, {r25.from_ints({1, 0}), r25.one()}), Errc::NonUnitC0);
}

TEST(PeriodOverRing, LcmOfComponentPeriodsOnRandomSamples) {
  std::mt19937_64 rng(43);
  const std::vector<ProductRing> rings{ring({2, 3}), ring({2, 3, 5}), ring({4, 3}), ring({2, 2}), ring({3, 7}),
                                       ring({2, 4, 3})};
  int tested = 0;
  while (tested < 200) {
    const auto& r = rings[rng() % rings.size()];
    const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    if (checked_pow(r.cardinality(), k) > 10000) continue;
    std::vector<RingElem> c(k), s0(k);
    for (auto& x : c) x = r.from_index(rng() % r.cardinality());
    for (auto& x : s0) x = r.from_index(rng() % r.cardinality());
    if (!r.is_unit(c[0])) continue;
    const RingRecurrence rec(r, c);
    EXPECT_EQ(period_over_ring(rec, s0, RingPeriodMode::Direct), period_over_ring(rec, s0));
    ++tested;
  }
}

TEST(PeriodSetOverRing, Examples) {
  const auto r = ring({2, 3, 5});
  EXPECT_EQ(V(period_set_over_ring(1, r)), (Vec{1, 2, 4}));
  EXPECT_EQ(V(period_set_over_ring(2, r)), (Vec{1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120}));
}

TEST(PeriodSetOverRing, LcmClosureMatchesExhaustiveSimulation) {
  const std::vector<ProductRing> rings{ring({2, 3}), ring({2, 2}), ring({2, 5}), ring({3, 4}), ring({2, 3, 5}),
                                       ring({7, 11}), ring({2, 4})};
  for (const auto& r : rings)
    for (unsigned k = 1; k <= 2; ++k) {
      if (checked_pow(r.cardinality(), k) > 10000) continue;
      EXPECT_EQ(V(exhaustive_period_set(r, k, 100'000'000)), V(period_set_over_ring(k, r)))
          << "|R|=" << r.cardinality() << " k=" << k;
    }
}

TEST(MaxPeriodBound, Examples) {
  EXPECT_EQ(max_period_bound(2, ring({2, 3})), 24u);
  EXPECT_EQ(max_period_bound(1, ring({2, 3, 5})), 8u);
  EXPECT_EQ(max_period_bound(3, ring({5})), 124u);
}

TEST(FieldCharacterization, Examples) {
  auto a = verify_field_characterization(2, ring({2, 3}));
  EXPECT_EQ(a.max_period, 24u);
  EXPECT_EQ(a.trivial_bound, 35u);
  EXPECT_FALSE(a.achieved);
  EXPECT_TRUE(a.consistent);
  auto b = verify_field_characterization(2, ring({4}));
  EXPECT_EQ(b.max_period, 15u);
  EXPECT_TRUE(b.achieved);
  EXPECT_TRUE(b.consistent);
  auto c = verify_field_characterization(1, ring({2, 3, 5}));
  EXPECT_EQ(c.max_period, 4u);
  EXPECT_EQ(c.trivial_bound, 29u);
  EXPECT_TRUE(c.consistent);
}

TEST(FieldCharacterization, ProductBoundStrictForNonFields) {
  for (const auto& r : {ring({2, 3}), ring({2, 2}), ring({3, 4, 5}), ring({2, 3, 5})})
    for (unsigned k = 1; k <= 3; ++k) {
      const auto res = verify_field_characterization(k, r);
      EXPECT_LE(res.max_period, res.product_bound);
      EXPECT_LT(res.product_bound, res.trivial_bound);
    }
}

TEST(GroupAlgebra, Examples) {
  const auto a5 = make_group_algebra(2, 5);
  EXPECT_TRUE(a5.semisimple);
  ASSERT_TRUE(a5.decomposition);
  ASSERT_EQ(a5.decomposition->size(), 2u);
  EXPECT_EQ(a5.decomposition->component(0).q(), 2u);
  EXPECT_EQ(a5.decomposition->component(1).q(), 16u);
  EXPECT_TRUE(is_irreducible(a5.factorization.factors[1].factor));
  EXPECT_EQ(group_algebra_max_period(a5, 1), 15u);

  const auto a4 = make_group_algebra(2, 4);
  EXPECT_FALSE(a4.semisimple);
  EXPECT_FALSE(a4.decomposition);
  ASSERT_EQ(a4.factorization.factors.size(), 1u);
  EXPECT_EQ(a4.factorization.factors[0].multiplicity, 4u);

  EXPECT_EQ(group_algebra_max_period(make_group_algebra(3, 2), 1), 2u);
  EXPECT_EQ(group_algebra_max_period(make_group_algebra(2, 3), 1), 3u);
  EXPECT_ERRC(make_group_algebra(2, 1), Errc::OutOfRange);
}

TEST(GroupAlgebra, NeverAField) {
  for (u64 p : {2, 3, 5})
    for (unsigned n = 2; n <= 8; ++n) {
      const auto spec = make_group_algebra(p, n);
      EXPECT_GE(spec.factorization.factors.size(), 1u);
      // t - 1 always divides t^n - 1, so there is a zero divisor.
      EXPECT_FALSE(spec.algebra.is_unit(spec.algebra.from_index(p - 1 + p)));  // t - 1
      EXPECT_EQ(spec.semisimple, n % p != 0);
    }
}

TEST(GroupAlgebra, CrtAgreesWithQuotientSimulation) {
  std::mt19937_64 rng(47);
  for (const auto& [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 5}, {2, 3}, {3, 4}, {2, 7}}) {
    const auto spec = make_group_algebra(p, n);
    const auto& alg = spec.algebra;
    for (int i = 0; i < 10; ++i) {
      const unsigned k = 1 + static_cast<unsigned>(rng() % 2);
      std::vector<std::vector<u64>> c(k), s0(k);
      do {
        c[0] = alg.from_index(rng() % alg.cardinality());
      } while (!alg.is_unit(c[0]));
      for (unsigned j = 1; j < k; ++j) c[j] = alg.from_index(rng() % alg.cardinality());
      for (auto& s : s0) s = alg.from_index(rng() % alg.cardinality());
      std::vector<RingElem> cc, ss;
      for (const auto& x : c) cc.push_back(spec.crt_project(x));
      for (const auto& x : s0) ss.push_back(spec.crt_project(x));
      EXPECT_EQ(period_bruteforce(Recurrence<CyclicGroupAlgebra>(alg, c), s0),
                period_over_ring(RingRecurrence(*spec.decomposition, cc), ss));
    }
  }
}

TEST(GroupAlgebra, CrtIsARingHomomorphism) {
  const auto spec = make_group_algebra(2, 5);
  const auto& alg = spec.algebra;
  const auto& r = *spec.decomposition;
  for (u64 a = 0; a < alg.cardinality(); ++a)
    for (u64 b = 0; b < alg.cardinality(); b += 3) {
      const auto x = alg.from_index(a), y = alg.from_index(b);
      EXPECT_EQ(spec.crt_project(alg.mul(x, y)), r.mul(spec.crt_project(x), spec.crt_project(y)));
      EXPECT_EQ(spec.crt_project(alg.add(x, y)), r.add(spec.crt_project(x), spec.crt_project(y)));
    }
}

TEST(GroupAlgebra, NonSemisimpleMaxPeriodMatchesExhaustive) {
  // The impulse-response sweep must agree with simulating every state.
  for (const auto& [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {2, 4}, {3, 3}, {2, 6}}) {
    const auto spec = make_group_algebra(p, n);
    EXPECT_EQ(group_algebra_max_period(spec, 1), exhaustive_period_set(spec.algebra, 1, 100'000'000).max());
  }
  const auto a2 = make_group_algebra(2, 2);
  EXPECT_EQ(group_algebra_max_period(a2, 2), exhaustive_period_set(a2.algebra, 2, 100'000'000).max());
}
