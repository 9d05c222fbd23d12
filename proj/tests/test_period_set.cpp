#include "support.hpp"

using namespace plab;
using testutil::V;

using Vec = std::vector<u64>;

namespace {

// Divisors by scanning 1..n.
Vec divisors_by_scan(u64 n) {
  Vec out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Field field_of(u64 q) {
  const auto pe = *prime_power_decompose(q);
  return make_field(pe.first, pe.second);
}

}  // namespace

TEST(Divisors, Examples) {
  EXPECT_EQ(V(divisors(6)), (Vec{1, 2, 3, 6}));
  EXPECT_EQ(V(divisors(1)), (Vec{1}));
  EXPECT_EQ(V(divisors(15)), (Vec{1, 3, 5, 15}));
  EXPECT_ERRC(divisors(0), Errc::OutOfRange);
  for (u64 n = 1; n <= 500; ++n) EXPECT_EQ(V(divisors(n)), divisors_by_scan(n));
}

TEST(SetOps, Examples) {
  EXPECT_EQ(V(set_scale(5, divisors(6))), (Vec{5, 10, 15, 30}));
  EXPECT_EQ(V(set_product(divisors(2), divisors(6))), (Vec{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(set_scale(1, divisors(12)), divisors(12));
  EXPECT_EQ(V(set_union(PeriodSet{1, 3}, PeriodSet{2, 3})), (Vec{1, 2, 3}));
  EXPECT_EQ(V(lcm_closure(PeriodSet{1, 2}, PeriodSet{1, 3})), (Vec{1, 2, 3, 6}));
  EXPECT_ERRC(set_scale(u64{1} << 62, PeriodSet{8}), Errc::Overflow);
}

TEST(LowerBound, Examples) {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) EXPECT_EQ(period_set_lower_bound(1, q), divisors(q - 1));
  EXPECT_FALSE(period_set_lower_bound(5, 2).contains(21));
  EXPECT_EQ(V(period_set_lower_bound(4, 2)), (Vec{1, 2, 3, 4, 5, 6, 7, 15}));
  EXPECT_ERRC(period_set_lower_bound(2, 6), Errc::NotPrimePower);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(V(period_set_closed_form(1, 2)), (Vec{1}));
  EXPECT_EQ(V(period_set_closed_form(2, 2)), (Vec{1, 2, 3}));
  EXPECT_EQ(V(period_set_closed_form(3, 2)), (Vec{1, 2, 3, 4, 7}));
  EXPECT_EQ(V(period_set_closed_form(4, 2)), (Vec{1, 2, 3, 4, 5, 6, 7, 15}));
  EXPECT_EQ(V(period_set_closed_form(2, 5)), (Vec{1, 2, 3, 4, 5, 6, 8, 10, 12, 20, 24}));
  EXPECT_ERRC(period_set_closed_form(5, 2), Errc::DegreeOutOfRange);
  EXPECT_EQ(period_set_closed_form(3, 3).provenance(), Provenance::ClosedForm);
}

TEST(Bruteforce, Examples) {
  const Field f2 = make_field(2);
  EXPECT_EQ(V(order_set_bruteforce(1, f2)), (Vec{1}));
  EXPECT_EQ(V(order_set_bruteforce(4, f2)), (Vec{1, 2, 3, 4, 5, 6, 7, 15}));
  EXPECT_TRUE(order_set_bruteforce(5, f2).contains(21));
  EXPECT_ERRC(order_set_bruteforce(4, f2, 15), Errc::BudgetExceeded);
}

TEST(Bruteforce, EqualsClosedFormSmallDegrees) {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field f = field_of(q);
    for (unsigned k = 1; k <= 4; ++k)
      EXPECT_EQ(V(order_set_bruteforce(k, f)), V(period_set_closed_form(k, q))) << "k=" << k << " q=" << q;
  }
}

TEST(Bruteforce, ThreadedSweepMatchesSerial) {
  const Field f = field_of(9);
  EXPECT_EQ(order_set_bruteforce(3, f, kDefaultBudget, 1), order_set_bruteforce(3, f, kDefaultBudget, 4));
}

TEST(LowerBound, ContainedInBruteforce) {
  for (u64 q : {2, 3}) {
    const Field f = field_of(q);
    for (unsigned k = 1; k <= 5; ++k)
      EXPECT_TRUE(period_set_lower_bound(k, q).subset_of(order_set_bruteforce(k, f))) << "k=" << k << " q=" << q;
  }
}

TEST(LowerBound, StrictAtDegreeFive) {
  const auto brute = order_set_bruteforce(5, field_of(2));
  const auto bound = period_set_lower_bound(5, 2);
  EXPECT_TRUE(brute.contains(21));
  EXPECT_FALSE(bound.contains(21));
  // 21 is not a divisor of any 2^k - 1 with k <= 5.
  for (unsigned k = 1; k <= 5; ++k) EXPECT_NE(((u64{1} << k) - 1) % 21, 0u);
}

TEST(Bruteforce, MonotoneAndMaximal) {
  for (u64 q : {2, 3, 4}) {
    const Field f = field_of(q);
    PeriodSet prev{1};
    for (unsigned k = 1; k <= (q == 4 ? 4u : 5u); ++k) {
      const auto cur = order_set_bruteforce(k, f);
      EXPECT_TRUE(prev.subset_of(cur));
      EXPECT_EQ(cur.max(), checked_pow(q, k) - 1);
      prev = cur;
    }
  }
}

TEST(Divisors, NestWhenExponentsDivide) {
  for (u64 q : {2, 3, 4, 5})
    for (unsigned i = 1; i <= 6; ++i)
      for (unsigned j = i; j <= 12; j += i)
        EXPECT_TRUE(divisors(checked_pow(q, i) - 1).subset_of(divisors(checked_pow(q, j) - 1)));
}

TEST(ModelIndependence, RelabelingF4) {
  // The only irreducible quadratic over F_2 is x^2+x+1; its two roots g and g+1 give
  // the two labelings of F_4. Applying Frobenius (g -> g^2 = g+1) to every coefficient
  // relabels each polynomial, and the order multiset must not change.
  const Field f4 = make_field(2, 2);
  std::vector<u64> a, b;
  for (const auto& g : testutil::monics(f4, 2)) {
    std::vector<Elem> c;
    for (Elem e : g.coeffs()) c.push_back(f4.mul(e, e));
    a.push_back(ord(g).order);
    b.push_back(ord(Poly(f4, c)).order);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  EXPECT_EQ(V(order_set_bruteforce(2, f4)), V(period_set_closed_form(2, 4)));
}

TEST(ModelIndependence, TwoModuliOfF9) {
  const Field m1 = make_field(3, 2, std::vector<u64>{1, 0, 1});  // x^2+1
  const Field m2 = make_field(3, 2, std::vector<u64>{2, 1, 1});  // x^2+x+2
  for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(order_set_bruteforce(k, m1), order_set_bruteforce(k, m2));
}

TEST(PeriodSet, RejectsZero) { EXPECT_ERRC(PeriodSet({0, 1}), Errc::OutOfRange); }
