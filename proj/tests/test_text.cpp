#include <random>

#include "support.hpp"

using namespace plab;
using testutil::P;

TEST(ParsePoly, Forms) {
  const Field f5 = make_field(5);
  EXPECT_EQ(P(f5, "x^2 - x - 1"), Poly::from_ints(f5, {4, 4, 1}));
  EXPECT_EQ(P(f5, "3*x^2+2"), Poly::from_ints(f5, {2, 0, 3}));
  EXPECT_EQ(P(f5, "x+x"), Poly::from_ints(f5, {0, 2}));
  EXPECT_EQ(P(f5, "t^3+1"), Poly::from_ints(f5, {1, 0, 0, 1}));
  EXPECT_EQ(P(f5, "0"), Poly(f5));
  const Field f4 = make_field(2, 2);
  EXPECT_EQ(P(f4, "[0,1]*x+[1,1]").coeff(1), f4.from_coeffs(std::vector<u64>{0, 1}));
}

TEST(ParsePoly, Errors) {
  const Field f5 = make_field(5);
  EXPECT_ERRC(P(f5, "x^"), Errc::ParseError);
  EXPECT_ERRC(P(f5, "y+1"), Errc::ParseError);
  EXPECT_ERRC(P(f5, "x+1)"), Errc::ParseError);
  EXPECT_ERRC(P(f5, ""), Errc::ParseError);
  EXPECT_ERRC(P(make_field(2, 2), "[1,1,1]"), Errc::ParseError);
}

TEST(FormatPoly, RoundTrip) {
  std::mt19937_64 rng(53);
  for (const Field& f : {make_field(2), make_field(7), make_field(3, 2), make_field(2, 3)})
    for (int i = 0; i < 200; ++i) {
      std::vector<Elem> c(rng() % 9);
      for (auto& e : c) e = f.from_index(rng() % f.q());
      const Poly g(f, c);
      EXPECT_EQ(parse_poly(f, format_poly(g)), g) << format_poly(g);
      EXPECT_EQ(parse_poly(f, format_poly(g, 't')), g);
    }
}

TEST(FormatPoly, Examples) {
  const Field f2 = make_field(2), f5 = make_field(5);
  EXPECT_EQ(format_poly(P(f2, "x^5+x^4+1")), "x^5+x^4+1");
  EXPECT_EQ(format_poly(P(f5, "x^2-x-1")), "x^2+4*x+4");
  EXPECT_EQ(format_poly(Poly(f5)), "0");
}

TEST(ParseField, Forms) {
  EXPECT_EQ(parse_field("7").q(), 7u);
  EXPECT_EQ(parse_field("2^3").modulus(), default_modulus(2, 3));
  EXPECT_EQ(parse_field("3^2/x^2+1").modulus(), (std::vector<u64>{1, 0, 1}));
  EXPECT_EQ(parse_field("4").q(), 4u);
  EXPECT_ERRC(parse_field("6"), Errc::NotPrimePower);
  EXPECT_ERRC(parse_field("2^2/x^2+1"), Errc::ReducibleModulus);
  EXPECT_ERRC(parse_field("2^3/x^2+x+1"), Errc::DegreeMismatch);
  EXPECT_ERRC(parse_field("abc"), Errc::ParseError);
}

TEST(ParseField, FormatRoundTrip) {
  for (const char* s : {"2", "5", "2^4", "3^3", "3^2/x^2+x+2"}) {
    const Field f = parse_field(s);
    EXPECT_EQ(parse_field(format_field(f)), f) << s;
  }
}

TEST(ParseRing, Elements) {
  const ProductRing r = parse_components("2,3,2^2");
  EXPECT_EQ(r.cardinality(), 24u);
  const auto e = parse_ring_element(r, "(1,2,[0,1])");
  EXPECT_EQ(format_ring_element(r, e), "(1,2,[0,1])");
  const auto list = parse_ring_element_list(r, "(1,1,[1,0]),(0,2,[1,1])");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(format_ring_element(r, list[1]), "(0,2,[1,1])");
  EXPECT_ERRC(parse_ring_element(r, "(1,2)"), Errc::ParseError);
  EXPECT_ERRC(parse_ring_element_list(r, "(1,2,0"), Errc::ParseError);
}

TEST(ParseElements, Lists) {
  const Field f9 = make_field(3, 2);
  const auto v = parse_element_list(f9, "[1,2],0,[0,1]");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(format_element(f9, v[0]), "[1,2]");
  EXPECT_EQ(format_element(f9, v[1]), "[0,0]");
  EXPECT_EQ(parse_element(make_field(7), "-1"), Elem{6});
}
