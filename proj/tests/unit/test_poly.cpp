#include <random>

#include "doctest.h"
#include "padiclift/poly.hpp"

using namespace padiclift;

namespace {

ModPoly random_poly(std::mt19937_64& rng, const ResidueRing& ring, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(0, ring.modulus().get_si() - 1);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return ModPoly(ring, std::move(c));
}

}  // namespace

TEST_CASE("parse and print") {
  const QPoly f = parse_poly("x^5+2*x^4-13*x^3-14*x^2+24*x");
  CHECK(f.degree() == 5);
  CHECK(f.to_string() == "x^5 + 2*x^4 - 13*x^3 - 14*x^2 + 24*x");
  CHECK(parse_poly("7 + 4*x") == parse_poly("4*x + 7"));
  CHECK(parse_poly("1/2*x**2 - x") == QPoly(RationalField{}, {0, -1, Rational::parse("1/2")}));
  CHECK(parse_poly("0").is_zero());
  CHECK(reduce(parse_poly("4*x + 7"), ResidueRing(11, 1)).to_string() == "4*x + 7");
  CHECK_THROWS_AS(parse_poly("x^"), Error);
}

TEST_CASE("ext_gcd over Q") {
  const QPoly a = parse_poly("x^2 - 1"), b = parse_poly("x - 1");
  const auto r = ext_gcd(a, b);
  CHECK(r.d == b);
  CHECK(r.e1.is_zero());
  CHECK(r.e2 == QPoly::constant(RationalField{}, 1));

  const auto z = ext_gcd(QPoly(RationalField{}), parse_poly("x + 2"));
  CHECK(z.d == parse_poly("x + 2"));
  CHECK(ext_gcd(QPoly(RationalField{}), QPoly(RationalField{})).d.is_zero());
  CHECK(gcd(parse_poly("2*x^2 - 2"), parse_poly("3*x + 3")) == parse_poly("x + 1"));
}

TEST_CASE("ext_gcd over F_5 re-substitutes") {
  const ResidueRing f5(5, 1);
  const ModPoly a = ModPoly::x(f5);
  const ModPoly b = a + ModPoly::constant(f5, 1);
  const auto r = ext_gcd(a, b);
  CHECK(r.d.is_one());
  CHECK(r.e1 * a + r.e2 * b == r.d);
}

TEST_CASE("ext_gcd Bezout identity for random pairs") {
  std::mt19937_64 rng(17);
  for (long p : {3L, 5L, 11L}) {
    const ResidueRing ring(p, 1);
    for (int i = 0; i < 200; ++i) {
      const ModPoly a = random_poly(rng, ring, 6), b = random_poly(rng, ring, 6);
      const auto r = ext_gcd(a, b);
      CHECK(r.e1 * a + r.e2 * b == r.d);
      if (!r.d.is_zero()) {
        CHECK(r.d.leading() == 1);
        CHECK((a % r.d).is_zero());
        CHECK((b % r.d).is_zero());
      }
    }
  }
}

TEST_CASE("ext_gcd refuses Z/p^k") {
  const ResidueRing ring(11, 2);
  try {
    (void)ext_gcd(ModPoly::x(ring), ModPoly::constant(ring, 1));
    FAIL("expected not-a-field");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAField);
  }
}

TEST_CASE("divrem identity for monic divisors in every domain") {
  std::mt19937_64 rng(23);
  for (const ResidueRing& ring : {ResidueRing(3, 1), ResidueRing(3, 4), ResidueRing(11, 2)}) {
    for (int i = 0; i < 100; ++i) {
      const ModPoly f = random_poly(rng, ring, 8);
      ModPoly g = random_poly(rng, ring, 4);
      g = g + ModPoly::monomial(ring, 1, static_cast<std::size_t>(g.degree() + 1));
      g = g - ModPoly::monomial(ring, g.leading(), static_cast<std::size_t>(g.degree()));
      g = g + ModPoly::monomial(ring, 1, static_cast<std::size_t>(g.degree() + 1));
      REQUIRE(g.leading() == 1);
      const auto [q, r] = divrem(f, g);
      CHECK(q * g + r == f);
      CHECK(r.degree() < g.degree());
    }
  }
  const QPoly f = parse_poly("x^4 + 1/3*x + 2"), g = parse_poly("x^2 - 5");
  const auto [q, r] = divrem(f, g);
  CHECK(q * g + r == f);
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-50, 50);
  const ResidueRing ring(5, 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> a(5), b(4);
    for (auto& x : a) x = Rational(BigInt(c(rng)), BigInt(std::abs(c(rng)) * 5 + 1));
    for (auto& x : b) x = Rational(BigInt(c(rng)), BigInt(std::abs(c(rng)) * 5 + 2));
    const QPoly f(RationalField{}, a), g(RationalField{}, b);
    CHECK(reduce(f * g, ring) == reduce(f, ring) * reduce(g, ring));
    CHECK(reduce(f + g, ring) == reduce(f, ring) + reduce(g, ring));
  }
  CHECK_THROWS_AS(reduce(parse_poly("1/5*x"), ring), Error);
}

TEST_CASE("discriminants") {
  CHECK(discriminant(parse_poly("x^2 + 3*x + 1")) == Rational(9 - 4));
  CHECK(discriminant(parse_poly("x^3 - x + 1/4")) ==
        Rational(-4) * Rational(-1) - Rational(27) * Rational::parse("1/16"));
  const Rational d = discriminant(parse_poly("x^5+2*x^4-13*x^3-14*x^2+24*x"));
  CHECK(d == Rational(BigInt("2540160000")));
  CHECK(padic_valuation(d, 11) == 0);
  CHECK(padic_valuation(d, 7) == 2);
  CHECK(discriminant(parse_poly("x^3 - 3*x^2 + 3*x - 1")).is_zero());
  CHECK_THROWS_AS(discriminant(parse_poly("x + 1")), Error);
}

TEST_CASE("gcd and reduction do not commute") {
  const auto same = gcd_commute_check(parse_poly("x - 1"), parse_poly("x - 2"), 5);
  CHECK_FALSE(same.differ);
  CHECK(same.gcd_then_reduce.is_one());

  const auto shifted = gcd_commute_check(parse_poly("x - 1"), parse_poly("x + 4"), 5);
  CHECK(shifted.differ);
  CHECK(shifted.gcd_over_q.is_one());
  CHECK(shifted.reduce_then_gcd.to_string() == "x + 4");

  const auto sq = gcd_commute_check(parse_poly("x^2"), parse_poly("3*x"), 3);
  CHECK(sq.differ);
  CHECK(sq.gcd_over_q == parse_poly("x"));
  CHECK(sq.reduce_then_gcd.is_zero() == false);
  CHECK(sq.reduce_then_gcd == reduce(parse_poly("x^2"), ResidueRing(3, 1)));

  CHECK_THROWS_AS(gcd_commute_check(parse_poly("x"), parse_poly("1/3*x"), 3), Error);
  CHECK_THROWS_AS(gcd_commute_check(parse_poly("x"), parse_poly("x"), 3, 2), Error);
}
