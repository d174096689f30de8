#include <random>

#include "doctest.h"
#include "padiclift/error.hpp"
#include "padiclift/padic.hpp"

using namespace padiclift;

using TP = TruncatedPAdic;

TEST_CASE("padic division examples") {
  const TP a = TP::from_rational(18, 3, 5);
  const TP b = TP::from_rational(3, 3, 5);
  const TP q = padic_div(a, b);
  CHECK(q.valuation() == 1);
  CHECK(q.unit() == 2);
  CHECK(q.relative_precision() == 3);

  CHECK(padic_div(TP::exact_zero(5), TP::from_rational(5, 5, 4)).is_exact_zero());

  const TP s = TP::from_rational(7, 7, 3);
  const TP t = TP::from_rational(49, 7, 3);
  const TP r = s / t;
  CHECK(r.valuation() == -1);
  CHECK(r.to_rational() == Rational::parse("1/7"));
}

TEST_CASE("padic division errors") {
  const TP a = TP::from_rational(2, 3, 4);
  try {
    (void)(a / TP::exact_zero(3));
    FAIL("expected division by zero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDivisionByZero);
  }
  try {
    (void)(a / TP::zero(3, 4));
    FAIL("expected precision exhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecisionExhausted);
  }
}

TEST_CASE("embedding round trip matches reduce_mod") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    for (long p : {3L, 5L, 7L}) {
      long den = std::abs(d(rng)) + 1;
      while (den % p == 0) ++den;
      const Rational x(BigInt(d(rng)), BigInt(den));
      CHECK(TP::from_rational(x, p, 6).residue(6) == reduce_mod(x, p, 6));
    }
  }
}

TEST_CASE("precision bookkeeping") {
  const TP x = TP::from_rational(1, 3, 5);
  const TP y = TP::from_rational(9, 3, 3);
  CHECK((x + y).absolute_precision() == 3);
  CHECK((x * y).relative_precision() == 1);
  CHECK((x * y).valuation() == 2);
  const TP c = x - TP::from_rational(Rational(1 + 243), 3, 8);
  CHECK(c.is_zero());
  CHECK(c.absolute_precision() == 5);
  CHECK_THROWS_AS((void)c.residue(6), Error);

  const TP z = TP::from_rational(Rational::parse("1/9"), 3, 2);
  CHECK(z.valuation() == -2);
  CHECK(z.relative_precision() == 4);
  CHECK((z * TP::from_rational(9, 3, 6)).residue(2) == 1);
}

TEST_CASE("arithmetic agrees with rationals at the stated precision") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-10000, 10000);
  for (int i = 0; i < 400; ++i) {
    const long p = 5;
    const Rational x(BigInt(d(rng)), BigInt(std::abs(d(rng)) + 1));
    const Rational y(BigInt(d(rng)), BigInt(std::abs(d(rng)) + 1));
    if (x.is_zero() || y.is_zero()) continue;
    const TP px = TP::from_rational_relative(x, p, 6);
    const TP py = TP::from_rational_relative(y, p, 6);
    auto agrees = [&](const TP& got, const Rational& exact) {
      if (got.is_zero()) {
        CHECK(padic_valuation(exact, p) >= got.absolute_precision());
        return;
      }
      const Rational diff = got.to_rational() - exact;
      CHECK(padic_valuation(diff, p) >= got.absolute_precision());
    };
    agrees(px + py, x + y);
    agrees(px - py, x - y);
    agrees(px * py, x * y);
    agrees(px / py, x / y);
    agrees(px.pow(3), x.pow(3));
  }
}
