#include <random>
#include <set>

#include "doctest.h"
#include "padiclift/arith.hpp"
#include "padiclift/error.hpp"

using namespace padiclift;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kIo;
}

std::set<BigInt> brute_sqrt(long a, long m) {
  std::set<BigInt> out;
  const long t = ((a % m) + m) % m;
  for (long r = 0; r < m; ++r) {
    if ((r * r) % m == t) out.insert(BigInt(r));
  }
  return out;
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("5/2").to_string() == "5/2");
  CHECK(Rational::parse(" -6/4 ").to_string() == "-3/2");
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::parse("+8/-2") == Rational(-4));
  CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::kParse);
  CHECK(code_of([] { Rational::parse("abc"); }) == ErrorCode::kParse);
  CHECK(code_of([] { Rational(1) / Rational(0); }) == ErrorCode::kDivisionByZero);
  const Rational q(BigInt(6), BigInt(-4));
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
}

TEST_CASE("padic valuation") {
  CHECK(padic_valuation(Rational(18), 3) == 2);
  CHECK(padic_valuation(Rational::parse("5/9"), 3) == -2);
  CHECK(padic_valuation(Rational(0), 7) == kInfiniteValuation);
  CHECK(code_of([] { padic_valuation(Rational(5), 9); }) == ErrorCode::kParameter);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (int i = 0; i < 300; ++i) {
    const long n1 = d(rng), n2 = d(rng), d1 = std::abs(d(rng)) + 1, d2 = std::abs(d(rng)) + 1;
    if (n1 == 0 || n2 == 0) continue;
    const Rational x{BigInt(n1), BigInt(d1)}, y{BigInt(n2), BigInt(d2)};
    for (long p : {3L, 5L, 7L}) {
      CHECK(padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p));
    }
  }
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(Rational::parse("5/2"), 3, 2) == 7);
  CHECK(reduce_mod(Rational(1), 5, 3) == 1);
  CHECK(reduce_mod(Rational(-1), 3, 2) == 8);
  CHECK(code_of([] { reduce_mod(Rational::parse("1/3"), 3, 2); }) == ErrorCode::kNonIntegral);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 300; ++i) {
    for (long p : {3L, 5L, 11L}) {
      long d1 = std::abs(d(rng)) + 1, d2 = std::abs(d(rng)) + 1;
      while (d1 % p == 0) ++d1;
      while (d2 % p == 0) ++d2;
      const Rational x(BigInt(d(rng)), BigInt(d1)), y(BigInt(d(rng)), BigInt(d2));
      const BigInt m = ipow(p, 4);
      CHECK(reduce_mod(x * y, p, 4) == mod_floor(reduce_mod(x, p, 4) * reduce_mod(y, p, 4), m));
      CHECK(reduce_mod(x + y, p, 4) == mod_floor(reduce_mod(x, p, 4) + reduce_mod(y, p, 4), m));
    }
  }
}

TEST_CASE("square roots of zero modulo 3^4") {
  const auto roots = sqrt_all_mod(0, 3, 4);
  const std::vector<BigInt> expected{0, 9, 18, 27, 36, 45, 54, 63, 72};
  CHECK(roots == expected);
  CHECK(sqrt_all_mod(0, 3, 4, 0) == expected);
}

TEST_CASE("square roots small cases") {
  CHECK(sqrt_all_mod(1, 5, 1) == std::vector<BigInt>{1, 4});
  CHECK(sqrt_all_mod(2, 5, 2).empty());
  CHECK(sqrt_all_mod(2, 7, 2) == std::vector<BigInt>{10, 39});
}

TEST_CASE("square roots: scan and Hensel agree with brute force") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (std::int64_t k = 1; ipow(p, k) <= 10000; ++k) {
      const long m = ipow(p, k).get_si();
      for (long a = 0; a < m; a += (m > 400 ? 7 : 1)) {
        const auto expected = brute_sqrt(a, m);
        const auto scan = sqrt_all_mod(a, p, k);
        const auto hensel = sqrt_all_mod(a, p, k, 0);
        CHECK(std::set<BigInt>(scan.begin(), scan.end()) == expected);
        CHECK(std::set<BigInt>(hensel.begin(), hensel.end()) == expected);
        CHECK(hensel.size() == expected.size());
      }
    }
  }
}

TEST_CASE("square roots above the scan threshold square correctly") {
  const BigInt p = 10007;
  const BigInt m = ipow(p, 3);
  for (long a : {0L, 1L, 2L, 4L, 10007L * 10007L * 9L, 10007L * 5L}) {
    for (const auto& r : sqrt_all_mod(a, p, 3)) CHECK(mod_floor(r * r - a, m) == 0);
  }
  CHECK(sqrt_all_mod(4, p, 3).size() == 2);
}
