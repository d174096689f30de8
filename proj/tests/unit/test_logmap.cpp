#include <random>

#include "doctest.h"
#include "padiclift/error.hpp"
#include "padiclift/logmap.hpp"

using namespace padiclift;

namespace {

const ShortWeierstrass kCurve(Rational(-1), Rational::parse("1/4"));
const ProjPointQ kP = ProjPointQ::from_affine(2, Rational::parse("5/2"));

std::int64_t diff_valuation(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& p) {
  const BigInt d = mod_floor(a - b, m);
  return d == 0 ? kInfiniteValuation : valuation(d, p);
}

}  // namespace

TEST_CASE("naive inverse") {
  // With a = b = 0 the cleared point is [z^3 : z : -1] and -X/Y is z itself.
  for (long z : {3L, 6L, 9L, 21L}) {
    CHECK(naive_inv(PointModPk(3, 6, BigInt(z) * z * z, z, -1)) == z);
  }
  CHECK(naive_inv(exp_map(3, kCurve, 3, 4)) == 3);
  for (long h = 1; h < 27; ++h) CHECK(naive_inv(exp_map(3 * h, kCurve, 3, 4)) == 3 * h);

  const BigInt m7 = ipow(3, 7);
  int exact_to_six = 0;
  for (long h = 1; h <= 60; ++h) {
    const BigInt z = 3 * h;
    const std::int64_t v = diff_valuation(naive_inv(exp_map(z, kCurve, 3, 7)), z, m7, 3);
    CHECK(v >= 5);
    if (v >= 6) ++exact_to_six;
  }
  CHECK(exact_to_six < 60);
  CHECK_THROWS_AS(naive_inv(PointModPk(3, 3, 1, 1, 3)), Error);
}

TEST_CASE("closed-form initial logarithm") {
  const LogResult r = log_initial(exp_map(3, kCurve, 3, 5), kCurve);
  CHECK(r.z == 3);
  CHECK(r.certified_precision == 5);
  CHECK(r.verified);

  std::mt19937_64 rng(101);
  for (long p : {3L, 7L}) {
    const ExpMap exp(kCurve, p, 8);
    const BigInt m5 = ipow(p, 5);
    std::uniform_int_distribution<long> pick(1, ipow(p, 7).get_si());
    for (int i = 0; i < 20; ++i) {
      const BigInt z = p * pick(rng);
      const LogResult init = log_initial(exp(z), exp);
      CHECK(init.certified_precision == 5);
      CHECK(init.z == mod_floor(z, m5));
    }
  }
}

TEST_CASE("closed form loses a digit at p = 5 when 5 does not divide a") {
  const ExpMap exp(kCurve, 5, 8);
  int short_by_one = 0;
  for (long h = 1; h <= 40; ++h) {
    const BigInt z = 5 * h;
    const LogResult init = log_initial(exp(z), exp);
    CHECK(init.certified_precision >= 4);
    CHECK(init.z == mod_floor(z, ipow(5, init.certified_precision)));
    if (init.certified_precision == 4) ++short_by_one;
    CHECK(log_map(exp(z), exp).z == z);
  }
  CHECK(short_by_one > 0);
}

TEST_CASE("initial logarithm when Z vanishes") {
  const ExpMap exp(kCurve, 3, 5);
  const PointModPk pt = exp(27 * 2);
  REQUIRE(pt.Z() == 0);
  const LogResult r = log_initial(pt, exp);
  CHECK(r.z == naive_inv(pt) % ipow(3, r.certified_precision));
  CHECK(log_map(pt, exp).z == 54);
}

TEST_CASE("lifting") {
  const ExpMap e5(kCurve, 3, 5);
  const LogResult same = log_lift(e5(3), 3, 5, e5);
  CHECK(same.z == 3);
  CHECK(same.verified);

  const BigInt target = 3 + 2 * ipow(3, 5);
  const ExpMap e8(kCurve, 3, 8);
  const LogResult lifted = log_lift(e8(target), target % ipow(3, 5), 5, e8);
  CHECK(lifted.z == target);
  CHECK(lifted.certified_precision == 8);
  CHECK(lifted.verified);
  CHECK(log_map(e8(target), e8).z == target);

  try {
    (void)log_lift(e8(target), 6, 5, e8);
    FAIL("expected a failed lift");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInImage);
    CHECK(std::string(e.what()).find("candidate tree") != std::string::npos);
  }
}

TEST_CASE("roundtrip is exhaustive for p = 3 up to k = 7") {
  for (std::int64_t k = 1; k <= 7; ++k) {
    const ExpMap exp(kCurve, 3, k);
    const long count = ipow(3, k - 1).get_si();
    for (long h = 1; h <= count; ++h) {
      const BigInt z = mod_floor(BigInt(3 * h), exp.modulus());
      const LogResult r = log_map(exp(z), exp);
      CHECK(r.z == z);
      CHECK(r.verified);
      CHECK(r.certified_precision == k);
    }
  }
}

TEST_CASE("logarithms of the worked example") {
  const ProjPointQ tP = ec_scalar_mul(7, kP, kCurve);
  const ProjPointQ rest = ec_sub(ec_scalar_mul(31, kP, kCurve), ec_scalar_mul(3, kP, kCurve), kCurve);
  const std::vector<long> log_tp{0, 6, 6}, log_rest{0, 6, 24};
  for (std::int64_t k = 1; k <= 3; ++k) {
    CHECK(log_map(qmod_k(tP, 3, k), kCurve).z == log_tp[static_cast<std::size_t>(k - 1)]);
    CHECK(log_map(qmod_k(rest, 3, k), kCurve).z == log_rest[static_cast<std::size_t>(k - 1)]);
  }
  CHECK(log_map(PointModPk::identity(3, 4), kCurve).z == 0);
  try {
    (void)log_map(qmod_k(kP, 3, 3), kCurve);
    FAIL("expected a membership failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInImage);
  }
}

TEST_CASE("logarithm is a homomorphism through reduction") {
  const ProjPointQ R = ec_scalar_mul(7, kP, kCurve);
  for (std::int64_t k = 2; k <= 6; ++k) {
    const ExpMap exp(kCurve, 3, k);
    const BigInt base = log_map(qmod_k(R, 3, k), exp).z;
    for (long n = 1; n <= 12; ++n) {
      const BigInt got = log_map(qmod_k(ec_scalar_mul(n, R, kCurve), 3, k), exp).z;
      CHECK(got == mod_floor(n * base, exp.modulus()));
    }
  }
}

TEST_CASE("sampled roundtrip and naive agreement for p = 5, 7") {
  std::mt19937_64 rng(202);
  for (long p : {5L, 7L}) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      const ExpMap exp(kCurve, p, k);
      std::uniform_int_distribution<long> pick(0, ipow(p, k - 1).get_si() - 1);
      for (int i = 0; i < 25; ++i) {
        const BigInt z = p * pick(rng);
        const PointModPk pt = exp(z);
        const LogResult r = log_map(pt, exp);
        CHECK(r.z == z);
        const std::int64_t need = std::min<std::int64_t>(k, p == 5 ? 4 : 5);
        CHECK(diff_valuation(r.z, naive_inv(pt), exp.modulus(), p) >= need);
      }
    }
  }
}
