#include <functional>
#include <random>

#include "doctest.h"
#include "padiclift/curve.hpp"
#include "padiclift/hec.hpp"

using namespace padiclift;

namespace {

const ResidueRing kF11(11, 1);

ModPoly mod_poly(std::vector<long> ascending) {
  std::vector<BigInt> v(ascending.begin(), ascending.end());
  return ModPoly(kF11, std::move(v));
}

ModDivisor mod_divisor(std::vector<long> u, std::vector<long> v) {
  return {mod_poly(std::move(u)), mod_poly(std::move(v))};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kParameter;
}

// Every valid divisor over F_11 on the reduced example curve, from all monic
// u of degree <= 2 and all v of smaller degree.
std::vector<ModDivisor> all_divisors(const ModHyperelliptic& C) {
  std::vector<ModDivisor> out;
  for (long deg = 0; deg <= 2; ++deg) {
    const long nu = deg == 0 ? 1 : (deg == 1 ? 11 : 121);
    const long nv = deg == 0 ? 1 : (deg == 1 ? 11 : 121);
    for (long iu = 0; iu < nu; ++iu) {
      std::vector<long> u(static_cast<std::size_t>(deg) + 1, 0);
      u[static_cast<std::size_t>(deg)] = 1;
      if (deg >= 1) u[0] = iu % 11;
      if (deg == 2) u[1] = iu / 11;
      for (long iv = 0; iv < nv; ++iv) {
        std::vector<long> v = {iv % 11, iv / 11};
        const ModDivisor D = mod_divisor(u, v);
        if (mumford_valid(D, C).valid()) out.push_back(D);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("example curve") {
  const QHyperelliptic C = example_hyperelliptic_curve();
  const QPoly x = parse_poly("x");
  const QPoly one = parse_poly("1");
  auto root = [&](long r) { return x - one.scaled(Rational(r)); };
  CHECK(C.f() == x * root(1) * root(-2) * root(3) * root(-4));
  CHECK(C.genus() == 2);
  CHECK(C.h().is_zero());
  CHECK(mumford_valid(example_divisor(), C).valid());
  CHECK(C.to_string() == "y^2 = x^5 + 2*x^4 - 13*x^3 - 14*x^2 + 24*x");

  CHECK(code_of([] { QHyperelliptic(parse_poly("x^4 + 1"), parse_poly("0")); }) ==
        ErrorCode::kParameter);
  CHECK(code_of([] { QHyperelliptic(parse_poly("2*x^5 + 1"), parse_poly("0")); }) ==
        ErrorCode::kParameter);
  CHECK(code_of([] { QHyperelliptic(parse_poly("x^5 + 1"), parse_poly("x^3")); }) ==
        ErrorCode::kParameter);
  CHECK(code_of([] { QHyperelliptic(parse_poly("x^5 - x^3"), parse_poly("0")); }) ==
        ErrorCode::kSingularCurve);
  // y^2 + x y = x^3 has 4f + h^2 = x^2 (4x + 1): singular at the origin.
  CHECK(code_of([] { QHyperelliptic(parse_poly("x^3"), parse_poly("x")); }) ==
        ErrorCode::kSingularCurve);
}

TEST_CASE("Mumford conditions are reported separately") {
  const ModHyperelliptic Cp = curve_reduce_mod(example_hyperelliptic_curve(), 11);
  const MumfordReport neutral = mumford_valid(ModDivisor::neutral(kF11), Cp);
  CHECK(neutral.valid());

  const MumfordReport deg = mumford_valid(mod_divisor({10, 1}, {7, 4}), Cp);
  CHECK_FALSE(deg.valid());
  CHECK_FALSE(deg.degree_condition);
  CHECK(deg.gcd_condition);
  CHECK(deg.u_monic);

  const MumfordReport gcd = mumford_valid(mod_divisor({0, 0, 1}, {0, 8}), Cp);
  CHECK_FALSE(gcd.valid());
  CHECK_FALSE(gcd.gcd_condition);
  CHECK(gcd.degree_condition);
  CHECK(gcd.to_string().find("gcd(u, u', v) = 1 fails") != std::string::npos);

  CHECK_FALSE(mumford_valid(mod_divisor({1, 2}, {5}), Cp).u_monic);
  CHECK_FALSE(mumford_valid(mod_divisor({7, 1}, {3}), Cp).divisibility);
  CHECK(mumford_valid(mod_divisor({7, 1}, {2}), Cp).valid());
  CHECK_FALSE(mumford_valid(mod_divisor({1, 0, 0, 1}, {1}), Cp).degree_condition);
}

TEST_CASE("reduction of the example divisor") {
  const QHyperelliptic C = example_hyperelliptic_curve();
  const QDivisor D = example_divisor();
  const ModDivisor Dp = divisor_reduce_mod(D, 11, 1);
  CHECK(Dp == mod_divisor({7, 1}, {2}));
  CHECK(Dp.to_string() == "(x + 7, 2)");
  CHECK(divisor_reduce_mod(QDivisor::neutral(RationalField{}), 11, 3).is_neutral());
  CHECK(divisor_reduce_mod(D, 11, 2).u.to_string() == "x + 117");

  const ModHyperelliptic Cp = curve_reduce_mod(C, 11);
  CHECK(divisor_order(Dp, Cp, 100) == 16);
  CHECK(code_of([&] { divisor_order(Dp, Cp, 15); }) == ErrorCode::kScaleExceeded);

  // Powers 1..16 are pairwise distinct and the 16th is the neutral element.
  std::vector<ModDivisor> powers;
  for (long n = 1; n <= 16; ++n) powers.push_back(cantor_scalar_mul(n, Dp, Cp));
  CHECK(powers.back().is_neutral());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = i + 1; j < powers.size(); ++j) CHECK_FALSE(powers[i] == powers[j]);
  }

  const QDivisor D8 = cantor_scalar_mul(8, D, C);
  CHECK(mumford_valid(D8, C).valid());
  CHECK(code_of([&] { divisor_reduce_mod(D8, 11, 1, ReductionRule::kStrict); }) ==
        ErrorCode::kNonIntegral);
  const ModDivisor r8 = divisor_reduce_mod(D8, 11, 1);
  CHECK(r8.to_string() == "(x + 10, 4*x + 7)");
  CHECK_FALSE(mumford_valid(r8, Cp).degree_condition);
  CHECK(cantor_scalar_mul(8, Dp, Cp).to_string() == "(x + 10, 0)");

  const ModDivisor r16 = divisor_reduce_mod(cantor_scalar_mul(16, D, C), 11, 1);
  CHECK(r16.to_string() == "(x^2, 8*x)");
  CHECK_FALSE(mumford_valid(r16, Cp).gcd_condition);
}

TEST_CASE("non-commutativity witness") {
  const QHyperelliptic C = example_hyperelliptic_curve();
  const WitnessReport w = noncommutativity_witness(C, example_divisor(), 11, 64);
  REQUIRE(w.h_star.has_value());
  CHECK(*w.h_star == 8);
  CHECK(w.reduced_multiple.to_string() == "(x + 10, 4*x + 7)");
  CHECK(w.multiple_of_reduced.to_string() == "(x + 10, 0)");
  CHECK_FALSE(w.reduced_multiple_report.valid());

  const WitnessReport short_scan = noncommutativity_witness(C, example_divisor(), 11, 7);
  CHECK_FALSE(short_scan.h_star.has_value());
  CHECK(short_scan.checked == 7);
  CHECK_FALSE(noncommutativity_witness(C, example_divisor(), 11, 1).h_star.has_value());
  CHECK(code_of([&] { noncommutativity_witness(C, example_divisor(), 7, 10); }) ==
        ErrorCode::kBadReduction);
}

TEST_CASE("good reduction") {
  const QHyperelliptic C = example_hyperelliptic_curve();
  CHECK(hec_good_reduction(C, 11));
  CHECK(hec_good_reduction(C, 13));
  // disc f = 2540160000 = 2^8 3^4 5^4 7^2.
  CHECK(discriminant(C.f()) == Rational(2540160000L));
  for (long p : {3L, 5L, 7L}) CHECK_FALSE(hec_good_reduction(C, p));
  for (long p : {3L, 5L, 11L, 13L}) CHECK_FALSE(hec_good_reduction(parse_poly("x^5 - x^3"), p));
  CHECK_FALSE(hec_good_reduction(parse_poly("x^5 + 1/11"), 11));
  CHECK(hec_good_reduction(parse_poly("x^5 + 1/11"), 13));

  const QHyperelliptic with_h(parse_poly("x^5 + 3"), parse_poly("x + 1"));
  CHECK(code_of([&] { hec_good_reduction(with_h, 13); }) == ErrorCode::kParameter);
  const QHyperelliptic square = complete_square(with_h);
  CHECK(square.h().is_zero());
  CHECK(square.f() == parse_poly("x^5 + 1/4*x^2 + 1/2*x + 13/4"));
}

TEST_CASE("Cantor over F_11 forms a group") {
  const ModHyperelliptic Cp = curve_reduce_mod(example_hyperelliptic_curve(), 11);
  const std::vector<ModDivisor> all = all_divisors(Cp);
  const ModDivisor O = ModDivisor::neutral(kF11);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const ModDivisor& A = all[pick(rng)];
    const ModDivisor& B = all[pick(rng)];
    const ModDivisor& E = all[pick(rng)];
    const ModDivisor AB = cantor_add(A, B, Cp);
    CHECK(mumford_valid(AB, Cp).valid());
    CHECK(cantor_add(A, O, Cp) == A);
    CHECK(cantor_add(O, A, Cp) == A);
    CHECK(cantor_add(A, opposite(A, Cp), Cp).is_neutral());
    CHECK(AB == cantor_add(B, A, Cp));
    CHECK(cantor_add(AB, E, Cp) == cantor_add(A, cantor_add(B, E, Cp), Cp));
  }
  // Lagrange: the group order kills every element.
  const auto order = static_cast<long>(all.size());
  for (int i = 0; i < 20; ++i) CHECK(cantor_scalar_mul(order, all[pick(rng)], Cp).is_neutral());
  CHECK(order % 16 == 0);
  CHECK(cantor_scalar_mul(0, all[1], Cp).is_neutral());
  CHECK(cantor_scalar_mul(-3, all[1], Cp) == opposite(cantor_scalar_mul(3, all[1], Cp), Cp));
}

TEST_CASE("Cantor needs a field") {
  const ResidueRing ring(11, 2);
  const QHyperelliptic C = example_hyperelliptic_curve();
  const ModHyperelliptic C2(reduce(C.f(), ring), ModPoly(ring));
  const ModDivisor D2 = divisor_reduce_mod(example_divisor(), 11, 2);
  CHECK(mumford_valid(D2, C2).valid());
  CHECK(code_of([&] { cantor_add(D2, D2, C2); }) == ErrorCode::kNotAField);
  CHECK(code_of([&] { cantor_scalar_mul(2, D2, C2); }) == ErrorCode::kNotAField);
  const ModHyperelliptic Cp = curve_reduce_mod(C, 11);
  CHECK(code_of([&] { cantor_add(mod_divisor({10, 1}, {7, 4}), mod_divisor({7, 1}, {2}), Cp); }) ==
        ErrorCode::kParameter);
}

TEST_CASE("genus one agrees with the elliptic group law") {
  const ShortWeierstrass E(Rational(-1), Rational::parse("1/4"));
  const QHyperelliptic C(parse_poly("x^3 - x + 1/4"), QPoly(RationalField{}));
  CHECK(C.genus() == 1);
  auto as_divisor = [](const ProjPointQ& P) {
    if (P.is_infinity()) return QDivisor::neutral(RationalField{});
    return QDivisor{parse_poly("x") - QPoly::constant(RationalField{}, P.x()),
                    QPoly::constant(RationalField{}, P.y())};
  };
  const ProjPointQ P = ProjPointQ::from_affine(0, Rational::parse("1/2"));
  const ProjPointQ R = ProjPointQ::from_affine(2, Rational::parse("5/2"));
  CHECK(cantor_add(as_divisor(P), as_divisor(R), C) == as_divisor(ec_add(P, R, E)));
  for (long n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(cantor_scalar_mul(n, as_divisor(P), C) == as_divisor(ec_scalar_mul(n, P, E)));
  }

  // Reduction commutes with multiplication for elliptic curves.
  for (long p : {3L, 5L, 7L, 11L}) {
    for (const ProjPointQ& base : {P, R}) {
      CAPTURE(p);
      const WitnessReport w = noncommutativity_witness(C, as_divisor(base), p, 50);
      CHECK_FALSE(w.h_star.has_value());
      CHECK(w.checked == 50);
    }
  }
}
