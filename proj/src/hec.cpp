#include "padiclift/hec.hpp"

namespace padiclift {

std::string MumfordReport::to_string() const {
  std::string out;
  auto item = [&out](bool ok, const char* what) {
    if (!out.empty()) out += "; ";
    out += std::string(what) + (ok ? " holds" : " fails");
  };
  item(u_monic, "u monic");
  item(gcd_condition, "gcd(u, u', v) = 1");
  item(degree_condition, "deg v < deg u <= g");
  item(divisibility, "u | v^2 + v h - f");
  return out;
}

std::int64_t divisor_order(const ModDivisor& D, const ModHyperelliptic& C, std::int64_t bound) {
  ModDivisor acc = D;
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (acc.is_neutral()) return n;
    acc = cantor_add(acc, D, C);
  }
  throw Error(ErrorCode::kScaleExceeded,
              "order of " + D.to_string() + " exceeds " + std::to_string(bound));
}

namespace {

ModPoly reduce_with(const QPoly& f, const ResidueRing& ring, ReductionRule rule) {
  return rule == ReductionRule::kStrict ? reduce(f, ring) : reduce_clearing_denominators(f, ring);
}

}  // namespace

ModDivisor divisor_reduce_mod(const QDivisor& D, const BigInt& p, std::int64_t k,
                              ReductionRule rule) {
  const ResidueRing ring(p, k);
  ModPoly u = reduce_with(D.u, ring, rule);
  ModPoly v = reduce_with(D.v, ring, rule);
  if (rule == ReductionRule::kClearDenominators) {
    if (!u.is_zero() && ring.is_unit(u.leading())) u = u.monic();
    if (u.degree() == 0) v = ModPoly(ring);
  }
  return {std::move(u), std::move(v)};
}

ModHyperelliptic curve_reduce_mod(const QHyperelliptic& C, const BigInt& p) {
  const ResidueRing field(p, 1);
  return ModHyperelliptic(reduce(C.f(), field), reduce(C.h(), field));
}

QHyperelliptic complete_square(const QHyperelliptic& C) {
  const QPoly& h = C.h();
  return QHyperelliptic(C.f() + (h * h).scaled(Rational(1, 4)), QPoly(RationalField{}));
}

bool hec_good_reduction(const QHyperelliptic& C, const BigInt& p) {
  require_odd_prime(p);
  if (!C.h().is_zero()) {
    throw Error(ErrorCode::kParameter, "complete the square first: h = " + C.h().to_string());
  }
  return hec_good_reduction(C.f(), p);
}

bool hec_good_reduction(const QPoly& f, const BigInt& p) {
  require_odd_prime(p);
  if (min_coefficient_valuation(f, p) < 0) return false;
  const Rational disc = discriminant(f);
  return !disc.is_zero() && padic_valuation(disc, p) == 0;
}

WitnessReport noncommutativity_witness(const QHyperelliptic& C, const QDivisor& D, const BigInt& p,
                                       std::int64_t h_max) {
  if (!hec_good_reduction(complete_square(C), p)) {
    throw Error(ErrorCode::kBadReduction, C.to_string() + " has bad reduction at " + p.get_str());
  }
  const MumfordReport over_q = mumford_valid(D, C);
  if (!over_q.valid()) {
    throw Error(ErrorCode::kParameter, D.to_string() + " is not a divisor: " + over_q.to_string());
  }
  const ModHyperelliptic Cp = curve_reduce_mod(C, p);
  const ModDivisor Dp = divisor_reduce_mod(D, p, 1);

  WitnessReport report{std::nullopt, Dp, Dp, mumford_valid(Dp, Cp), 0};
  QDivisor multiple = D;
  ModDivisor multiple_mod = Dp;
  for (std::int64_t h = 1; h <= h_max; ++h) {
    if (h > 1) {
      multiple = cantor_add(multiple, D, C);
      multiple_mod = cantor_add(multiple_mod, Dp, Cp);
    }
    const ModDivisor reduced = divisor_reduce_mod(multiple, p, 1);
    report.checked = h;
    if (!(reduced == multiple_mod)) {
      report.h_star = h;
      report.reduced_multiple = reduced;
      report.multiple_of_reduced = multiple_mod;
      report.reduced_multiple_report = mumford_valid(reduced, Cp);
      return report;
    }
  }
  return report;
}

QHyperelliptic example_hyperelliptic_curve() {
  return QHyperelliptic(parse_poly("x^5 + 2*x^4 - 13*x^3 - 14*x^2 + 24*x"), QPoly(RationalField{}));
}

QDivisor example_divisor() { return {parse_poly("x - 4"), parse_poly("24")}; }

}  // namespace padiclift
