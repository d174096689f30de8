#ifndef PADICLIFT_HEC_HPP
#define PADICLIFT_HEC_HPP

// Imaginary hyperelliptic curves y^2 + h(x) y = f(x), divisors in Mumford form
// (u, v) and Cantor-Koblitz arithmetic over a field, plus reduction of rational
// divisors modulo p^k.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padiclift/poly.hpp"

namespace padiclift {

namespace detail {

inline ModPoly to_residue_field(const ModPoly& f) {
  const ResidueRing field(f.ring().prime(), 1);
  std::vector<BigInt> v(f.coefficients().begin(), f.coefficients().end());
  return ModPoly(field, std::move(v));
}

inline bool squarefree(const QPoly& F) { return gcd(F, F.derivative()).degree() == 0; }
// Over Z/p^k smoothness is decided by the reduction modulo p.
inline bool squarefree(const ModPoly& F) {
  const ModPoly Fp = to_residue_field(F);
  return Fp.degree() == F.degree() && gcd(Fp, Fp.derivative()).degree() == 0;
}

}  // namespace detail

/// y^2 + h y = f with f monic of degree 2g + 1 and deg h <= g. Throws
/// kParameter on a shape violation and kSingularCurve when 4f + h^2 has a
/// repeated root.
template <class Ring>
class HyperellipticCurve {
 public:
  using P = Poly<Ring>;

  HyperellipticCurve(P f, P h) : f_(std::move(f)), h_(std::move(h)) {
    const Ring& ring = f_.ring();
    if (!(h_.ring() == ring)) {
      throw Error(ErrorCode::kParameter, "f and h over different coefficient domains");
    }
    if (f_.degree() < 3 || f_.degree() % 2 == 0) {
      throw Error(ErrorCode::kParameter, "deg f must be odd and at least 3, got " + f_.to_string());
    }
    if (!(f_.leading() == ring.one())) {
      throw Error(ErrorCode::kParameter, "f must be monic, got " + f_.to_string());
    }
    genus_ = (f_.degree() - 1) / 2;
    if (h_.degree() > genus_) {
      throw Error(ErrorCode::kParameter,
                  "deg h must not exceed the genus " + std::to_string(genus_));
    }
    const P F = f_.scaled(ring.from_integer(4)) + h_ * h_;
    if (!detail::squarefree(F)) {
      throw Error(ErrorCode::kSingularCurve,
                  "y^2 + (" + h_.to_string() + ")y = " + f_.to_string() + " is singular");
    }
  }

  const P& f() const { return f_; }
  const P& h() const { return h_; }
  int genus() const { return genus_; }
  const Ring& ring() const { return f_.ring(); }

  std::string to_string() const {
    if (h_.is_zero()) return "y^2 = " + f_.to_string();
    return "y^2 + (" + h_.to_string() + ")*y = " + f_.to_string();
  }

 private:
  P f_, h_;
  int genus_ = 0;
};

/// A pair (u, v); validity is a separate check, so reductions of valid
/// divisors may be held and inspected even when they are not divisors.
template <class Ring>
struct MumfordDivisor {
  Poly<Ring> u;
  Poly<Ring> v;

  static MumfordDivisor neutral(const Ring& ring) {
    return {Poly<Ring>::constant(ring, ring.one()), Poly<Ring>(ring)};
  }
  bool is_neutral() const { return u.degree() == 0 && v.is_zero(); }
  std::string to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ")"; }
  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
    return a.u == b.u && a.v == b.v;
  }
};

using QDivisor = MumfordDivisor<RationalField>;
using ModDivisor = MumfordDivisor<ResidueRing>;
using QHyperelliptic = HyperellipticCurve<RationalField>;
using ModHyperelliptic = HyperellipticCurve<ResidueRing>;

struct MumfordReport {
  bool u_monic = false;
  bool gcd_condition = false;    ///< gcd(u, u', v) = 1
  bool degree_condition = false; ///< deg v < deg u <= g
  bool divisibility = false;     ///< u | v^2 + v h - f
  bool valid() const { return u_monic && gcd_condition && degree_condition && divisibility; }
  std::string to_string() const;
};

namespace detail {

inline bool unit_ideal_over_field(const ModPoly& a, const ModPoly& b, const ModPoly& c) {
  return gcd(gcd(a, b), c).degree() == 0;
}
inline bool unit_ideal_over_field(const QPoly& a, const QPoly& b, const QPoly& c) {
  return gcd(gcd(a, b), c).degree() == 0;
}

// Over Z/p^k the ideal (u, u', v) is the unit ideal exactly when it is so
// modulo p, since 1 + p w is invertible.
inline bool unit_ideal(const ModPoly& a, const ModPoly& b, const ModPoly& c) {
  if (a.ring().is_field()) return unit_ideal_over_field(a, b, c);
  return unit_ideal_over_field(to_residue_field(a), to_residue_field(b), to_residue_field(c));
}
inline bool unit_ideal(const QPoly& a, const QPoly& b, const QPoly& c) {
  return unit_ideal_over_field(a, b, c);
}

template <class Ring>
void require_field(const Ring& ring) {
  if (!ring.is_field()) {
    throw Error(ErrorCode::kNotAField,
                "Cantor's algorithm needs polynomial gcds, which " + ring.name() + " lacks");
  }
}

}  // namespace detail

/// Checks each Mumford condition separately; an invalid pair is a report, not
/// an error.
template <class Ring>
MumfordReport mumford_valid(const MumfordDivisor<Ring>& D, const HyperellipticCurve<Ring>& C) {
  if (!(D.u.ring() == C.ring()) || !(D.v.ring() == C.ring())) {
    throw Error(ErrorCode::kParameter, "divisor and curve over different coefficient domains");
  }
  MumfordReport r;
  r.u_monic = !D.u.is_zero() && D.u.leading() == C.ring().one();
  r.degree_condition = D.v.degree() < D.u.degree() && D.u.degree() <= C.genus();
  r.gcd_condition = !D.u.is_zero() && detail::unit_ideal(D.u, D.u.derivative(), D.v);
  r.divisibility = r.u_monic && ((D.v * D.v + D.v * C.h() - C.f()) % D.u).is_zero();
  return r;
}

template <class Ring>
MumfordDivisor<Ring> opposite(const MumfordDivisor<Ring>& D, const HyperellipticCurve<Ring>& C) {
  return {D.u, (-C.h() - D.v) % D.u};
}

/// Cantor-Koblitz composition and reduction over a field; kNotAField over
/// Z/p^k with k > 1, kParameter for an invalid input.
template <class Ring>
MumfordDivisor<Ring> cantor_add(const MumfordDivisor<Ring>& D1, const MumfordDivisor<Ring>& D2,
                                const HyperellipticCurve<Ring>& C) {
  using P = Poly<Ring>;
  detail::require_field(C.ring());
  for (const auto* D : {&D1, &D2}) {
    const MumfordReport r = mumford_valid(*D, C);
    if (!r.valid()) {
      throw Error(ErrorCode::kParameter, D->to_string() + " is not a divisor: " + r.to_string());
    }
  }
  const P& f = C.f();
  const P& h = C.h();
  const auto g1 = ext_gcd(D1.u, D2.u);
  const auto g2 = ext_gcd(g1.d, D1.v + D2.v + h);
  const P& d = g2.d;
  const P s1 = g2.e1 * g1.e1;
  const P s2 = g2.e1 * g1.e2;
  const P& s3 = g2.e2;

  P u = exact_quotient(D1.u * D2.u, d * d);
  P v = exact_quotient(s1 * D1.u * D2.v + s2 * D2.u * D1.v + s3 * (D1.v * D2.v + f), d) % u;
  while (u.degree() > C.genus()) {
    u = exact_quotient(f - v * h - v * v, u);
    v = (-h - v) % u;
  }
  return {u.monic(), v};
}

template <class Ring>
MumfordDivisor<Ring> cantor_scalar_mul(const BigInt& n, const MumfordDivisor<Ring>& D,
                                       const HyperellipticCurve<Ring>& C) {
  detail::require_field(C.ring());
  const MumfordDivisor<Ring> base = n < 0 ? opposite(D, C) : D;
  const BigInt e = abs(n);
  MumfordDivisor<Ring> acc = MumfordDivisor<Ring>::neutral(C.ring());
  for (auto bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = cantor_add(acc, acc, C);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)) != 0) acc = cantor_add(acc, base, C);
  }
  if (e == 0) return MumfordDivisor<Ring>::neutral(C.ring());
  return acc;
}

/// Least n >= 1 with n D = (1, 0), by repeated addition up to `bound`;
/// kScaleExceeded beyond it.
std::int64_t divisor_order(const ModDivisor& D, const ModHyperelliptic& C, std::int64_t bound);

/// How rational coefficients are brought to Z/p^k.
enum class ReductionRule {
  /// Every coefficient must be p-integral (kNonIntegral otherwise).
  kStrict,
  /// Each polynomial is first scaled by the least power of p making it
  /// p-integral; u is then made monic when its leading coefficient is a unit,
  /// and a u that becomes constant takes v = 0.
  kClearDenominators,
};

/// Coefficient-wise reduction of a rational pair; the result need not be a
/// valid divisor.
ModDivisor divisor_reduce_mod(const QDivisor& D, const BigInt& p, std::int64_t k,
                              ReductionRule rule = ReductionRule::kClearDenominators);
ModHyperelliptic curve_reduce_mod(const QHyperelliptic& C, const BigInt& p);

/// The model y^2 = f + h^2/4 reached by y -> y + h/2.
QHyperelliptic complete_square(const QHyperelliptic& C);

/// Coefficients p-integral and nu_p(disc f) = 0. kParameter unless h = 0.
bool hec_good_reduction(const QHyperelliptic& C, const BigInt& p);
/// The same test on a bare model y^2 = f; a repeated root is never good.
bool hec_good_reduction(const QPoly& f, const BigInt& p);

struct WitnessReport {
  std::optional<std::int64_t> h_star;
  ModDivisor reduced_multiple;  ///< (h* D) mod p
  ModDivisor multiple_of_reduced;  ///< h* (D mod p)
  MumfordReport reduced_multiple_report;
  std::int64_t checked = 0;  ///< largest h compared
};

/// Smallest h <= h_max for which (h D) mod p differs from h (D mod p), both
/// as raw pairs over F_p. Requires good reduction at p.
WitnessReport noncommutativity_witness(const QHyperelliptic& C, const QDivisor& D, const BigInt& p,
                                       std::int64_t h_max);

/// y^2 = x(x - 1)(x + 2)(x - 3)(x + 4) with D = (x - 4, 24).
QHyperelliptic example_hyperelliptic_curve();
QDivisor example_divisor();

}  // namespace padiclift

#endif  // PADICLIFT_HEC_HPP
