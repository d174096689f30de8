#ifndef PADICLIFT_CURVE_HPP
#define PADICLIFT_CURVE_HPP

// Elliptic curves over Q in Weierstrass form: the exact group law over Q, the
// group law over F_p, reduction of rational points modulo p^k and small-scale
// enumeration oracles.
//
// Points are homogeneous triples [Z : X : Y] with x = X/Z, y = Y/Z; the point
// at infinity is [0 : 0 : 1].

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "padiclift/arith.hpp"
#include "padiclift/config.hpp"

namespace padiclift {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct GeneralWeierstrass {
  Rational a1, a2, a3, a4, a6;

  Rational b2() const { return a1 * a1 + Rational(4) * a2; }
  Rational b4() const { return Rational(2) * a4 + a1 * a3; }
  Rational b6() const { return a3 * a3 + Rational(4) * a6; }
  Rational b8() const;
  Rational discriminant() const;
};

/// y^2 = x^3 + a x + b with -16(4a^3 + 27b^2) != 0 (kSingularCurve otherwise).
class ShortWeierstrass {
 public:
  ShortWeierstrass(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  Rational discriminant() const;
  std::string to_string() const;

  friend bool operator==(const ShortWeierstrass& l, const ShortWeierstrass& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  Rational a_, b_;
};

/// Primitive integral homogeneous point [Z : X : Y]: gcd(Z, X, Y) = 1 and the
/// last nonzero coordinate in the order (Y, X, Z) is positive, so Z > 0 for
/// every affine point and infinity is [0 : 0 : 1].
class ProjPointQ {
 public:
  static ProjPointQ infinity() { return ProjPointQ(BigInt(0), BigInt(0), BigInt(1)); }
  static ProjPointQ from_affine(const Rational& x, const Rational& y);
  /// Normalizes any nonzero integer triple. [0:0:0] is kParameter.
  static ProjPointQ from_projective(BigInt z, BigInt x, BigInt y);
  /// Takes a triple the caller already made primitive and sign-normalized.
  static ProjPointQ from_primitive(BigInt z, BigInt x, BigInt y) {
    return ProjPointQ(std::move(z), std::move(x), std::move(y));
  }

  const BigInt& Z() const { return z_; }
  const BigInt& X() const { return x_; }
  const BigInt& Y() const { return y_; }
  bool is_infinity() const { return z_ == 0; }
  Rational x() const;
  Rational y() const;

  std::string to_string() const;
  friend bool operator==(const ProjPointQ& a, const ProjPointQ& b) {
    return a.z_ == b.z_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  ProjPointQ(BigInt z, BigInt x, BigInt y) : z_(std::move(z)), x_(std::move(x)), y_(std::move(y)) {}
  BigInt z_, x_, y_;
};

std::ostream& operator<<(std::ostream& os, const ProjPointQ& P);

bool on_curve(const ShortWeierstrass& curve, const ProjPointQ& P);
bool on_curve(const GeneralWeierstrass& curve, const ProjPointQ& P);

/// Result of completing the square and depressing the cubic.
struct ShortForm {
  ShortWeierstrass curve;
  Rational x_shift;  ///< b2/12
  Rational a1_half;
  Rational a3_half;

  /// (x, y) -> (x + b2/12, y + (a1 x + a3)/2); infinity is fixed.
  ProjPointQ map_point(const ProjPointQ& P) const;
};

/// kSingularCurve when the model is singular.
ShortForm to_short(const GeneralWeierstrass& curve);

ProjPointQ ec_neg(const ProjPointQ& P);
/// Chord-and-tangent addition; kOffCurve for points not on the curve.
ProjPointQ ec_add(const ProjPointQ& P, const ProjPointQ& Q, const ShortWeierstrass& curve);
ProjPointQ ec_sub(const ProjPointQ& P, const ProjPointQ& Q, const ShortWeierstrass& curve);
/// n * P by double-and-add; n may be negative or zero.
ProjPointQ ec_scalar_mul(const BigInt& n, const ProjPointQ& P, const ShortWeierstrass& curve);
/// Whether n * P == Q, decided exactly without normalizing n * P.
bool ec_scalar_mul_equals(const BigInt& n, const ProjPointQ& P, const ProjPointQ& Q,
                          const ShortWeierstrass& curve);

/// nu_p(a) >= 0, nu_p(b) >= 0 and nu_p(4a^3 + 27b^2) = 0.
bool good_reduction(const ShortWeierstrass& curve, const BigInt& p);

/// A point of E(Z/p^k) as a triple of residues, defined up to a unit multiple.
/// Equality is projective; canonical() scales the first unit among (Y, X, Z) to 1.
class PointModPk {
 public:
  PointModPk(const BigInt& p, std::int64_t k, BigInt z, BigInt x, BigInt y);
  static PointModPk identity(const BigInt& p, std::int64_t k);

  const BigInt& prime() const { return p_; }
  std::int64_t precision() const { return k_; }
  BigInt modulus() const { return ipow(p_, k_); }
  const BigInt& Z() const { return z_; }
  const BigInt& X() const { return x_; }
  const BigInt& Y() const { return y_; }

  PointModPk canonical() const;
  /// Drops digits: the same point modulo p^j, j <= k.
  PointModPk reduced(std::int64_t j) const;
  /// The reduction modulo p is [0 : 0 : 1].
  bool reduces_to_identity() const;
  bool is_identity() const;
  bool satisfies(const ShortWeierstrass& curve) const;

  std::string to_string() const;
  friend bool operator==(const PointModPk& a, const PointModPk& b);

 private:
  BigInt p_;
  std::int64_t k_;
  BigInt z_, x_, y_;
};

std::ostream& operator<<(std::ostream& os, const PointModPk& P);

/// Coordinate-wise reduction of the primitive triple of P.
PointModPk qmod_k(const ProjPointQ& P, const BigInt& p, std::int64_t k);

/// The reduction of a curve with good reduction at p.
class FpCurve {
 public:
  /// kBadReduction unless good_reduction(curve, p).
  FpCurve(const ShortWeierstrass& curve, const BigInt& p);

  const BigInt& prime() const { return p_; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

 private:
  BigInt p_, a_, b_;
};

struct FpPoint {
  bool infinity = true;
  BigInt x, y;

  static FpPoint at_infinity() { return {}; }
  static FpPoint affine(BigInt x, BigInt y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const FpPoint& a, const FpPoint& b) {
    return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
  }
  std::string to_string() const;
};

FpPoint to_fp_point(const PointModPk& P);
bool fp_on_curve(const FpPoint& P, const FpCurve& curve);
FpPoint fp_neg(const FpPoint& P, const FpCurve& curve);
FpPoint fp_add(const FpPoint& P, const FpPoint& Q, const FpCurve& curve);
FpPoint fp_scalar_mul(const BigInt& n, const FpPoint& P, const FpCurve& curve);

/// |E(F_p)| by an x-sweep with quadratic-residue counting, plus one for infinity.
BigInt fp_group_order(const ShortWeierstrass& curve, const BigInt& p,
                      std::int64_t ceiling = config::kFpEnumerationCeiling);
/// Order of P by iterated addition.
BigInt fp_point_order(const FpPoint& P, const FpCurve& curve);
/// |E(F_p)| = p. kBadReduction for bad reduction.
bool is_anomalous(const ShortWeierstrass& curve, const BigInt& p,
                  std::int64_t ceiling = config::kFpEnumerationCeiling);

/// Every point of E(Z/p^k) in canonical form, by brute force. kScaleExceeded
/// when p^k exceeds the ceiling.
std::vector<PointModPk> enumerate_points_mod_pk(
    const ShortWeierstrass& curve, const BigInt& p, std::int64_t k,
    std::int64_t ceiling = config::kModPkEnumerationCeiling);

}  // namespace padiclift

#endif  // PADICLIFT_CURVE_HPP
