#include "padiclift/curve.hpp"

#include <ostream>
#include <sstream>

#include "padiclift/error.hpp"

namespace padiclift {

Rational GeneralWeierstrass::b8() const {
  return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}

Rational GeneralWeierstrass::discriminant() const {
  const Rational c2 = b2(), c4 = b4(), c6 = b6(), c8 = b8();
  return -c2 * c2 * c8 - Rational(8) * c4.pow(3) - Rational(27) * c6 * c6 +
         Rational(9) * c2 * c4 * c6;
}

ShortWeierstrass::ShortWeierstrass(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant().is_zero()) {
    throw Error(ErrorCode::kSingularCurve, "singular curve " + to_string());
  }
}

Rational ShortWeierstrass::discriminant() const {
  return Rational(-16) * (Rational(4) * a_.pow(3) + Rational(27) * b_ * b_);
}

std::string ShortWeierstrass::to_string() const {
  return "y^2 = x^3 + (" + a_.to_string() + ")*x + (" + b_.to_string() + ")";
}

ProjPointQ ProjPointQ::from_affine(const Rational& x, const Rational& y) {
  BigInt d;
  mpz_lcm(d.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
  return from_projective(d, x.num() * (d / x.den()), y.num() * (d / y.den()));
}

ProjPointQ ProjPointQ::from_projective(BigInt z, BigInt x, BigInt y) {
  if (z == 0 && x == 0 && y == 0) throw Error(ErrorCode::kParameter, "[0:0:0] is not a point");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), z.get_mpz_t(), x.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
  if (g != 1) {
    z /= g;
    x /= g;
    y /= g;
  }
  const bool flip = z != 0 ? z < 0 : (x != 0 ? x < 0 : y < 0);
  if (flip) {
    z = -z;
    x = -x;
    y = -y;
  }
  return ProjPointQ(std::move(z), std::move(x), std::move(y));
}

Rational ProjPointQ::x() const {
  if (is_infinity()) throw Error(ErrorCode::kDivisionByZero, "affine x of the point at infinity");
  return Rational(x_, z_);
}

Rational ProjPointQ::y() const {
  if (is_infinity()) throw Error(ErrorCode::kDivisionByZero, "affine y of the point at infinity");
  return Rational(y_, z_);
}

std::string ProjPointQ::to_string() const {
  return "[" + z_.get_str() + " : " + x_.get_str() + " : " + y_.get_str() + "]";
}

std::ostream& operator<<(std::ostream& os, const ProjPointQ& P) { return os << P.to_string(); }

bool on_curve(const ShortWeierstrass& curve, const ProjPointQ& P) {
  if (P.is_infinity()) return P == ProjPointQ::infinity();
  // Y^2 Z = X^3 + a X Z^2 + b Z^3, cleared of the denominators of a and b.
  BigInt d;
  mpz_lcm(d.get_mpz_t(), curve.a().den().get_mpz_t(), curve.b().den().get_mpz_t());
  const BigInt ad = curve.a().num() * (d / curve.a().den());
  const BigInt bd = curve.b().num() * (d / curve.b().den());
  const BigInt& z = P.Z();
  const BigInt zz = z * z;
  return d * P.Y() * P.Y() * z == d * P.X() * P.X() * P.X() + ad * P.X() * zz + bd * zz * z;
}

bool on_curve(const GeneralWeierstrass& c, const ProjPointQ& P) {
  if (P.is_infinity()) return P == ProjPointQ::infinity();
  const Rational x = P.x(), y = P.y();
  return y * y + c.a1 * x * y + c.a3 * y == x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
}

ProjPointQ ShortForm::map_point(const ProjPointQ& P) const {
  if (P.is_infinity()) return P;
  const Rational x = P.x(), y = P.y();
  return ProjPointQ::from_affine(x + x_shift, y + a1_half * x + a3_half);
}

ShortForm to_short(const GeneralWeierstrass& c) {
  if (c.discriminant().is_zero()) {
    throw Error(ErrorCode::kSingularCurve, "singular Weierstrass model");
  }
  const Rational b2 = c.b2(), b4 = c.b4(), b6 = c.b6();
  const Rational A = b4 / Rational(2) - b2 * b2 / Rational(48);
  const Rational B = b6 / Rational(4) - b2 * b4 / Rational(24) + b2.pow(3) / Rational(864);
  return ShortForm{ShortWeierstrass(A, B), b2 / Rational(12), c.a1 / Rational(2),
                   c.a3 / Rational(2)};
}

namespace {

void require_on_curve(const ShortWeierstrass& curve, const ProjPointQ& P) {
  if (!on_curve(curve, P)) {
    throw Error(ErrorCode::kOffCurve, P.to_string() + " is not on " + curve.to_string());
  }
}

// Jacobian coordinates on an integral model y^2 = x^3 + a' x + b', a' = u^4 a,
// b' = u^6 b; (X, Y, Z) stands for (X/Z^2, Y/Z^3) and Z = 0 for infinity.
struct Jacobian {
  BigInt X, Y, Z;
  bool infinity() const { return Z == 0; }
};

struct IntegralModel {
  BigInt u, a, b;

  explicit IntegralModel(const ShortWeierstrass& curve) {
    mpz_lcm(u.get_mpz_t(), curve.a().den().get_mpz_t(), curve.b().den().get_mpz_t());
    const Rational ra = curve.a() * Rational(ipow(u, 4));
    const Rational rb = curve.b() * Rational(ipow(u, 6));
    a = ra.num();
    b = rb.num();
  }

  // The primitive triple of a point on the integral model is [e^3 : n e : m];
  // rescaling the short-model triple leaves a content dividing u^3.
  Jacobian lift(const ProjPointQ& P) const {
    if (P.is_infinity()) return {1, 1, 0};
    const BigInt u2 = u * u;
    const BigInt u3 = u2 * u;
    BigInt z = P.Z();
    BigInt x = P.X() * u2;
    BigInt y = P.Y() * u3;
    BigInt c = mod_floor(z, u3);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), u3.get_mpz_t());
    const BigInt xr = mod_floor(x, u3);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), xr.get_mpz_t());
    if (c != 1) {
      z /= c;
      x /= c;
      y /= c;
    }
    BigInt e;
    if (mpz_root(e.get_mpz_t(), z.get_mpz_t(), 3) == 0 || !mpz_divisible_p(x.get_mpz_t(), e.get_mpz_t())) {
      throw Error(ErrorCode::kOffCurve, P.to_string() + " is not on the integral model");
    }
    return {x / e, y, e};
  }

  // On an integral model the reduced x and y have denominators e^2 and e^3, so
  // gcd(X, Z) = 1 already means Z = e. Sums nearly always carry a common
  // factor, so after an addition the coprimality probe is skipped.
  static Jacobian minimal(const Jacobian& P, bool after_addition = false) {
    if (P.infinity()) return P;
    BigInt g;
    if (!after_addition) {
      mpz_gcd(g.get_mpz_t(), P.X.get_mpz_t(), P.Z.get_mpz_t());
      if (g == 1) return P;
    }
    const BigInt zz = P.Z * P.Z;
    mpz_gcd(g.get_mpz_t(), P.X.get_mpz_t(), zz.get_mpz_t());
    BigInt e;
    const BigInt den = zz / g;
    mpz_sqrt(e.get_mpz_t(), den.get_mpz_t());
    if (e * e != den) throw Error(ErrorCode::kOffCurve, "point is not on the integral model");
    const BigInt f = P.Z / e;
    return {P.X / (f * f), P.Y / (f * f * f), e};
  }

  // Primitive [Z : X : Y] of a minimal point: the content divides u^3.
  ProjPointQ to_point(const Jacobian& P) const {
    if (P.infinity()) return ProjPointQ::infinity();
    const BigInt u3 = u * u * u;
    BigInt z = P.Z * P.Z * P.Z * u3;
    BigInt x = P.X * P.Z * u;
    BigInt y = P.Y;
    BigInt c = mod_floor(y, u3);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), u3.get_mpz_t());
    const BigInt xr = mod_floor(x, u3);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), xr.get_mpz_t());
    if (c != 1) {
      z /= c;
      x /= c;
      y /= c;
    }
    if (z < 0) {
      z = -z;
      x = -x;
      y = -y;
    }
    return ProjPointQ::from_primitive(std::move(z), std::move(x), std::move(y));
  }

  Jacobian dbl(const Jacobian& P) const {
    if (P.infinity() || P.Y == 0) return {1, 1, 0};
    const BigInt xx = P.X * P.X;
    const BigInt yy = P.Y * P.Y;
    const BigInt zz = P.Z * P.Z;
    const BigInt s = 4 * P.X * yy;
    const BigInt m = 3 * xx + a * zz * zz;
    Jacobian r;
    r.X = m * m - 2 * s;
    r.Y = m * (s - r.X) - 8 * yy * yy;
    r.Z = 2 * P.Y * P.Z;
    return r;
  }

  Jacobian add(const Jacobian& P, const Jacobian& Q) const {
    if (P.infinity()) return Q;
    if (Q.infinity()) return P;
    const BigInt z1z1 = P.Z * P.Z;
    const BigInt z2z2 = Q.Z * Q.Z;
    const BigInt u1 = P.X * z2z2;
    const BigInt u2 = Q.X * z1z1;
    const BigInt s1 = P.Y * z2z2 * Q.Z;
    const BigInt s2 = Q.Y * z1z1 * P.Z;
    const BigInt h = u2 - u1;
    const BigInt r = s2 - s1;
    if (h == 0) {
      if (r == 0) return dbl(P);
      return {1, 1, 0};
    }
    const BigInt hh = h * h;
    const BigInt hhh = hh * h;
    const BigInt v = u1 * hh;
    Jacobian out;
    out.X = r * r - hhh - 2 * v;
    out.Y = r * (v - out.X) - s1 * hhh;
    out.Z = P.Z * Q.Z * h;
    return out;
  }

  // With reduce_last unset the result may carry a common factor from the
  // final addition; fine for exact comparison.
  Jacobian mul(const BigInt& n, const ProjPointQ& P, bool reduce_last = true) const {
    const ProjPointQ base = n < 0 ? ec_neg(P) : P;
    const BigInt e = abs(n);
    const Jacobian b = lift(base);
    Jacobian acc{1, 1, 0};
    for (auto bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
      acc = dbl(acc);
      if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)) != 0) {
        acc = add(acc, b);
        if (bit > 0 || reduce_last) acc = minimal(acc, true);
      } else if (bit == 0 && reduce_last) {
        acc = minimal(acc);
      }
    }
    if (e == 0) return {1, 1, 0};
    return acc;
  }
};

}  // namespace

ProjPointQ ec_neg(const ProjPointQ& P) {
  if (P.is_infinity()) return P;
  return ProjPointQ::from_projective(P.Z(), P.X(), -P.Y());
}

ProjPointQ ec_add(const ProjPointQ& P, const ProjPointQ& Q, const ShortWeierstrass& curve) {
  require_on_curve(curve, P);
  require_on_curve(curve, Q);
  const IntegralModel model(curve);
  return model.to_point(IntegralModel::minimal(model.add(model.lift(P), model.lift(Q)), true));
}

ProjPointQ ec_sub(const ProjPointQ& P, const ProjPointQ& Q, const ShortWeierstrass& curve) {
  return ec_add(P, ec_neg(Q), curve);
}

ProjPointQ ec_scalar_mul(const BigInt& n, const ProjPointQ& P, const ShortWeierstrass& curve) {
  require_on_curve(curve, P);
  const IntegralModel model(curve);
  return model.to_point(model.mul(n, P));
}

bool ec_scalar_mul_equals(const BigInt& n, const ProjPointQ& P, const ProjPointQ& Q,
                          const ShortWeierstrass& curve) {
  require_on_curve(curve, P);
  require_on_curve(curve, Q);
  const IntegralModel model(curve);
  const Jacobian r = model.mul(n, P, false);
  if (r.infinity() || Q.is_infinity()) return r.infinity() && Q.is_infinity();
  const BigInt u2 = model.u * model.u;
  const BigInt z2 = r.Z * r.Z;
  if (r.X * Q.Z() != Q.X() * z2 * u2) return false;
  return r.Y * Q.Z() == Q.Y() * z2 * r.Z * u2 * model.u;
}

bool good_reduction(const ShortWeierstrass& curve, const BigInt& p) {
  require_prime(p);
  if (padic_valuation(curve.a(), p) < 0 || padic_valuation(curve.b(), p) < 0) return false;
  const Rational d = Rational(4) * curve.a().pow(3) + Rational(27) * curve.b() * curve.b();
  return padic_valuation(d, p) == 0;
}

PointModPk::PointModPk(const BigInt& p, std::int64_t k, BigInt z, BigInt x, BigInt y)
    : p_(p), k_(k) {
  if (k < 1) throw Error(ErrorCode::kParameter, "precision k must be positive");
  const BigInt m = ipow(p, k);
  z_ = mod_floor(z, m);
  x_ = mod_floor(x, m);
  y_ = mod_floor(y, m);
  auto divisible = [&](const BigInt& c) { return mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()) != 0; };
  if (divisible(z_) && divisible(x_) && divisible(y_)) {
    throw Error(ErrorCode::kParameter, "triple with no unit coordinate is not a point mod p^k");
  }
}

PointModPk PointModPk::identity(const BigInt& p, std::int64_t k) {
  return PointModPk(p, k, 0, 0, 1);
}

PointModPk PointModPk::canonical() const {
  const BigInt m = modulus();
  for (const BigInt* c : {&y_, &x_, &z_}) {
    if (mpz_divisible_p(c->get_mpz_t(), p_.get_mpz_t()) == 0) {
      const BigInt inv = inverse_mod(*c, m);
      return PointModPk(p_, k_, z_ * inv, x_ * inv, y_ * inv);
    }
  }
  throw Error(ErrorCode::kInconsistent, "point without a unit coordinate");
}

PointModPk PointModPk::reduced(std::int64_t j) const {
  if (j < 1 || j > k_) {
    throw Error(ErrorCode::kPrecisionExhausted,
                "cannot reduce a point mod p^" + std::to_string(k_) + " to p^" + std::to_string(j));
  }
  return PointModPk(p_, j, z_, x_, y_);
}

bool PointModPk::reduces_to_identity() const {
  return mpz_divisible_p(z_.get_mpz_t(), p_.get_mpz_t()) != 0 &&
         mpz_divisible_p(x_.get_mpz_t(), p_.get_mpz_t()) != 0;
}

bool PointModPk::is_identity() const { return *this == identity(p_, k_); }

bool PointModPk::satisfies(const ShortWeierstrass& curve) const {
  const BigInt m = modulus();
  const BigInt a = reduce_mod(curve.a(), p_, k_);
  const BigInt b = reduce_mod(curve.b(), p_, k_);
  const BigInt zz = z_ * z_;
  return mod_floor(y_ * y_ * z_ - x_ * x_ * x_ - a * x_ * zz - b * zz * z_, m) == 0;
}

std::string PointModPk::to_string() const {
  return "[" + z_.get_str() + " : " + x_.get_str() + " : " + y_.get_str() + "] mod " +
         p_.get_str() + "^" + std::to_string(k_);
}

bool operator==(const PointModPk& a, const PointModPk& b) {
  if (a.p_ != b.p_ || a.k_ != b.k_) return false;
  const PointModPk ca = a.canonical(), cb = b.canonical();
  return ca.z_ == cb.z_ && ca.x_ == cb.x_ && ca.y_ == cb.y_;
}

std::ostream& operator<<(std::ostream& os, const PointModPk& P) { return os << P.to_string(); }

PointModPk qmod_k(const ProjPointQ& P, const BigInt& p, std::int64_t k) {
  require_prime(p);
  return PointModPk(p, k, P.Z(), P.X(), P.Y());
}

FpCurve::FpCurve(const ShortWeierstrass& curve, const BigInt& p) : p_(p) {
  if (!good_reduction(curve, p)) {
    throw Error(ErrorCode::kBadReduction,
                curve.to_string() + " has bad reduction at " + p.get_str());
  }
  a_ = reduce_mod(curve.a(), p, 1);
  b_ = reduce_mod(curve.b(), p, 1);
}

std::string FpPoint::to_string() const {
  if (infinity) return "O";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

FpPoint to_fp_point(const PointModPk& P) {
  const BigInt& p = P.prime();
  const BigInt z = mod_floor(P.Z(), p);
  if (z == 0) return FpPoint::at_infinity();
  const BigInt inv = inverse_mod(z, p);
  return FpPoint::affine(mod_floor(P.X() * inv, p), mod_floor(P.Y() * inv, p));
}

bool fp_on_curve(const FpPoint& P, const FpCurve& c) {
  if (P.infinity) return true;
  return mod_floor(P.y * P.y - P.x * P.x * P.x - c.a() * P.x - c.b(), c.prime()) == 0;
}

FpPoint fp_neg(const FpPoint& P, const FpCurve& c) {
  if (P.infinity) return P;
  return FpPoint::affine(P.x, mod_floor(-P.y, c.prime()));
}

FpPoint fp_add(const FpPoint& P, const FpPoint& Q, const FpCurve& c) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const BigInt& p = c.prime();
  BigInt slope;
  if (P.x == Q.x) {
    if (mod_floor(P.y + Q.y, p) == 0) return FpPoint::at_infinity();
    slope = mod_floor((3 * P.x * P.x + c.a()) * inverse_mod(2 * P.y, p), p);
  } else {
    slope = mod_floor((Q.y - P.y) * inverse_mod(Q.x - P.x, p), p);
  }
  BigInt x3 = mod_floor(slope * slope - P.x - Q.x, p);
  BigInt y3 = mod_floor(slope * (P.x - x3) - P.y, p);
  return FpPoint::affine(std::move(x3), std::move(y3));
}

FpPoint fp_scalar_mul(const BigInt& n, const FpPoint& P, const FpCurve& c) {
  FpPoint base = n < 0 ? fp_neg(P, c) : P;
  BigInt e = abs(n);
  FpPoint acc;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()) != 0) acc = fp_add(acc, base, c);
    base = fp_add(base, base, c);
    e >>= 1;
  }
  return acc;
}

BigInt fp_group_order(const ShortWeierstrass& curve, const BigInt& p, std::int64_t ceiling) {
  require_odd_prime(p);
  if (p > ceiling) {
    throw Error(ErrorCode::kScaleExceeded,
                "point count over F_" + p.get_str() + " exceeds the enumeration ceiling " +
                    std::to_string(ceiling));
  }
  const FpCurve c(curve, p);
  BigInt count = 1;
  for (BigInt x = 0; x < p; ++x) count += 1 + legendre(x * x * x + c.a() * x + c.b(), p);
  return count;
}

BigInt fp_point_order(const FpPoint& P, const FpCurve& c) {
  if (!fp_on_curve(P, c)) throw Error(ErrorCode::kOffCurve, P.to_string() + " is not on the curve");
  BigInt bound = c.prime() + 2;
  {
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), c.prime().get_mpz_t());
    bound += 2 * (s + 1);
  }
  BigInt n = 1;
  FpPoint acc = P;
  while (!acc.infinity) {
    acc = fp_add(acc, P, c);
    ++n;
    if (n > bound) throw Error(ErrorCode::kInconsistent, "point order exceeds the Hasse bound");
  }
  return n;
}

bool is_anomalous(const ShortWeierstrass& curve, const BigInt& p, std::int64_t ceiling) {
  return fp_group_order(curve, p, ceiling) == p;
}

std::vector<PointModPk> enumerate_points_mod_pk(const ShortWeierstrass& curve, const BigInt& p,
                                                std::int64_t k, std::int64_t ceiling) {
  require_odd_prime(p);
  if (k < 1) throw Error(ErrorCode::kParameter, "k must be positive");
  const BigInt modulus = ipow(p, k);
  if (modulus > ceiling) {
    throw Error(ErrorCode::kScaleExceeded,
                "enumerating E(Z/" + modulus.get_str() + ") exceeds the ceiling " +
                    std::to_string(ceiling));
  }
  const std::int64_t m = modulus.get_si();
  const std::int64_t pp = p.get_si();
  const std::int64_t a = reduce_mod(curve.a(), p, k).get_si();
  const std::int64_t b = reduce_mod(curve.b(), p, k).get_si();
  auto mulm = [m](std::int64_t u, std::int64_t v) {
    return static_cast<std::int64_t>((static_cast<__int128>(u) * v) % m);
  };

  std::vector<std::vector<std::int64_t>> roots(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) roots[static_cast<std::size_t>(mulm(r, r))].push_back(r);

  std::vector<PointModPk> points;
  // Z a unit: scale Z to 1.
  for (std::int64_t x = 0; x < m; ++x) {
    const std::int64_t rhs = (mulm(mulm(x, x), x) + mulm(a, x) + b) % m;
    for (std::int64_t y : roots[static_cast<std::size_t>(rhs)]) {
      points.push_back(PointModPk(p, k, 1, x, y).canonical());
    }
  }
  // Z not a unit forces X not a unit and Y a unit: scale Y to 1.
  for (std::int64_t z = 0; z < m; z += pp) {
    const std::int64_t zz = mulm(z, z);
    const std::int64_t bzzz = mulm(b, mulm(zz, z));
    for (std::int64_t x = 0; x < m; x += pp) {
      const std::int64_t rhs = (mulm(mulm(x, x), x) + mulm(a, mulm(x, zz)) + bzzz) % m;
      if (rhs == z) points.push_back(PointModPk(p, k, z, x, 1).canonical());
    }
  }
  return points;
}

}  // namespace padiclift
