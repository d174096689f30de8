#include "padiclift/wpseries.hpp"

#include <algorithm>

#include "padiclift/error.hpp"

namespace padiclift {

namespace {

void grow(const Rational& a, const Rational& b, std::vector<Rational>& c, int last_index) {
  if (c.empty()) {
    c.push_back(-a / Rational(5));
    c.push_back(-b / Rational(7));
  }
  for (int l = static_cast<int>(c.size()) + 2; l <= last_index; ++l) {
    Rational s(0);
    for (int j = 2; j <= l - 2; ++j) s += c[static_cast<std::size_t>(j - 2)] * c[static_cast<std::size_t>(l - j - 2)];
    c.push_back(Rational(3) * s / Rational(static_cast<long>((2 * l + 1) * (l - 3))));
  }
}

std::int64_t require_divisible(const BigInt& z, const BigInt& p) {
  if (z == 0) throw Error(ErrorCode::kDivisionByZero, "the series has a pole at z = 0");
  const std::int64_t m = valuation(z, p);
  if (m < 1) {
    throw Error(ErrorCode::kParameter, "z = " + z.get_str() + " is not divisible by p = " + p.get_str());
  }
  return m;
}

const WpCoefficients& checked(const WpCoefficients& coeffs, int needed) {
  if (coeffs.last_index() < needed) {
    throw Error(ErrorCode::kParameter,
                "coefficients up to c_" + std::to_string(needed) + " are required, only c_" +
                    std::to_string(coeffs.last_index()) + " supplied");
  }
  return coeffs;
}

}  // namespace

WpCoefficients::WpCoefficients(Rational a, Rational b, int last_index)
    : a_(std::move(a)), b_(std::move(b)) {
  if (last_index < 3) throw Error(ErrorCode::kParameter, "coefficient count L must be at least 3");
  grow(a_, b_, c_, last_index);
}

const Rational& WpCoefficients::operator[](int l) const {
  if (l < 2 || l > last_index()) {
    throw Error(ErrorCode::kParameter, "coefficient index " + std::to_string(l) + " out of range");
  }
  return c_[static_cast<std::size_t>(l - 2)];
}

WpCoefficients WpCoefficients::extended(int last_index) const {
  WpCoefficients out = *this;
  grow(a_, b_, out.c_, last_index);
  return out;
}

WpCoefficients wp_coeffs(const Rational& a, const Rational& b, int last_index) {
  return WpCoefficients(a, b, last_index);
}

std::int64_t coefficient_valuation_floor(const BigInt& p, int l) {
  const std::int64_t pm1 = to_int64(p - 1);
  return -((2 * static_cast<std::int64_t>(l)) / pm1);
}

int series_cutoff(const BigInt& p, std::int64_t k, std::int64_t m, const WpCoefficients& coeffs) {
  require_odd_prime(p);
  if (m < 1) throw Error(ErrorCode::kParameter, "valuation of z must be at least 1");
  if (padic_valuation(coeffs.a(), p) < 0 || padic_valuation(coeffs.b(), p) < 0) {
    throw Error(ErrorCode::kCutoffNotCertified,
                "curve coefficients are not " + p.get_str() +
                    "-integral; no tail bound certifies the truncation");
  }
  // The tail bound (2l-3)m + floor bound is nondecreasing in l.
  auto tail = [&](int l) { return (2 * static_cast<std::int64_t>(l) - 3) * m + coefficient_valuation_floor(p, l); };
  int start = 3;
  while (tail(start + 1) < k) ++start;
  const WpCoefficients& c = coeffs.last_index() >= start ? coeffs : coeffs.extended(start);
  for (int l = start; l >= 2; --l) {
    const Rational& cl = c[l];
    if (cl.is_zero()) continue;
    const std::int64_t v = padic_valuation(cl, p);
    const std::int64_t vd = v + valuation(BigInt(2 * l - 2), p);
    if (v + (2 * l - 2) * m < k || vd + (2 * l - 3) * m < k) return std::max(l, 3);
  }
  return 3;
}

TruncatedPAdic wp_eval(const BigInt& z, const WpCoefficients& coeffs, const BigInt& p,
                       std::int64_t k) {
  const std::int64_t m = require_divisible(z, p);
  const int L = series_cutoff(p, k, m, coeffs);
  const WpCoefficients& c = checked(coeffs, L);
  const Rational zq(z);
  const Rational z2 = zq * zq;
  Rational sum = z2.inverse();
  Rational power(1);
  for (int l = 2; l <= L; ++l) {
    power *= z2;
    sum += c[l] * power;
  }
  return TruncatedPAdic::from_rational(sum, p, k);
}

TruncatedPAdic wp_prime_eval(const BigInt& z, const WpCoefficients& coeffs, const BigInt& p,
                             std::int64_t k) {
  const std::int64_t m = require_divisible(z, p);
  const int L = series_cutoff(p, k, m, coeffs);
  const WpCoefficients& c = checked(coeffs, L);
  const Rational zq(z);
  const Rational z2 = zq * zq;
  Rational sum = Rational(-2) / (z2 * zq);
  Rational power = zq.inverse();
  for (int l = 2; l <= L; ++l) {
    power *= z2;
    sum += Rational(2 * l - 2) * c[l] * power;
  }
  return TruncatedPAdic::from_rational(sum, p, k);
}

ExpMap::ExpMap(const ShortWeierstrass& curve, const BigInt& p, std::int64_t k)
    : curve_(curve), p_(p), k_(k), coeffs_(curve.a(), curve.b(), 3), cutoff_(3), headroom_(0) {
  require_odd_prime(p);
  if (k < 1) throw Error(ErrorCode::kParameter, "k must be positive");
  if (!good_reduction(curve, p)) {
    throw Error(ErrorCode::kBadReduction, curve.to_string() + " has bad reduction at " + p.get_str());
  }
  modulus_ = ipow(p, k);
  cutoff_ = series_cutoff(p, k, 1, coeffs_);
  coeffs_ = coeffs_.extended(cutoff_);

  auto make = [&](unsigned exponent, const Rational& coefficient, std::vector<Term>& out) {
    if (coefficient.is_zero()) return;
    BigInt num_unit, den_unit;
    const auto vn = static_cast<std::int64_t>(
        mpz_remove(num_unit.get_mpz_t(), coefficient.num().get_mpz_t(), p.get_mpz_t()));
    const auto vd = static_cast<std::int64_t>(
        mpz_remove(den_unit.get_mpz_t(), coefficient.den().get_mpz_t(), p.get_mpz_t()));
    out.push_back({exponent, vn - vd, mod_floor(num_unit * inverse_mod(den_unit, modulus_), modulus_)});
    headroom_ = std::max(headroom_, vd - vn);
  };
  for (int l = 2; l <= cutoff_; ++l) {
    const Rational& cl = coeffs_[l];
    make(static_cast<unsigned>(2 * l + 1), cl, x_terms_);
    make(static_cast<unsigned>(2 * l), Rational(l - 1) * cl, y_terms_);
  }
  wide_modulus_ = ipow(p, k + headroom_);
}

BigInt ExpMap::sum_terms(const std::vector<Term>& terms, const BigInt& z) const {
  BigInt acc = 0;
  BigInt zp;
  for (const Term& t : terms) {
    mpz_powm_ui(zp.get_mpz_t(), z.get_mpz_t(), t.exponent, wide_modulus_.get_mpz_t());
    if (t.shift < 0) {
      const BigInt scale = ipow(p_, -t.shift);
      if (mpz_divisible_p(zp.get_mpz_t(), scale.get_mpz_t()) == 0) {
        throw Error(ErrorCode::kInconsistent, "series term is not p-integral");
      }
      zp /= scale;
    } else if (t.shift > 0) {
      zp *= ipow(p_, t.shift);
    }
    acc += zp * t.unit;
  }
  return mod_floor(acc, modulus_);
}

PointModPk ExpMap::operator()(const BigInt& z_in) const {
  const BigInt z = mod_floor(z_in, modulus_);
  if (z == 0) return PointModPk::identity(p_, k_);
  if (mpz_divisible_p(z.get_mpz_t(), p_.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kParameter,
                "exp is defined on multiples of p; " + z_in.get_str() + " is not one");
  }
  const BigInt Z = mod_floor(z * z * z, modulus_);
  const BigInt X = mod_floor(z + sum_terms(x_terms_, z), modulus_);
  const BigInt Y = mod_floor(BigInt(-1) + sum_terms(y_terms_, z), modulus_);
  return PointModPk(p_, k_, Z, X, Y).canonical();
}

PointModPk exp_map(const BigInt& z, const ShortWeierstrass& curve, const BigInt& p,
                   std::int64_t k) {
  return ExpMap(curve, p, k)(z);
}

}  // namespace padiclift
