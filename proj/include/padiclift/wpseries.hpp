#ifndef PADICLIFT_WPSERIES_HPP
#define PADICLIFT_WPSERIES_HPP

// Laurent coefficients of the Weierstrass function of y^2 = x^3 + ax + b,
//   wp(z) = z^-2 + sum_{l >= 2} c_l z^(2l-2),
// and the exponential map z -> [z^3 : z^3 wp(z) : z^3 wp'(z)/2] on pZ/p^kZ.

#include <cstdint>
#include <vector>

#include "padiclift/arith.hpp"
#include "padiclift/curve.hpp"
#include "padiclift/padic.hpp"

namespace padiclift {

/// c_2 = -a/5, c_3 = -b/7, c_l = 3/((2l+1)(l-3)) * sum_{s=2}^{l-2} c_s c_{l-s}.
class WpCoefficients {
 public:
  WpCoefficients(Rational a, Rational b, int last_index);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int last_index() const { return static_cast<int>(c_.size()) + 1; }
  /// c_l for 2 <= l <= last_index().
  const Rational& operator[](int l) const;
  /// A copy holding at least c_2 ... c_L.
  WpCoefficients extended(int last_index) const;

 private:
  Rational a_, b_;
  std::vector<Rational> c_;
};

WpCoefficients wp_coeffs(const Rational& a, const Rational& b, int last_index);

/// Lower bound nu_p(c_l) >= -floor(2l/(p-1)) valid for p-integral a, b.
std::int64_t coefficient_valuation_floor(const BigInt& p, int l);

/// Least L >= 3 such that every l > L has nu(c_l) + (2l-2)m >= k and
/// nu((2l-2)c_l) + (2l-3)m >= k. Coefficient valuations are scanned up to the
/// point where the tail bound takes over. kCutoffNotCertified when a or b is
/// not p-integral.
int series_cutoff(const BigInt& p, std::int64_t k, std::int64_t m, const WpCoefficients& coeffs);

/// wp(z) known to absolute precision p^k; valuation -2 nu_p(z). Raises
/// kParameter if p does not divide z or too few coefficients are supplied.
TruncatedPAdic wp_eval(const BigInt& z, const WpCoefficients& coeffs, const BigInt& p,
                       std::int64_t k);
/// wp'(z) known to absolute precision p^k; valuation -3 nu_p(z).
TruncatedPAdic wp_prime_eval(const BigInt& z, const WpCoefficients& coeffs, const BigInt& p,
                             std::int64_t k);

/// The exponential map at fixed (curve, p, k), with coefficients reduced once.
class ExpMap {
 public:
  /// kBadReduction without good reduction at p.
  ExpMap(const ShortWeierstrass& curve, const BigInt& p, std::int64_t k);

  /// Canonical point for z mod p^k; z = 0 gives the identity. kParameter if p does not divide z.
  PointModPk operator()(const BigInt& z) const;

  const ShortWeierstrass& curve() const { return curve_; }
  const BigInt& prime() const { return p_; }
  std::int64_t precision() const { return k_; }
  const BigInt& modulus() const { return modulus_; }
  const WpCoefficients& coefficients() const { return coeffs_; }
  int cutoff() const { return cutoff_; }

 private:
  struct Term {
    unsigned exponent;    // power of z
    std::int64_t shift;   // p-adic valuation of the coefficient
    BigInt unit;          // unit part of the coefficient mod p^k
  };

  BigInt sum_terms(const std::vector<Term>& terms, const BigInt& z) const;

  ShortWeierstrass curve_;
  BigInt p_;
  std::int64_t k_;
  BigInt modulus_;
  WpCoefficients coeffs_;
  int cutoff_;
  std::int64_t headroom_;   // extra digits carried to divide out negative shifts
  BigInt wide_modulus_;
  std::vector<Term> x_terms_, y_terms_;
};

PointModPk exp_map(const BigInt& z, const ShortWeierstrass& curve, const BigInt& p,
                   std::int64_t k);

}  // namespace padiclift

#endif  // PADICLIFT_WPSERIES_HPP
