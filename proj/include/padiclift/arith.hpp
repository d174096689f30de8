#ifndef PADICLIFT_ARITH_HPP
#define PADICLIFT_ARITH_HPP

// Exact integers and rationals (GMP-backed), p-adic valuations, residues
// modulo p^k and square roots modulo prime powers.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "padiclift/config.hpp"

namespace padiclift {

using BigInt = mpz_class;

/// Valuation of zero.
inline constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  template <class Op>
  Rational(const __gmp_expr<mpz_t, Op>& expr) : value_(BigInt(expr)) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "num/den" or "num" (optional sign, surrounding spaces ignored).
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  Rational pow(unsigned exponent) const;
  Rational inverse() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Throws kParameter unless p is a (probable) prime.
void require_prime(const BigInt& p);
/// Throws kParameter unless p is an odd prime.
void require_odd_prime(const BigInt& p);

BigInt ipow(const BigInt& base, std::int64_t exponent);

/// Exponent of p in n; kInfiniteValuation for n = 0.
std::int64_t valuation(const BigInt& n, const BigInt& p);

/// nu_p(num) - nu_p(den); kInfiniteValuation for x = 0. Requires p prime.
std::int64_t padic_valuation(const Rational& x, const BigInt& p);

/// num * den^-1 mod p^k in [0, p^k). Throws kNonIntegral when p | den.
BigInt reduce_mod(const Rational& x, const BigInt& p, std::int64_t k);

/// Canonical residue of n modulo m, in [0, m).
BigInt mod_floor(const BigInt& n, const BigInt& m);

/// Inverse of a unit modulo m; throws kDivisionByZero when none exists.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

/// Every r in [0, p^k) with r^2 = a (mod p^k), ascending. Scans exhaustively
/// when p^k <= scan_ceiling and lifts p-adically otherwise.
std::vector<BigInt> sqrt_all_mod(const BigInt& a, const BigInt& p, std::int64_t k,
                                 std::int64_t scan_ceiling = config::kSqrtScanCeiling);

/// Legendre symbol (a/p) for odd prime p.
int legendre(const BigInt& a, const BigInt& p);

std::int64_t to_int64(const BigInt& n);

}  // namespace padiclift

#endif  // PADICLIFT_ARITH_HPP
