#ifndef PADICLIFT_PADIC_HPP
#define PADICLIFT_PADIC_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "padiclift/arith.hpp"

namespace padiclift {

/// A p-adic number known to finite precision: p^v * u with u a unit known
/// modulo p^rel, i.e. the value is known modulo p^(v + rel).
///
/// Two kinds of zero exist. The exact zero has infinite valuation and
/// infinite precision. A zero "to precision N" is an element known only to be
/// divisible by p^N; it reports valuation N and relative precision 0.
///
/// Valuations may be negative (Laurent values such as 1/z^2). Every operation
/// returns the precision its operands justify and no more: sums keep the
/// smaller absolute precision, products and quotients the smaller relative
/// precision.
class TruncatedPAdic {
 public:
  static TruncatedPAdic exact_zero(const BigInt& p);
  static TruncatedPAdic zero(const BigInt& p, std::int64_t absolute_precision);
  /// x known modulo p^absolute_precision. x = 0 gives the exact zero.
  static TruncatedPAdic from_rational(const Rational& x, const BigInt& p,
                                      std::int64_t absolute_precision);
  /// x with relative_precision unit digits. x = 0 gives the exact zero.
  static TruncatedPAdic from_rational_relative(const Rational& x, const BigInt& p,
                                               std::int64_t relative_precision);
  /// Validates that unit is prime to p and relative_precision > 0.
  static TruncatedPAdic from_parts(const BigInt& p, std::int64_t valuation, const BigInt& unit,
                                   std::int64_t relative_precision);

  const BigInt& prime() const { return p_; }
  bool is_exact_zero() const { return valuation_ == kInfiniteValuation; }
  bool is_zero() const { return is_exact_zero() || relative_precision_ == 0; }

  /// For a zero to precision N this is N, a lower bound on the true valuation.
  std::int64_t valuation() const { return valuation_; }
  std::int64_t relative_precision() const { return relative_precision_; }
  std::int64_t absolute_precision() const;
  const BigInt& unit() const { return unit_; }

  /// The value modulo p^k in [0, p^k). Requires a nonnegative valuation and
  /// k <= absolute_precision(); throws kNonIntegral / kPrecisionExhausted.
  BigInt residue(std::int64_t k) const;

  /// Forgets digits at and beyond p^absolute_precision.
  TruncatedPAdic truncated(std::int64_t absolute_precision) const;

  /// The representative p^v * u.
  Rational to_rational() const;

  TruncatedPAdic operator-() const;
  friend TruncatedPAdic operator+(const TruncatedPAdic& a, const TruncatedPAdic& b);
  friend TruncatedPAdic operator-(const TruncatedPAdic& a, const TruncatedPAdic& b);
  friend TruncatedPAdic operator*(const TruncatedPAdic& a, const TruncatedPAdic& b);
  friend TruncatedPAdic operator/(const TruncatedPAdic& a, const TruncatedPAdic& b);

  TruncatedPAdic pow(unsigned exponent) const;

  std::string to_string() const;

 private:
  TruncatedPAdic(BigInt p, std::int64_t valuation, BigInt unit, std::int64_t relative_precision)
      : p_(std::move(p)), valuation_(valuation), unit_(std::move(unit)),
        relative_precision_(relative_precision) {}

  /// Normalizes p^base * s known modulo p^absolute_precision.
  static TruncatedPAdic from_scaled(const BigInt& p, std::int64_t base, BigInt s,
                                    std::int64_t absolute_precision);

  BigInt p_;
  std::int64_t valuation_;
  BigInt unit_;
  std::int64_t relative_precision_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedPAdic& x);

/// a / b. Errors: kDivisionByZero for exact zero b, kPrecisionExhausted when
/// b carries no known unit digits.
TruncatedPAdic padic_div(const TruncatedPAdic& a, const TruncatedPAdic& b);

}  // namespace padiclift

#endif  // PADICLIFT_PADIC_HPP
