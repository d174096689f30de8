#include "padiclift/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "padiclift/error.hpp"

namespace padiclift {

TruncatedPAdic TruncatedPAdic::exact_zero(const BigInt& p) {
  return TruncatedPAdic(p, kInfiniteValuation, BigInt(0), 0);
}

TruncatedPAdic TruncatedPAdic::zero(const BigInt& p, std::int64_t absolute_precision) {
  return TruncatedPAdic(p, absolute_precision, BigInt(0), 0);
}

TruncatedPAdic TruncatedPAdic::from_scaled(const BigInt& p, std::int64_t base, BigInt s,
                                           std::int64_t absolute_precision) {
  if (base >= absolute_precision) return zero(p, absolute_precision);
  const BigInt modulus = ipow(p, absolute_precision - base);
  s = mod_floor(s, modulus);
  if (s == 0) return zero(p, absolute_precision);
  BigInt unit;
  const auto e = static_cast<std::int64_t>(
      mpz_remove(unit.get_mpz_t(), s.get_mpz_t(), p.get_mpz_t()));
  const std::int64_t v = base + e;
  return TruncatedPAdic(p, v, std::move(unit), absolute_precision - v);
}

TruncatedPAdic TruncatedPAdic::from_rational(const Rational& x, const BigInt& p,
                                             std::int64_t absolute_precision) {
  if (x.is_zero()) return exact_zero(p);
  const std::int64_t v = padic_valuation(x, p);
  if (v >= absolute_precision) return zero(p, absolute_precision);
  return from_rational_relative(x, p, absolute_precision - v);
}

TruncatedPAdic TruncatedPAdic::from_rational_relative(const Rational& x, const BigInt& p,
                                                      std::int64_t relative_precision) {
  if (x.is_zero()) return exact_zero(p);
  if (relative_precision < 1) {
    throw Error(ErrorCode::kPrecisionExhausted, "relative precision must be positive");
  }
  BigInt num_unit, den_unit;
  const auto vn = static_cast<std::int64_t>(
      mpz_remove(num_unit.get_mpz_t(), x.num().get_mpz_t(), p.get_mpz_t()));
  const auto vd = static_cast<std::int64_t>(
      mpz_remove(den_unit.get_mpz_t(), x.den().get_mpz_t(), p.get_mpz_t()));
  const BigInt modulus = ipow(p, relative_precision);
  BigInt unit = mod_floor(num_unit * inverse_mod(den_unit, modulus), modulus);
  return TruncatedPAdic(p, vn - vd, std::move(unit), relative_precision);
}

TruncatedPAdic TruncatedPAdic::from_parts(const BigInt& p, std::int64_t valuation,
                                          const BigInt& unit, std::int64_t relative_precision) {
  if (relative_precision < 1) {
    throw Error(ErrorCode::kPrecisionExhausted, "relative precision must be positive");
  }
  if (mpz_divisible_p(unit.get_mpz_t(), p.get_mpz_t()) != 0) {
    throw Error(ErrorCode::kParameter, "unit part " + unit.get_str() + " is divisible by p");
  }
  return TruncatedPAdic(p, valuation, mod_floor(unit, ipow(p, relative_precision)),
                        relative_precision);
}

std::int64_t TruncatedPAdic::absolute_precision() const {
  if (is_exact_zero()) return kInfiniteValuation;
  return valuation_ + relative_precision_;
}

BigInt TruncatedPAdic::residue(std::int64_t k) const {
  if (is_exact_zero()) return 0;
  if (k > absolute_precision()) {
    throw Error(ErrorCode::kPrecisionExhausted,
                "residue mod p^" + std::to_string(k) + " requested but only " +
                    std::to_string(absolute_precision()) + " digits are known");
  }
  if (is_zero() || valuation_ >= k) return 0;
  if (valuation_ < 0) {
    throw Error(ErrorCode::kNonIntegral, "residue of an element with negative valuation");
  }
  const BigInt modulus = ipow(p_, k);
  return mod_floor(ipow(p_, valuation_) * unit_, modulus);
}

TruncatedPAdic TruncatedPAdic::truncated(std::int64_t absolute_precision) const {
  if (is_exact_zero()) return zero(p_, absolute_precision);
  if (absolute_precision >= this->absolute_precision()) return *this;
  if (is_zero() || valuation_ >= absolute_precision) return zero(p_, absolute_precision);
  const std::int64_t rel = absolute_precision - valuation_;
  return TruncatedPAdic(p_, valuation_, mod_floor(unit_, ipow(p_, rel)), rel);
}

Rational TruncatedPAdic::to_rational() const {
  if (is_zero()) return Rational(0);
  if (valuation_ >= 0) return Rational(BigInt(ipow(p_, valuation_) * unit_));
  return Rational(unit_, ipow(p_, -valuation_));
}

TruncatedPAdic TruncatedPAdic::operator-() const {
  if (is_zero()) return *this;
  return TruncatedPAdic(p_, valuation_, mod_floor(-unit_, ipow(p_, relative_precision_)),
                        relative_precision_);
}

TruncatedPAdic operator+(const TruncatedPAdic& a, const TruncatedPAdic& b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::kParameter, "p-adic operands over different primes");
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const std::int64_t n = std::min(a.absolute_precision(), b.absolute_precision());
  const std::int64_t base = std::min(a.valuation_, b.valuation_);
  if (base >= n) return TruncatedPAdic::zero(a.p_, n);
  BigInt s = 0;
  if (!a.is_zero()) s += a.unit_ * ipow(a.p_, a.valuation_ - base);
  if (!b.is_zero()) s += b.unit_ * ipow(b.p_, b.valuation_ - base);
  return TruncatedPAdic::from_scaled(a.p_, base, std::move(s), n);
}

TruncatedPAdic operator-(const TruncatedPAdic& a, const TruncatedPAdic& b) { return a + (-b); }

TruncatedPAdic operator*(const TruncatedPAdic& a, const TruncatedPAdic& b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::kParameter, "p-adic operands over different primes");
  if (a.is_exact_zero() || b.is_exact_zero()) return TruncatedPAdic::exact_zero(a.p_);
  if (a.is_zero() || b.is_zero()) {
    // Valuation of a zero is its precision bound; the product is divisible by the sum.
    return TruncatedPAdic::zero(a.p_, a.valuation_ + b.valuation_);
  }
  const std::int64_t rel = std::min(a.relative_precision_, b.relative_precision_);
  const BigInt modulus = ipow(a.p_, rel);
  return TruncatedPAdic(a.p_, a.valuation_ + b.valuation_, mod_floor(a.unit_ * b.unit_, modulus),
                        rel);
}

TruncatedPAdic padic_div(const TruncatedPAdic& a, const TruncatedPAdic& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorCode::kParameter, "p-adic operands over different primes");
  }
  if (b.is_exact_zero()) throw Error(ErrorCode::kDivisionByZero, "p-adic division by zero");
  if (b.is_zero()) {
    throw Error(ErrorCode::kPrecisionExhausted,
                "divisor is zero to its known precision; quotient undetermined");
  }
  if (a.is_exact_zero()) return TruncatedPAdic::exact_zero(a.prime());
  if (a.is_zero()) return TruncatedPAdic::zero(a.prime(), a.valuation() - b.valuation());
  const std::int64_t rel = std::min(a.relative_precision(), b.relative_precision());
  const BigInt modulus = ipow(a.prime(), rel);
  return TruncatedPAdic::from_parts(a.prime(), a.valuation() - b.valuation(),
                                    mod_floor(a.unit() * inverse_mod(b.unit(), modulus), modulus),
                                    rel);
}

TruncatedPAdic operator/(const TruncatedPAdic& a, const TruncatedPAdic& b) {
  return padic_div(a, b);
}

TruncatedPAdic TruncatedPAdic::pow(unsigned exponent) const {
  if (exponent == 0) {
    return TruncatedPAdic(p_, 0, BigInt(1), std::max<std::int64_t>(relative_precision_, 1));
  }
  TruncatedPAdic result = *this;
  for (unsigned i = 1; i < exponent; ++i) result = result * *this;
  return result;
}

std::string TruncatedPAdic::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) {
    os << "0";
  } else if (is_zero()) {
    os << "O(" << p_ << "^" << valuation_ << ")";
  } else {
    os << p_ << "^" << valuation_ << "*" << unit_ << " + O(" << p_ << "^" << absolute_precision()
       << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedPAdic& x) { return os << x.to_string(); }

}  // namespace padiclift
