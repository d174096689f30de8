#ifndef PADICLIFT_POLY_HPP
#define PADICLIFT_POLY_HPP

// Univariate polynomials over Q, over F_p and (coefficient-wise) over Z/p^k.
// The coefficient domain is a ring policy carried by value inside every Poly.

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padiclift/arith.hpp"
#include "padiclift/error.hpp"

namespace padiclift {

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_rational(const Rational& q) const { return q; }
  Element from_integer(long n) const { return Rational(n); }
  Element normalize(const Element& a) const { return a; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_unit(const Element& a) const { return !a.is_zero(); }
  Element inverse(const Element& a) const { return a.inverse(); }

  bool is_field() const { return true; }
  std::string name() const { return "Q"; }
  std::string format(const Element& a) const { return a.to_string(); }
  bool is_negative(const Element& a) const { return a.sign() < 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/p^k with canonical residues in [0, p^k). A field exactly when k = 1.
class ResidueRing {
 public:
  using Element = BigInt;

  ResidueRing(const BigInt& p, std::int64_t k);

  const BigInt& prime() const { return p_; }
  std::int64_t exponent() const { return k_; }
  const BigInt& modulus() const { return modulus_; }

  Element zero() const { return BigInt(0); }
  Element one() const { return mod_floor(BigInt(1), modulus_); }
  /// Throws kNonIntegral when p divides the denominator.
  Element from_rational(const Rational& q) const { return reduce_mod(q, p_, k_); }
  Element from_integer(long n) const { return mod_floor(BigInt(n), modulus_); }
  Element normalize(const Element& a) const { return mod_floor(a, modulus_); }

  Element add(const Element& a, const Element& b) const { return mod_floor(a + b, modulus_); }
  Element sub(const Element& a, const Element& b) const { return mod_floor(a - b, modulus_); }
  Element mul(const Element& a, const Element& b) const { return mod_floor(a * b, modulus_); }
  Element neg(const Element& a) const { return mod_floor(-a, modulus_); }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_unit(const Element& a) const {
    return mpz_divisible_p(a.get_mpz_t(), p_.get_mpz_t()) == 0;
  }
  Element inverse(const Element& a) const { return inverse_mod(a, modulus_); }

  bool is_field() const { return k_ == 1; }
  std::string name() const;
  std::string format(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element&) const { return false; }

  friend bool operator==(const ResidueRing& a, const ResidueRing& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  BigInt p_;
  std::int64_t k_;
  BigInt modulus_;
};

/// Polynomial with ascending coefficients; the zero polynomial has no
/// coefficients and degree -1. The leading coefficient is never zero.
template <class Ring>
class Poly {
 public:
  using Element = typename Ring::Element;

  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, std::vector<Element> ascending) : ring_(std::move(ring)), c_(std::move(ascending)) {
    for (auto& e : c_) e = ring_.normalize(e);
    trim();
  }

  static Poly constant(const Ring& ring, const Element& c) { return Poly(ring, {c}); }
  static Poly monomial(const Ring& ring, const Element& c, std::size_t degree) {
    std::vector<Element> v(degree + 1, ring.zero());
    v[degree] = c;
    return Poly(ring, std::move(v));
  }
  static Poly x(const Ring& ring) { return monomial(ring, ring.one(), 1); }

  const Ring& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == ring_.one(); }
  std::span<const Element> coefficients() const { return c_; }
  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  Element leading() const { return c_.empty() ? ring_.zero() : c_.back(); }

  Poly operator-() const {
    Poly r(ring_);
    r.c_.reserve(c_.size());
    for (const auto& e : c_) r.c_.push_back(ring_.neg(e));
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ring_.add(a.coeff(i), b.coeff(i));
    return Poly(a.ring_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<Element> v(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.ring_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        v[i + j] = a.ring_.add(v[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
      }
    }
    return Poly(a.ring_, std::move(v));
  }
  Poly scaled(const Element& s) const {
    std::vector<Element> v;
    v.reserve(c_.size());
    for (const auto& e : c_) v.push_back(ring_.mul(s, e));
    return Poly(ring_, std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

  Poly derivative() const {
    std::vector<Element> v;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      v.push_back(ring_.mul(ring_.from_integer(static_cast<long>(i)), c_[i]));
    }
    return Poly(ring_, std::move(v));
  }

  /// Divides by the leading coefficient; kNotAField when it is not a unit.
  Poly monic() const {
    if (is_zero()) return *this;
    if (!ring_.is_unit(leading())) {
      throw Error(ErrorCode::kNotAField, "leading coefficient of " + to_string() +
                                             " is not invertible in " + ring_.name());
    }
    return scaled(ring_.inverse(leading()));
  }

  Element evaluate(const Element& x) const {
    Element acc = ring_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }

  /// Canonical descending rendering, e.g. "x^2 + 8*x" or "4*x + 7".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Element& e = c_[static_cast<std::size_t>(i)];
      if (ring_.is_zero(e)) continue;
      const bool negative = ring_.is_negative(e);
      const Element magnitude = negative ? ring_.neg(e) : e;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit_coeff = magnitude == ring_.one();
      if (i == 0) {
        out += ring_.format(magnitude);
      } else {
        if (!unit_coeff) out += ring_.format(magnitude) + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static void check_same_ring(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_)) {
      throw Error(ErrorCode::kParameter, "polynomials over different coefficient domains");
    }
  }
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  Ring ring_;
  std::vector<Element> c_;
};

template <class Ring>
std::ostream& operator<<(std::ostream& os, const Poly<Ring>& f) {
  return os << f.to_string();
}

using QPoly = Poly<RationalField>;
using ModPoly = Poly<ResidueRing>;

template <class Ring>
struct DivRem {
  Poly<Ring> quotient;
  Poly<Ring> remainder;
};

/// f = q*g + r with deg r < deg g. The leading coefficient of g must be a unit
/// (kNotAField otherwise); g = 0 is kDivisionByZero.
template <class Ring>
DivRem<Ring> divrem(const Poly<Ring>& f, const Poly<Ring>& g) {
  const Ring& ring = f.ring();
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (!ring.is_unit(g.leading())) {
    throw Error(ErrorCode::kNotAField, "cannot divide by " + g.to_string() + " over " +
                                           ring.name() + ": leading coefficient not invertible");
  }
  const auto lead_inv = ring.inverse(g.leading());
  std::vector<typename Ring::Element> rem(f.coefficients().begin(), f.coefficients().end());
  if (f.degree() < g.degree()) return {Poly<Ring>(ring), f};
  std::vector<typename Ring::Element> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1),
                                          ring.zero());
  const auto gd = static_cast<std::size_t>(g.degree());
  for (std::size_t i = rem.size(); i-- > gd;) {
    if (ring.is_zero(rem[i])) continue;
    const auto factor = ring.mul(rem[i], lead_inv);
    quo[i - gd] = factor;
    for (std::size_t j = 0; j <= gd; ++j) {
      rem[i - gd + j] = ring.sub(rem[i - gd + j], ring.mul(factor, g.coeff(j)));
    }
  }
  rem.resize(gd);
  return {Poly<Ring>(ring, std::move(quo)), Poly<Ring>(ring, std::move(rem))};
}

template <class Ring>
Poly<Ring> operator%(const Poly<Ring>& f, const Poly<Ring>& g) {
  return divrem(f, g).remainder;
}

/// Exact quotient f / g; kInconsistent when g does not divide f.
template <class Ring>
Poly<Ring> exact_quotient(const Poly<Ring>& f, const Poly<Ring>& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) {
    throw Error(ErrorCode::kInconsistent, g.to_string() + " does not divide " + f.to_string());
  }
  return q;
}

template <class Ring>
struct ExtGcd {
  Poly<Ring> d;   ///< monic gcd (zero only for gcd(0, 0))
  Poly<Ring> e1;
  Poly<Ring> e2;  ///< d = e1*f1 + e2*f2
};

/// Extended Euclid over a field. Over Z/p^k with k > 1 this refuses with
/// kNotAField: a gcd is not defined there.
template <class Ring>
ExtGcd<Ring> ext_gcd(const Poly<Ring>& f1, const Poly<Ring>& f2) {
  const Ring& ring = f1.ring();
  if (!ring.is_field()) {
    throw Error(ErrorCode::kNotAField, "extended gcd requires a field, got " + ring.name());
  }
  using P = Poly<Ring>;
  P r0 = f1, r1 = f2;
  P s0 = P::constant(ring, ring.one()), s1(ring);
  P t0(ring), t1 = P::constant(ring, ring.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    P t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, P(ring), P(ring)};
  const auto inv = ring.inverse(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class Ring>
Poly<Ring> gcd(const Poly<Ring>& f1, const Poly<Ring>& f2) {
  return ext_gcd(f1, f2).d;
}

/// Resultant over a field by the Euclidean remainder sequence.
template <class Ring>
typename Ring::Element resultant(const Poly<Ring>& f, const Poly<Ring>& g) {
  const Ring& ring = f.ring();
  if (!ring.is_field()) throw Error(ErrorCode::kNotAField, "resultant requires a field");
  if (f.is_zero() || g.is_zero()) return ring.zero();
  auto power = [&ring](typename Ring::Element b, int e) {
    auto acc = ring.one();
    for (int i = 0; i < e; ++i) acc = ring.mul(acc, b);
    return acc;
  };
  if (g.degree() == 0) return power(g.leading(), f.degree());
  if (f.degree() == 0) return power(f.leading(), g.degree());
  const Poly<Ring> r = f % g;
  if (r.is_zero()) return ring.zero();
  const int m = f.degree(), n = g.degree();
  auto value = ring.mul(power(g.leading(), m - r.degree()), resultant(g, r));
  if ((m * n) % 2 != 0) value = ring.neg(value);
  return value;
}

/// (-1)^(n(n-1)/2) * Res(f, f') / lc(f). Requires deg f >= 2.
Rational discriminant(const QPoly& f);

/// Parses "x^5 + 2*x^4 - 13*x^3", "4*x + 7", "5/2*x - 1" (terms in any order).
QPoly parse_poly(std::string_view text);

/// Strict coefficient-wise reduction; kNonIntegral on any p in a denominator.
ModPoly reduce(const QPoly& f, const ResidueRing& ring);

/// Reduction after multiplying f by the least power of p that makes every
/// coefficient p-integral (no scaling for p-integral input).
ModPoly reduce_clearing_denominators(const QPoly& f, const ResidueRing& ring);

/// Smallest p-adic valuation over the coefficients (kInfiniteValuation for 0).
std::int64_t min_coefficient_valuation(const QPoly& f, const BigInt& p);

struct GcdCommuteReport {
  QPoly gcd_over_q;
  ModPoly gcd_then_reduce;  ///< gcd over Q, then reduced mod p^k
  ModPoly reduce_then_gcd;  ///< gcd of the reductions over F_p
  bool differ;
  std::string statement;
};

/// Compares gcd(f1, f2) mod p^k with gcd(f1 mod p, f2 mod p). With k > 1 the
/// right-hand gcd lives over a ring and the call refuses with kNotAField.
GcdCommuteReport gcd_commute_check(const QPoly& f1, const QPoly& f2, const BigInt& p,
                                   std::int64_t k = 1);

}  // namespace padiclift

#endif  // PADICLIFT_POLY_HPP
