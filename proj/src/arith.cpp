#include "padiclift/arith.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "padiclift/error.hpp"

namespace padiclift {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const bool negative = !digits.empty() && digits.front() == '-';
  const std::size_t start = negative ? 1 : 0;
  if (digits.size() == start ||
      !std::all_of(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::kParse, "malformed integer '" + std::string(text) + "'");
  }
  return BigInt(digits, 10);
}

// Square root of a unit w modulo an odd prime p (Tonelli-Shanks); w must be a residue.
BigInt sqrt_mod_prime(const BigInt& w, const BigInt& p) {
  BigInt a = mod_floor(w, p);
  if (a == 0) return 0;
  if (p < 1000) {
    for (BigInt r = 1; r < p; ++r) {
      if (mod_floor(r * r, p) == a) return r;
    }
  }
  BigInt q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  BigInt z = 2;
  while (legendre(z, p) != -1) ++z;
  BigInt c, t, r;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  BigInt e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = mod_floor(tt * tt, p);
      ++i;
    }
    BigInt b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_floor(b * b, p);
    r = mod_floor(r * b, p);
    c = mod_floor(b * b, p);
    t = mod_floor(t * c, p);
    m = i;
  }
  return r;
}

std::vector<BigInt> sqrt_scan(const BigInt& a, std::int64_t modulus) {
  const std::int64_t target = to_int64(mod_floor(a, BigInt(modulus)));
  std::vector<BigInt> roots;
  for (std::int64_t r = 0; r < modulus; ++r) {
    const auto sq = static_cast<std::int64_t>((static_cast<__int128>(r) * r) % modulus);
    if (sq == target) roots.emplace_back(static_cast<long>(r));
  }
  return roots;
}

std::vector<BigInt> sqrt_hensel(const BigInt& a_in, const BigInt& p, std::int64_t k) {
  const BigInt modulus = ipow(p, k);
  const BigInt a = mod_floor(a_in, modulus);
  std::vector<BigInt> roots;
  if (a == 0) {
    // r^2 = 0 mod p^k  <=>  nu(r) >= ceil(k/2).
    const std::int64_t half = (k + 1) / 2;
    const BigInt step = ipow(p, half);
    for (BigInt r = 0; r < modulus; r += step) roots.push_back(r);
    return roots;
  }
  const std::int64_t v = valuation(a, p);
  if (v % 2 != 0) return roots;
  const std::int64_t half = v / 2;
  const std::int64_t unit_digits = k - v;
  const BigInt unit_modulus = ipow(p, unit_digits);
  const BigInt w = mod_floor(a / ipow(p, v), unit_modulus);
  if (legendre(w, p) != 1) return roots;

  // Newton iteration doubles the number of correct digits.
  BigInt s = sqrt_mod_prime(w, p);
  std::int64_t digits = 1;
  while (digits < unit_digits) {
    digits = std::min(2 * digits, unit_digits);
    const BigInt m = ipow(p, digits);
    s = mod_floor(s - (s * s - w) * inverse_mod(2 * s, m), m);
  }
  const BigInt scale = ipow(p, half);
  const BigInt fibre_step = ipow(p, unit_digits + half);
  const BigInt fibre = ipow(p, half);
  for (const BigInt& base : {s, mod_floor(-s, unit_modulus)}) {
    for (BigInt t = 0; t < fibre; ++t) roots.push_back(mod_floor(scale * base + t * fibre_step, modulus));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t));
  const BigInt num = parse_integer(t.substr(0, slash));
  const BigInt den = parse_integer(t.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(t) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

Rational Rational::inverse() const { return Rational(1) / *this; }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

void require_prime(const BigInt& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw Error(ErrorCode::kParameter, "p = " + p.get_str() + " is not prime");
  }
}

void require_odd_prime(const BigInt& p) {
  require_prime(p);
  if (p == 2) throw Error(ErrorCode::kParameter, "p = 2 is not supported (odd prime required)");
}

BigInt ipow(const BigInt& base, std::int64_t exponent) {
  if (exponent < 0) throw Error(ErrorCode::kParameter, "negative exponent");
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

std::int64_t valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) return kInfiniteValuation;
  BigInt rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::int64_t padic_valuation(const Rational& x, const BigInt& p) {
  require_prime(p);
  if (x.is_zero()) return kInfiniteValuation;
  return valuation(x.num(), p) - valuation(x.den(), p);
}

BigInt mod_floor(const BigInt& n, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (m == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kDivisionByZero,
                a.get_str() + " is not invertible modulo " + m.get_str());
  }
  return r;
}

BigInt reduce_mod(const Rational& x, const BigInt& p, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::kParameter, "k must be positive");
  if (mpz_divisible_p(x.den().get_mpz_t(), p.get_mpz_t()) != 0) {
    throw Error(ErrorCode::kNonIntegral, x.to_string() + " is non-integral at " + p.get_str());
  }
  const BigInt m = ipow(p, k);
  return mod_floor(x.num() * inverse_mod(x.den(), m), m);
}

std::vector<BigInt> sqrt_all_mod(const BigInt& a, const BigInt& p, std::int64_t k,
                                 std::int64_t scan_ceiling) {
  require_odd_prime(p);
  if (k < 1) throw Error(ErrorCode::kParameter, "k must be positive");
  const BigInt modulus = ipow(p, k);
  if (modulus <= scan_ceiling) return sqrt_scan(a, to_int64(modulus));
  return sqrt_hensel(a, p, k);
}

int legendre(const BigInt& a, const BigInt& p) {
  return mpz_legendre(mod_floor(a, p).get_mpz_t(), p.get_mpz_t());
}

std::int64_t to_int64(const BigInt& n) {
  if (!n.fits_slong_p()) throw Error(ErrorCode::kScaleExceeded, n.get_str() + " exceeds 64 bits");
  return n.get_si();
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kNonIntegral: return "non-integral";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kPrecisionExhausted: return "precision-exhausted";
    case ErrorCode::kNotAField: return "not-a-field";
    case ErrorCode::kSingularCurve: return "singular-curve";
    case ErrorCode::kOffCurve: return "off-curve";
    case ErrorCode::kBadReduction: return "bad-reduction";
    case ErrorCode::kScaleExceeded: return "scale-exceeded";
    case ErrorCode::kNotInImage: return "not-in-image";
    case ErrorCode::kHypothesisViolated: return "hypothesis-violated";
    case ErrorCode::kNotInSpan: return "not-in-span";
    case ErrorCode::kInconsistent: return "inconsistent";
    case ErrorCode::kNoConvergence: return "no-convergence";
    case ErrorCode::kOrderRequired: return "order-required";
    case ErrorCode::kCutoffNotCertified: return "cutoff-not-certified";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace padiclift
