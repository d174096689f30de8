#include "padiclift/poly.hpp"

#include <cctype>

namespace padiclift {

ResidueRing::ResidueRing(const BigInt& p, std::int64_t k) : p_(p), k_(k) {
  require_prime(p);
  if (k < 1) throw Error(ErrorCode::kParameter, "residue ring exponent must be positive");
  modulus_ = ipow(p, k);
}

std::string ResidueRing::name() const {
  if (k_ == 1) return "F_" + p_.get_str();
  return "Z/" + p_.get_str() + "^" + std::to_string(k_);
}

Rational discriminant(const QPoly& f) {
  const int n = f.degree();
  if (n < 2) throw Error(ErrorCode::kParameter, "discriminant needs degree >= 2");
  Rational res = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 != 0) res = -res;
  return res;
}

namespace {

std::string strip_parens(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

void parse_term(const std::string& term, bool negative, std::vector<Rational>& acc,
                std::string_view source) {
  auto fail = [&]() -> void {
    throw Error(ErrorCode::kParse,
                "malformed polynomial term '" + term + "' in '" + std::string(source) + "'");
  };
  if (term.empty()) fail();
  Rational coeff(1);
  std::size_t degree = 0;
  const auto xpos = term.find('x');
  if (xpos == std::string::npos) {
    coeff = Rational::parse(strip_parens(term));
  } else {
    std::string head = term.substr(0, xpos);
    std::string tail = term.substr(xpos + 1);
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (!head.empty()) coeff = Rational::parse(strip_parens(head));
    if (tail.empty()) {
      degree = 1;
    } else {
      if (tail.rfind("**", 0) == 0) {
        tail = tail.substr(2);
      } else if (tail.front() == '^') {
        tail = tail.substr(1);
      } else {
        fail();
      }
      if (tail.empty() || !std::all_of(tail.begin(), tail.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
        fail();
      }
      degree = std::stoul(tail);
    }
  }
  if (negative) coeff = -coeff;
  if (acc.size() <= degree) acc.resize(degree + 1, Rational(0));
  acc[degree] += coeff;
}

}  // namespace

QPoly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParse, "empty polynomial");
  std::vector<Rational> acc;
  std::string term;
  bool negative = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool sign = c == '+' || c == '-';
    const bool splits = sign && i > 0 && s[i - 1] != '^' && s[i - 1] != '*' &&
                        s[i - 1] != '/' && s[i - 1] != '(';
    if (splits) {
      parse_term(term, negative, acc, text);
      term.clear();
      negative = c == '-';
    } else if (sign && i == 0) {
      negative = c == '-';
    } else {
      term.push_back(c);
    }
  }
  parse_term(term, negative, acc, text);
  return QPoly(RationalField{}, std::move(acc));
}

ModPoly reduce(const QPoly& f, const ResidueRing& ring) {
  std::vector<BigInt> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.push_back(ring.from_rational(c));
  return ModPoly(ring, std::move(v));
}

std::int64_t min_coefficient_valuation(const QPoly& f, const BigInt& p) {
  std::int64_t m = kInfiniteValuation;
  for (const auto& c : f.coefficients()) m = std::min(m, padic_valuation(c, p));
  return m;
}

ModPoly reduce_clearing_denominators(const QPoly& f, const ResidueRing& ring) {
  const std::int64_t m = min_coefficient_valuation(f, ring.prime());
  if (m >= 0) return reduce(f, ring);
  return reduce(f.scaled(Rational(ipow(ring.prime(), -m))), ring);
}

GcdCommuteReport gcd_commute_check(const QPoly& f1, const QPoly& f2, const BigInt& p,
                                   std::int64_t k) {
  require_odd_prime(p);
  const ResidueRing ring_k(p, k);
  const ResidueRing field(p, 1);
  if (k > 1) {
    throw Error(ErrorCode::kNotAField,
                "gcd of reductions requires a field; Z/p^k with k > 1 has none");
  }
  // Both inputs must be p-integral; reduce() throws otherwise.
  const ModPoly r1 = reduce(f1, field);
  const ModPoly r2 = reduce(f2, field);
  QPoly g = gcd(f1, f2);
  ModPoly lhs = reduce_clearing_denominators(g, ring_k);
  if (!lhs.is_zero() && ring_k.is_unit(lhs.leading())) lhs = lhs.monic();
  ModPoly rhs = gcd(r1, r2);
  const bool differ = !(lhs == rhs);
  std::string statement = "gcd(f1, f2) mod " + p.get_str() + " = " + lhs.to_string() +
                          (differ ? " != " : " == ") + "gcd(f1 mod " + p.get_str() + ", f2 mod " +
                          p.get_str() + ") = " + rhs.to_string();
  return {std::move(g), std::move(lhs), std::move(rhs), differ, std::move(statement)};
}

}  // namespace padiclift
