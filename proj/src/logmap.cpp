#include "padiclift/logmap.hpp"

#include <sstream>

#include "padiclift/error.hpp"

namespace padiclift {

namespace {

void require_member(const PointModPk& P, const ExpMap& exp) {
  if (P.prime() != exp.prime() || P.precision() != exp.precision()) {
    throw Error(ErrorCode::kParameter, "point " + P.to_string() + " does not match the map mod " +
                                           exp.prime().get_str() + "^" +
                                           std::to_string(exp.precision()));
  }
  if (!P.reduces_to_identity()) {
    throw Error(ErrorCode::kNotInImage,
                P.to_string() + " does not reduce to the identity mod p; it has no logarithm");
  }
}

bool is_unit(const BigInt& x, const BigInt& p) {
  return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) == 0;
}

// True unless a digit below `digits` is known to be nonzero.
bool vanishes_to(const TruncatedPAdic& x, std::int64_t digits) {
  return x.is_zero() || x.valuation() >= digits;
}

}  // namespace

BigInt naive_inv(const PointModPk& P) {
  if (!is_unit(P.Y(), P.prime())) {
    throw Error(ErrorCode::kNotInImage, "Y is not a unit in " + P.to_string());
  }
  const BigInt m = P.modulus();
  return mod_floor(-P.X() * inverse_mod(P.Y(), m), m);
}

LogResult log_initial(const PointModPk& P, const ExpMap& exp) {
  require_member(P, exp);
  const PointModPk C = P.canonical();
  const BigInt& p = exp.prime();
  const std::int64_t k = exp.precision();
  if (C.is_identity()) return {BigInt(0), k, true};

  BigInt z0;
  std::int64_t digits = std::min<std::int64_t>(k, 5);
  if (C.Z() == 0) {
    z0 = naive_inv(C);
  } else {
    using TP = TruncatedPAdic;
    const TP Z = TP::from_rational(C.Z(), p, k);
    const TP X = TP::from_rational(C.X(), p, k);
    const TP Y = TP::from_rational(C.Y(), p, k);
    const Rational a5 = exp.curve().a() / Rational(5);
    const TP ratio = Z / X;
    TP correction = TP::from_rational(-1, p, k + 5);
    if (!a5.is_zero()) correction = correction - TP::from_rational_relative(a5, p, k + 5) * ratio * ratio;
    const TP z = (X / Y) * correction;
    digits = std::min(digits, z.absolute_precision());
    z0 = z.residue(digits);
  }
  const PointModPk image = exp(z0);
  std::int64_t certified = 1;
  while (certified < digits && image.reduced(certified + 1) == C.reduced(certified + 1)) ++certified;
  const BigInt z = mod_floor(z0, ipow(p, certified));
  return {z, certified, certified == k && image == C};
}

LogResult log_initial(const PointModPk& P, const ShortWeierstrass& curve) {
  return log_initial(P, ExpMap(curve, P.prime(), P.precision()));
}

LogResult log_lift(const PointModPk& P, const BigInt& z_start, std::int64_t start,
                   const ExpMap& exp) {
  require_member(P, exp);
  const PointModPk C = P.canonical();
  const BigInt& p = exp.prime();
  const std::int64_t k = exp.precision();
  if (start < 1) throw Error(ErrorCode::kParameter, "lift must start from at least one digit");

  std::vector<BigInt> candidates{mod_floor(z_start, ipow(p, std::min(start, k)))};
  std::ostringstream tree;
  tree << "start mod " << p << "^" << start << ": " << candidates.front();

  using TP = TruncatedPAdic;
  const TP Z = TP::from_rational(C.Z(), p, k);
  const TP X = TP::from_rational(C.X(), p, k);
  const std::int64_t m = C.X() == 0 ? k : valuation(C.X(), p);

  for (std::int64_t i = start; i < k; ++i) {
    const BigInt step = ipow(p, i);
    const std::int64_t digits = std::min(i + 1, k - 2 * m);
    std::vector<BigInt> next;
    for (const BigInt& c : candidates) {
      for (BigInt h = 0; h < p; ++h) {
        const BigInt z = c + h * step;
        if (digits >= 1 && z != 0 && C.Z() != 0) {
          const TP w = wp_eval(z, exp.coefficients(), p, digits);
          if (!vanishes_to(Z * w - X, digits)) continue;
        }
        next.push_back(z);
      }
    }
    if (next.size() > 1) {
      const PointModPk target = C.reduced(i + 1);
      std::vector<BigInt> kept;
      for (const BigInt& z : next) {
        if (exp(z).reduced(i + 1) == target) kept.push_back(z);
      }
      next = std::move(kept);
    }
    tree << "\n  digit " << i << ":";
    for (const BigInt& z : next) tree << " " << z;
    if (next.empty()) {
      throw Error(ErrorCode::kNotInImage,
                  "no candidate survives at digit " + std::to_string(i) + " for " + P.to_string() +
                      " (not in the image, or a precision bug); candidate tree:\n  " + tree.str());
    }
    candidates = std::move(next);
  }

  std::vector<BigInt> verified;
  for (const BigInt& z : candidates) {
    if (exp(z) == C) verified.push_back(z);
  }
  if (verified.empty()) {
    throw Error(ErrorCode::kNotInImage,
                "no candidate reproduces " + P.to_string() + "; candidate tree:\n  " + tree.str());
  }
  if (verified.size() > 1) {
    throw Error(ErrorCode::kInconsistent, "several logarithms reproduce " + P.to_string());
  }
  return {mod_floor(verified.front(), exp.modulus()), k, true};
}

LogResult log_map(const PointModPk& P, const ExpMap& exp) {
  require_member(P, exp);
  const LogResult initial = log_initial(P, exp);
  if (initial.verified) return initial;
  return log_lift(P, initial.z, initial.certified_precision, exp);
}

LogResult log_map(const PointModPk& P, const ShortWeierstrass& curve) {
  return log_map(P, ExpMap(curve, P.prime(), P.precision()));
}

}  // namespace padiclift
