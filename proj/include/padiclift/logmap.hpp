#ifndef PADICLIFT_LOGMAP_HPP
#define PADICLIFT_LOGMAP_HPP

// Local inverse of the exponential map on the kernel of reduction of E(Z/p^k).

#include <cstdint>

#include "padiclift/curve.hpp"
#include "padiclift/wpseries.hpp"

namespace padiclift {

struct LogResult {
  BigInt z;                          ///< in [0, p^k), divisible by p
  std::int64_t certified_precision;  ///< z is correct modulo p^certified_precision
  bool verified;                     ///< exp(z) reproduces the input point mod p^k
};

/// -X/Y mod p^k for a point with unit Y. It agrees with the logarithm modulo
/// p^min(k,5) (p^4 when p = 5). kNotInImage when Y is not a unit.
BigInt naive_inv(const PointModPk& P);

/// Closed-form logarithm z = (X/Y)(-1 - (a/5)(Z/X)^2), or -X/Y when Z = 0 mod p^k.
/// The precision is certified by comparing exp(z) with P digit by digit and is
/// at most min(k, 5). kNotInImage when P does not reduce to the identity.
LogResult log_initial(const PointModPk& P, const ExpMap& exp);
LogResult log_initial(const PointModPk& P, const ShortWeierstrass& curve);

/// Extends a logarithm known modulo p^start to p^k one digit at a time,
/// keeping every candidate that passes the wp congruence at the next digit.
/// kNotInImage with the candidate tree when nothing survives.
LogResult log_lift(const PointModPk& P, const BigInt& z_start, std::int64_t start,
                   const ExpMap& exp);

/// log_initial followed by log_lift; the identity maps to 0.
LogResult log_map(const PointModPk& P, const ExpMap& exp);
LogResult log_map(const PointModPk& P, const ShortWeierstrass& curve);

}  // namespace padiclift

#endif  // PADICLIFT_LOGMAP_HPP
