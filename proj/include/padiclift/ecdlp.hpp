#ifndef PADICLIFT_ECDLP_HPP
#define PADICLIFT_ECDLP_HPP

// Discrete logarithms on E(Q) by successive approximation through E(Z/p^k):
// with t the order of P mod p and hbar the residual logarithm mod p, the
// logarithms of tP and Q - hbar P in the kernel of reduction determine
// n = (h - hbar)/t modulo a growing power of p.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padiclift/config.hpp"
#include "padiclift/curve.hpp"

namespace padiclift {

struct AttackParams {
  ShortWeierstrass curve;
  ProjPointQ P;
  ProjPointQ Q;
  BigInt p;
  std::int64_t k_max = 40;
  std::int64_t stabilization_window = 2;
};

struct ResidualDlp {
  BigInt t;      ///< order of P mod p
  BigInt h_bar;  ///< least h >= 0 with Q = hP mod p
};

/// One row of the transcript. A logarithm that vanishes mod p^k is written as
/// p^k for tP (so c = k, l1 = 1) and as 0 with l2 = 0 for Q - hbar P.
struct AttackRow {
  std::int64_t k = 0;
  BigInt log_tP;
  std::int64_t c = 0;
  BigInt l1;
  BigInt log_QhP;
  std::int64_t d = 0;
  BigInt l2;
  std::int64_t n_precision = 0;  ///< n is known modulo p^n_precision
  BigInt n;
  BigInt h_candidate;
  bool increase_k = false;       ///< n undetermined at this k
};

struct AttackTranscript {
  BigInt p;
  BigInt t;
  BigInt h_bar;
  std::vector<AttackRow> rows;
  BigInt h;
  bool verified = false;
  std::int64_t stabilization_index = 0;  ///< k of the first row whose candidate verifies
  std::optional<std::int64_t> repeat_index;  ///< first k whose n repeats the previous row
  std::int64_t step_bound = 0;           ///< ceil(log_p h) + window
  bool within_step_bound = false;
};

/// kHypothesisViolated when t <= 2, kNotInSpan when Q mod p is not a multiple
/// of P mod p, kScaleExceeded beyond the enumeration ceiling.
ResidualDlp residual_dlp_fp(const ProjPointQ& P, const ProjPointQ& Q, const ShortWeierstrass& curve,
                            const BigInt& p,
                            std::int64_t ceiling = config::kFpEnumerationCeiling);

/// Points over Q that every row reduces: tP and Q - hbar P.
struct AttackPoints {
  ProjPointQ tP;
  ProjPointQ QhP;
};

AttackPoints attack_points(const AttackParams& params, const ResidualDlp& residual);

/// kInconsistent when Q - hbar P sits shallower in the filtration than tP.
AttackRow attack_step(std::int64_t k, const AttackParams& params, const ResidualDlp& residual,
                      const AttackPoints& points);
AttackRow attack_step(std::int64_t k, const AttackParams& params, const BigInt& t,
                      const BigInt& h_bar);

/// Rows k = 1, 2, ... until hP = Q holds exactly over Q; kNoConvergence after k_max.
AttackTranscript run_attack(const AttackParams& params,
                            std::int64_t ceiling = config::kFpEnumerationCeiling);

/// Whether hP = Q, screened modulo a few auxiliary primes before the exact check.
bool is_discrete_log(const BigInt& h, const ProjPointQ& P, const ProjPointQ& Q,
                     const ShortWeierstrass& curve);

struct GeneralizedReport {
  BigInt b;    ///< logarithm over Q
  BigInt ord;  ///< order of P mod q
  BigInt a;    ///< b mod ord
  AttackTranscript transcript;
  std::string lift_arrow;   ///< E(Q) -> E(F_q)
  std::string small_arrow;  ///< E(Q) -> E(F_p)
};

/// Solves Q = aP in E(F_q) from a known rational lift by attacking at the small
/// prime p. Without `ord`, q must be within the enumeration ceiling
/// (kOrderRequired otherwise).
GeneralizedReport generalized_demo(const ShortWeierstrass& curve, const ProjPointQ& P,
                                   const ProjPointQ& Q, const BigInt& q, const BigInt& p,
                                   std::optional<BigInt> ord = std::nullopt,
                                   std::int64_t k_max = 40,
                                   std::int64_t ceiling = config::kFpEnumerationCeiling);

}  // namespace padiclift

#endif  // PADICLIFT_ECDLP_HPP
