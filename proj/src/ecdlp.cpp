#include "padiclift/ecdlp.hpp"

#include "padiclift/error.hpp"
#include "padiclift/logmap.hpp"

namespace padiclift {

namespace {

// Splits a logarithm z mod p^k into p^e * unit; zero gives e = k.
std::pair<std::int64_t, BigInt> split(const BigInt& z, const BigInt& p, std::int64_t k) {
  if (z == 0) return {k, BigInt(0)};
  BigInt unit;
  const auto e = static_cast<std::int64_t>(mpz_remove(unit.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
  return {e, unit};
}

// ceil(log_p h) for h >= 1, by integer powers.
std::int64_t ceil_log(const BigInt& h, const BigInt& p) {
  std::int64_t e = 0;
  BigInt power = 1;
  while (power < h) {
    power *= p;
    ++e;
  }
  return e;
}

std::string describe(const PointModPk& P) {
  const FpPoint f = to_fp_point(P);
  return f.to_string();
}

}  // namespace

ResidualDlp residual_dlp_fp(const ProjPointQ& P, const ProjPointQ& Q, const ShortWeierstrass& curve,
                            const BigInt& p, std::int64_t ceiling) {
  require_odd_prime(p);
  if (p > ceiling) {
    throw Error(ErrorCode::kScaleExceeded, "residual logarithm mod " + p.get_str() +
                                               " exceeds the enumeration ceiling " +
                                               std::to_string(ceiling));
  }
  const FpCurve c(curve, p);
  const FpPoint Pp = to_fp_point(qmod_k(P, p, 1));
  const FpPoint Qp = to_fp_point(qmod_k(Q, p, 1));
  const BigInt t = fp_point_order(Pp, c);
  if (t <= 2) {
    throw Error(ErrorCode::kHypothesisViolated,
                "P mod " + p.get_str() + " has order " + t.get_str() + "; the attack needs t > 2");
  }
  FpPoint acc;
  for (BigInt h = 0; h < t; ++h) {
    if (acc == Qp) return {t, h};
    acc = fp_add(acc, Pp, c);
  }
  throw Error(ErrorCode::kNotInSpan,
              "Q mod " + p.get_str() + " is not a multiple of P mod " + p.get_str());
}

AttackPoints attack_points(const AttackParams& params, const ResidualDlp& residual) {
  return {ec_scalar_mul(residual.t, params.P, params.curve),
          ec_sub(params.Q, ec_scalar_mul(residual.h_bar, params.P, params.curve), params.curve)};
}

AttackRow attack_step(std::int64_t k, const AttackParams& params, const ResidualDlp& residual,
                      const AttackPoints& points) {
  const BigInt& p = params.p;
  if (k < 1) throw Error(ErrorCode::kParameter, "k must be positive");
  const ExpMap exp(params.curve, p, k);
  const BigInt L1 = log_map(qmod_k(points.tP, p, k), exp).z;
  const BigInt L2 = log_map(qmod_k(points.QhP, p, k), exp).z;

  AttackRow row;
  row.k = k;
  if (L1 == 0) {
    row.log_tP = exp.modulus();
    row.c = k;
    row.l1 = 1;
  } else {
    row.log_tP = L1;
    std::tie(row.c, row.l1) = split(L1, p, k);
  }
  row.log_QhP = L2;
  std::tie(row.d, row.l2) = split(L2, p, k);

  row.n_precision = k - row.c;
  if (row.n_precision <= 0) {
    row.n = 0;
    row.increase_k = true;
  } else if (row.l2 == 0) {
    row.n = 0;
  } else if (row.d < row.c) {
    throw Error(ErrorCode::kInconsistent,
                "log(Q - hbar P) has valuation " + std::to_string(row.d) + " below log(tP)'s " +
                    std::to_string(row.c) + " at k = " + std::to_string(k) +
                    "; Q is not in the span of P");
  } else {
    const BigInt m = ipow(p, row.n_precision);
    row.n = mod_floor(ipow(p, row.d - row.c) * row.l2 * inverse_mod(row.l1, m), m);
  }
  row.h_candidate = residual.h_bar + row.n * residual.t;
  return row;
}

AttackRow attack_step(std::int64_t k, const AttackParams& params, const BigInt& t,
                      const BigInt& h_bar) {
  const ResidualDlp residual{t, h_bar};
  return attack_step(k, params, residual, attack_points(params, residual));
}

bool is_discrete_log(const BigInt& h, const ProjPointQ& P, const ProjPointQ& Q,
                     const ShortWeierstrass& curve) {
  int screened = 0;
  for (BigInt ell = 1000003; screened < 3; mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t())) {
    if (!good_reduction(curve, ell)) continue;
    const FpCurve c(curve, ell);
    const FpPoint lhs = fp_scalar_mul(h, to_fp_point(qmod_k(P, ell, 1)), c);
    if (!(lhs == to_fp_point(qmod_k(Q, ell, 1)))) return false;
    ++screened;
  }
  return ec_scalar_mul_equals(h, P, Q, curve);
}

AttackTranscript run_attack(const AttackParams& params, std::int64_t ceiling) {
  require_odd_prime(params.p);
  if (!on_curve(params.curve, params.P) || !on_curve(params.curve, params.Q)) {
    throw Error(ErrorCode::kOffCurve, "P and Q must lie on " + params.curve.to_string());
  }
  if (!good_reduction(params.curve, params.p)) {
    throw Error(ErrorCode::kBadReduction,
                params.curve.to_string() + " has bad reduction at " + params.p.get_str());
  }
  const ResidualDlp residual = residual_dlp_fp(params.P, params.Q, params.curve, params.p, ceiling);
  const AttackPoints points = attack_points(params, residual);

  AttackTranscript tr;
  tr.p = params.p;
  tr.t = residual.t;
  tr.h_bar = residual.h_bar;
  std::optional<BigInt> rejected;
  for (std::int64_t k = 1; k <= params.k_max; ++k) {
    AttackRow row = attack_step(k, params, residual, points);
    if (!tr.repeat_index && !row.increase_k && !tr.rows.empty() && !tr.rows.back().increase_k &&
        tr.rows.back().n == row.n) {
      tr.repeat_index = k;
    }
    tr.rows.push_back(row);
    if (row.increase_k || (rejected && *rejected == row.h_candidate)) continue;
    if (is_discrete_log(row.h_candidate, params.P, params.Q, params.curve)) {
      tr.h = row.h_candidate;
      tr.verified = true;
      tr.stabilization_index = k;
      tr.step_bound = (tr.h > 0 ? ceil_log(tr.h, params.p) : 0) + params.stabilization_window;
      tr.within_step_bound = tr.stabilization_index <= tr.step_bound;
      return tr;
    }
    rejected = row.h_candidate;
  }
  throw Error(ErrorCode::kNoConvergence,
              "no verified logarithm up to k = " + std::to_string(params.k_max));
}

GeneralizedReport generalized_demo(const ShortWeierstrass& curve, const ProjPointQ& P,
                                   const ProjPointQ& Q, const BigInt& q, const BigInt& p,
                                   std::optional<BigInt> ord, std::int64_t k_max,
                                   std::int64_t ceiling) {
  require_odd_prime(q);
  require_odd_prime(p);
  for (const BigInt& prime : {q, p}) {
    if (!good_reduction(curve, prime)) {
      throw Error(ErrorCode::kBadReduction,
                  curve.to_string() + " has bad reduction at " + prime.get_str());
    }
  }
  const FpCurve cq(curve, q);
  const FpPoint Pq = to_fp_point(qmod_k(P, q, 1));
  const FpPoint Qq = to_fp_point(qmod_k(Q, q, 1));
  if (!ord) {
    if (q > ceiling) {
      throw Error(ErrorCode::kOrderRequired,
                  "the order of P mod " + q.get_str() +
                      " is beyond enumeration; supply it explicitly");
    }
    ord = fp_point_order(Pq, cq);
  } else if (!fp_scalar_mul(*ord, Pq, cq).infinity) {
    throw Error(ErrorCode::kParameter, "supplied order does not annihilate P mod " + q.get_str());
  }

  GeneralizedReport report;
  report.transcript = run_attack(AttackParams{curve, P, Q, p, k_max, 2}, ceiling);
  report.b = report.transcript.h;
  report.ord = *ord;
  report.a = mod_floor(report.b, report.ord);
  if (!(fp_scalar_mul(report.a, Pq, cq) == Qq)) {
    throw Error(ErrorCode::kInconsistent, "reduced logarithm fails to map P to Q mod q");
  }
  report.lift_arrow = "E(Q) -> E(F_" + q.get_str() + "): P -> " + describe(qmod_k(P, q, 1)) +
                      ", Q -> " + describe(qmod_k(Q, q, 1)) + ", a = " + report.a.get_str() +
                      " mod " + report.ord.get_str();
  report.small_arrow = "E(Q) -> E(F_" + p.get_str() + "): P -> " + describe(qmod_k(P, p, 1)) +
                       ", Q -> " + describe(qmod_k(Q, p, 1)) + ", b = " + report.b.get_str();
  return report;
}

}  // namespace padiclift
