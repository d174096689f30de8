#include "padiclift/cli.hpp"

#include <ostream>
#include <sstream>

#include "padiclift/io.hpp"
#include "padiclift/logmap.hpp"
#include "padiclift/wpseries.hpp"

namespace padiclift::cli {

namespace {

using io::Json;

struct Check {
  std::string name;
  std::string expected;  ///< empty when the value is only reported
  std::string observed;
  bool pass() const { return expected.empty() || expected == observed; }
};

const char* const kCommandNames[] = {"attack",   "log",       "exp",      "table",
                                     "hec-demo", "wp-coeffs", "enumerate"};

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::kParameter, message); }

io::CurveInput paper_curve() {
  return {ShortWeierstrass(Rational(-1), Rational::parse("1/4")), std::nullopt};
}

ProjPointQ paper_point() { return ProjPointQ::from_affine(2, Rational::parse("5/2")); }

io::CurveInput load_curve(const JobSpec& job) {
  if (job.curve_path) return io::curve_from_json(io::read_json_file(*job.curve_path));
  return paper_curve();
}

ProjPointQ load_point(const std::string& path, const io::CurveInput& curve) {
  return io::point_from_json(io::read_json_file(path), curve);
}

bool uses_example(const JobSpec& job) { return job.example.has_value(); }

Format format_or(const JobSpec& job, Format fallback) { return job.format.value_or(fallback); }

std::string attack_artifact(const JobSpec& job) {
  io::CurveInput curve = load_curve(job);
  ProjPointQ P = paper_point();
  BigInt p = 3;
  std::optional<ProjPointQ> Q;
  if (!uses_example(job)) {
    P = load_point(*job.P_path, curve);
    p = *job.p;
    if (job.Q_path) Q = load_point(*job.Q_path, curve);
  }
  if (!Q) Q = ec_scalar_mul(uses_example(job) ? BigInt(31) : *job.h, P, curve.curve);
  if (job.command == Command::kTable) {
    return io::table_tsv(run_attack({curve.curve, P, *Q, p, job.kmax}, job.fp_ceiling));
  }
  if (job.q) {
    const GeneralizedReport rep =
        generalized_demo(curve.curve, P, *Q, *job.q, p, job.ord, job.kmax, job.fp_ceiling);
    if (format_or(job, Format::kJson) == Format::kTsv) return io::table_tsv(rep.transcript);
    return io::dump(io::to_json(rep));
  }
  const AttackTranscript tr = run_attack({curve.curve, P, *Q, p, job.kmax}, job.fp_ceiling);
  if (format_or(job, Format::kJson) == Format::kTsv) return io::table_tsv(tr);
  return io::dump(io::to_json(tr));
}

std::string log_artifact(const JobSpec& job) {
  const io::CurveInput curve = load_curve(job);
  const ProjPointQ P = load_point(*job.P_path, curve);
  const ExpMap exp(curve.curve, *job.p, *job.k);
  const LogResult r = log_map(qmod_k(P, *job.p, *job.k), exp);
  if (format_or(job, Format::kJson) == Format::kTsv) return r.z.get_str() + "\n";
  return io::dump(Json{{"p", job.p->get_str()},
                       {"k", std::to_string(*job.k)},
                       {"z", r.z.get_str()},
                       {"certified_precision", std::to_string(r.certified_precision)},
                       {"verified", r.verified}});
}

std::string exp_artifact(const JobSpec& job) {
  const io::CurveInput curve = load_curve(job);
  const PointModPk P = exp_map(*job.z, curve.curve, *job.p, *job.k);
  const PointModPk c = P.canonical();
  if (format_or(job, Format::kJson) == Format::kTsv) {
    return c.Z().get_str() + "\t" + c.X().get_str() + "\t" + c.Y().get_str() + "\n";
  }
  return io::dump(Json{{"z", job.z->get_str()},
                       {"point", io::to_json(P)},
                       {"on_curve", P.satisfies(curve.curve)}});
}

std::string wp_artifact(const JobSpec& job) {
  const io::CurveInput curve = load_curve(job);
  const WpCoefficients coeffs = wp_coeffs(curve.curve.a(), curve.curve.b(), static_cast<int>(job.terms));
  std::optional<int> cutoff;
  if (job.p) cutoff = series_cutoff(*job.p, *job.k, 1, coeffs);
  if (format_or(job, Format::kJson) == Format::kTsv) {
    std::ostringstream out;
    out << "l\tc_l\n";
    for (int l = 2; l <= coeffs.last_index(); ++l) out << l << '\t' << coeffs[l] << '\n';
    return out.str();
  }
  Json list = Json::array();
  for (int l = 2; l <= coeffs.last_index(); ++l) {
    list.push_back(Json{{"l", std::to_string(l)}, {"c", coeffs[l].to_string()}});
  }
  Json out{{"curve", io::to_json(curve.curve)}, {"coefficients", list}};
  if (cutoff) {
    out["p"] = job.p->get_str();
    out["k"] = std::to_string(*job.k);
    out["cutoff"] = std::to_string(*cutoff);
  }
  return io::dump(out);
}

std::string enumerate_artifact(const JobSpec& job) {
  const io::CurveInput curve = load_curve(job);
  const auto points = enumerate_points_mod_pk(curve.curve, *job.p, *job.k, job.modpk_ceiling);
  if (format_or(job, Format::kJson) == Format::kTsv) {
    std::ostringstream out;
    out << "Z\tX\tY\n";
    for (const PointModPk& P : points) out << P.Z() << '\t' << P.X() << '\t' << P.Y() << '\n';
    return out.str();
  }
  Json list = Json::array();
  for (const PointModPk& P : points) {
    list.push_back(Json::array({P.Z().get_str(), P.X().get_str(), P.Y().get_str()}));
  }
  return io::dump(Json{{"curve", io::to_json(curve.curve)},
                       {"p", job.p->get_str()},
                       {"k", std::to_string(*job.k)},
                       {"count", std::to_string(points.size())},
                       {"points", list}});
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Check> hec_checks(const JobSpec& job) {
  const bool example = !job.curve_path;
  const QHyperelliptic C =
      example ? example_hyperelliptic_curve()
              : io::hyperelliptic_from_json(io::read_json_file(*job.curve_path));
  const QDivisor D =
      example ? example_divisor() : io::divisor_from_json(io::read_json_file(*job.divisor_path));
  const BigInt p = job.p.value_or(BigInt(11));
  const std::int64_t h_max = job.h ? to_int64(*job.h) : 64;
  auto expect = [example](const char* value) { return example ? std::string(value) : std::string(); };

  std::vector<Check> checks;
  const bool good = hec_good_reduction(complete_square(C), p);
  checks.push_back({"good reduction at " + p.get_str(), expect("yes"), yes_no(good)});
  if (!good) return checks;
  const ModHyperelliptic Cp = curve_reduce_mod(C, p);
  const ModDivisor Dp = divisor_reduce_mod(D, p, 1);
  checks.push_back({"D mod p", expect("(x + 7, 2)"), Dp.to_string()});
  checks.push_back({"order of D mod p", expect("16"),
                    std::to_string(divisor_order(Dp, Cp, config::kDivisorOrderCeiling))});

  const WitnessReport w = noncommutativity_witness(C, D, p, h_max);
  checks.push_back({"smallest h with (hD) mod p != h (D mod p)", expect("8"),
                    w.h_star ? std::to_string(*w.h_star) : "none"});
  if (w.h_star) {
    checks.push_back({"(h*D) mod p", expect("(x + 10, 4*x + 7)"), w.reduced_multiple.to_string()});
    checks.push_back({"(h*D) mod p is a valid divisor", expect("no"),
                      yes_no(w.reduced_multiple_report.valid())});
    checks.push_back({"(h*D) mod p satisfies deg v < deg u", expect("no"),
                      yes_no(w.reduced_multiple_report.degree_condition)});
    checks.push_back({"h* (D mod p)", expect("(x + 10, 0)"), w.multiple_of_reduced.to_string()});
  }
  if (example) {
    const ModDivisor r16 = divisor_reduce_mod(cantor_scalar_mul(16, D, C), p, 1);
    const MumfordReport rep = mumford_valid(r16, Cp);
    checks.push_back({"(16D) mod p", "(x^2, 8*x)", r16.to_string()});
    checks.push_back({"(16D) mod p satisfies gcd(u, u', v) = 1", "no", yes_no(rep.gcd_condition)});
    checks.push_back(
        {"16 (D mod p)", "(1, 0)", cantor_scalar_mul(16, Dp, Cp).to_string()});
  }
  return checks;
}

std::string hec_artifact(const JobSpec& job, bool& all_pass) {
  const std::vector<Check> checks = hec_checks(job);
  all_pass = true;
  for (const Check& c : checks) all_pass = all_pass && c.pass();
  auto status = [](const Check& c) {
    if (c.expected.empty()) return "info";
    return c.pass() ? "pass" : "FAIL";
  };
  if (format_or(job, Format::kTsv) == Format::kTsv) {
    std::ostringstream out;
    out << "check\texpected\tobserved\tstatus\n";
    for (const Check& c : checks) {
      out << c.name << '\t' << (c.expected.empty() ? "-" : c.expected) << '\t' << c.observed << '\t'
          << status(c) << '\n';
    }
    return out.str();
  }
  Json list = Json::array();
  for (const Check& c : checks) {
    list.push_back(Json{{"check", c.name},
                        {"expected", c.expected.empty() ? Json(nullptr) : Json(c.expected)},
                        {"observed", c.observed},
                        {"status", status(c)}});
  }
  return io::dump(Json{{"checks", list}, {"pass", all_pass}});
}

}  // namespace

std::string exit_code_legend() {
  std::ostringstream out;
  out << "Exit status:\n"
      << "  " << kExitOk << "  success\n"
      << "  " << kExitCheckFailed << "  a reproduction check failed\n"
      << "  " << kExitUsage << "  command-line usage error\n";
  for (int code = exit_code(ErrorCode::kParameter); code <= exit_code(ErrorCode::kIo); ++code) {
    out << "  " << code << " " << error_code_name(static_cast<ErrorCode>(code)) << "\n";
  }
  return out.str();
}

std::optional<Command> parse_command(const std::string& name) {
  for (int i = 0; i < 7; ++i) {
    if (name == kCommandNames[i]) return static_cast<Command>(i);
  }
  return std::nullopt;
}

std::string command_name(Command command) { return kCommandNames[static_cast<int>(command)]; }

void validate(const JobSpec& job) {
  const std::string cmd = command_name(job.command);
  if (job.example && *job.example != "paper") usage("unknown example '" + *job.example + "'");
  if (job.kmax < 1) usage("--kmax must be positive");
  if (job.k && *job.k < 1) usage("-k must be positive");
  if (job.p && *job.p < 2) usage("-p must be a prime");
  if (job.fp_ceiling < 1 || job.modpk_ceiling < 1) usage("ceilings must be positive");
  if (job.ord && !job.q) usage("--ord needs --q");
  auto need = [&cmd](bool present, const char* flag) {
    if (!present) usage(cmd + " needs " + flag);
  };
  const bool example = job.example.has_value();
  switch (job.command) {
    case Command::kAttack:
    case Command::kTable:
      if (example) {
        if (job.curve_path || job.P_path || job.Q_path) usage("--example replaces the input files");
        break;
      }
      need(job.curve_path.has_value(), "--curve");
      need(job.P_path.has_value(), "--P");
      need(job.Q_path.has_value() || job.h.has_value(), "--Q or --h");
      need(job.p.has_value(), "-p");
      if (job.Q_path && job.h) usage("--Q and --h are exclusive");
      if (job.command == Command::kTable && job.q) usage("table does not take --q");
      break;
    case Command::kLog:
      need(job.curve_path.has_value() || example, "--curve");
      need(job.P_path.has_value(), "--P");
      need(job.p.has_value(), "-p");
      need(job.k.has_value(), "-k");
      break;
    case Command::kExp:
      need(job.curve_path.has_value() || example, "--curve");
      need(job.p.has_value(), "-p");
      need(job.k.has_value(), "-k");
      need(job.z.has_value(), "--z");
      break;
    case Command::kHecDemo:
      if (job.curve_path.has_value() != job.divisor_path.has_value()) {
        usage("hec-demo takes both --curve and --divisor, or neither");
      }
      if (job.h && *job.h < 1) usage("--h must be positive");
      break;
    case Command::kWpCoeffs:
      need(job.curve_path.has_value() || example, "--curve");
      if (job.terms < 3) usage("--terms must be at least 3");
      if (job.p.has_value() != job.k.has_value()) usage("wp-coeffs takes -p and -k together");
      break;
    case Command::kEnumerate:
      need(job.curve_path.has_value() || example, "--curve");
      need(job.p.has_value(), "-p");
      need(job.k.has_value(), "-k");
      break;
  }
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate(job);
    std::string artifact;
    bool all_pass = true;
    switch (job.command) {
      case Command::kAttack:
      case Command::kTable: artifact = attack_artifact(job); break;
      case Command::kLog: artifact = log_artifact(job); break;
      case Command::kExp: artifact = exp_artifact(job); break;
      case Command::kHecDemo: artifact = hec_artifact(job, all_pass); break;
      case Command::kWpCoeffs: artifact = wp_artifact(job); break;
      case Command::kEnumerate: artifact = enumerate_artifact(job); break;
    }
    if (job.out_path) {
      io::write_text_file(*job.out_path, artifact);
    } else {
      out << artifact;
    }
    if (!all_pass) {
      err << "error: a reproduction check failed\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  }
}

std::optional<std::int64_t> ceiling_override(const char* value) {
  if (value == nullptr || *value == '\0') return std::nullopt;
  const Rational q = Rational::parse(value);
  if (!q.is_integer() || q.num() < 1 || !q.num().fits_slong_p()) {
    throw Error(ErrorCode::kParameter,
                std::string(config::kOracleCeilingEnv) + " must be a positive integer");
  }
  return q.num().get_si();
}

}  // namespace padiclift::cli
