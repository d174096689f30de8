#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "padiclift/cli.hpp"

namespace {

using padiclift::cli::Command;
using padiclift::cli::Format;
using padiclift::cli::JobSpec;

// Flags shared by every subcommand; integers are read as text so that they
// may exceed 64 bits.
struct RawFlags {
  std::string example, curve, P, Q, divisor, out, format, p, h, z, q, ord;
  std::int64_t k = 0;
  std::int64_t kmax = 40;
  std::int64_t terms = 8;
};

void add_flags(CLI::App& sub, RawFlags& raw) {
  sub.add_option("--example", raw.example, "built-in inputs: paper");
  sub.add_option("--curve", raw.curve, "curve JSON file");
  sub.add_option("--P", raw.P, "base point JSON file");
  sub.add_option("--Q", raw.Q, "target point JSON file");
  sub.add_option("--divisor", raw.divisor, "Mumford divisor JSON file (hec-demo)");
  sub.add_option("-p", raw.p, "prime");
  sub.add_option("-k", raw.k, "precision exponent");
  sub.add_option("--kmax", raw.kmax, "last precision the attack tries")->capture_default_str();
  sub.add_option("--h", raw.h, "attack: Q = hP; hec-demo: last multiple scanned");
  sub.add_option("--z", raw.z, "exp argument, divisible by p");
  sub.add_option("--q", raw.q, "attack: large prime of the generalized setting");
  sub.add_option("--ord", raw.ord, "attack: order of P mod q, when known");
  sub.add_option("--terms", raw.terms, "wp-coeffs: last coefficient index")->capture_default_str();
  sub.add_option("--out", raw.out, "write the artifact here instead of stdout");
  sub.add_option("--format", raw.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
}

padiclift::BigInt big(const std::string& text, const char* flag) {
  padiclift::BigInt n;
  if (n.set_str(text, 10) != 0) throw CLI::ValidationError(flag, "not an integer: " + text);
  return n;
}

JobSpec to_job(Command command, const CLI::App& sub, const RawFlags& raw) {
  JobSpec job;
  job.command = command;
  auto given = [&sub](const char* name) { return sub.count(name) > 0; };
  if (given("--example")) job.example = raw.example;
  if (given("--curve")) job.curve_path = raw.curve;
  if (given("--P")) job.P_path = raw.P;
  if (given("--Q")) job.Q_path = raw.Q;
  if (given("--divisor")) job.divisor_path = raw.divisor;
  if (given("--out")) job.out_path = raw.out;
  if (given("--format")) job.format = raw.format == "tsv" ? Format::kTsv : Format::kJson;
  if (given("-p")) job.p = big(raw.p, "-p");
  if (given("-k")) job.k = raw.k;
  if (given("--h")) job.h = big(raw.h, "--h");
  if (given("--z")) job.z = big(raw.z, "--z");
  if (given("--q")) job.q = big(raw.q, "--q");
  if (given("--ord")) job.ord = big(raw.ord, "--ord");
  job.kmax = raw.kmax;
  job.terms = raw.terms;
  return job;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic lifting attack on the elliptic curve discrete logarithm"};
  app.footer(padiclift::cli::exit_code_legend());
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h

  const std::map<Command, const char*> descriptions = {
      {Command::kAttack, "recover h with Q = hP by lifting to Z/p^k"},
      {Command::kLog, "logarithm of a point of the formal group mod p^k"},
      {Command::kExp, "exponential of z mod p^k"},
      {Command::kTable, "attack transcript as a TSV table"},
      {Command::kHecDemo, "hyperelliptic reduction counterexample"},
      {Command::kWpCoeffs, "Laurent coefficients of the Weierstrass function"},
      {Command::kEnumerate, "all points of E(Z/p^k)"},
  };
  RawFlags raw;
  std::map<Command, CLI::App*> subs;
  for (const auto& [command, description] : descriptions) {
    CLI::App* sub = app.add_subcommand(padiclift::cli::command_name(command), description);
    add_flags(*sub, raw);
    subs[command] = sub;
  }

  JobSpec job;
  try {
    app.parse(argc, argv);
    for (const auto& [command, sub] : subs) {
      if (sub->parsed()) job = to_job(command, *sub, raw);
    }
    const auto override = padiclift::cli::ceiling_override(
        std::getenv(padiclift::config::kOracleCeilingEnv));
    if (override) {
      job.fp_ceiling = *override;
      job.modpk_ceiling = *override;
    }
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : padiclift::cli::kExitUsage;
  } catch (const padiclift::Error& e) {
    std::cerr << "error (" << padiclift::error_code_name(e.code()) << "): " << e.what() << "\n";
    return padiclift::cli::kExitUsage;
  }
  return padiclift::cli::run(job, std::cout, std::cerr);
}
