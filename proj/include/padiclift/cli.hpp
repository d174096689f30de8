#ifndef PADICLIFT_CLI_HPP
#define PADICLIFT_CLI_HPP

// One command-line job: the parsed request and its execution.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "padiclift/arith.hpp"
#include "padiclift/config.hpp"
#include "padiclift/error.hpp"

namespace padiclift::cli {

enum class Command { kAttack, kLog, kExp, kTable, kHecDemo, kWpCoeffs, kEnumerate };
enum class Format { kJson, kTsv };

struct JobSpec {
  Command command = Command::kAttack;
  std::optional<std::string> example;  ///< "paper" selects the built-in example inputs
  std::optional<std::string> curve_path;
  std::optional<std::string> P_path;
  std::optional<std::string> Q_path;
  std::optional<std::string> divisor_path;
  std::optional<BigInt> p;
  std::optional<std::int64_t> k;
  std::int64_t kmax = 40;
  std::optional<BigInt> h;  ///< attack: Q = hP without a Q file; hec-demo: last multiple scanned
  std::optional<BigInt> z;
  std::optional<BigInt> q;  ///< attack: solve over F_q from the rational lift
  std::optional<BigInt> ord;
  std::int64_t terms = 8;   ///< wp-coeffs: last coefficient index
  std::optional<std::string> out_path;
  std::optional<Format> format;
  std::int64_t fp_ceiling = config::kFpEnumerationCeiling;
  std::int64_t modpk_ceiling = config::kModPkEnumerationCeiling;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline int exit_code(ErrorCode code) { return static_cast<int>(code); }

/// Exit status legend for --help.
std::string exit_code_legend();

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command command);

/// kParameter for a missing or contradictory flag; runs before any arithmetic.
void validate(const JobSpec& job);

/// Runs the job, writing the artifact to job.out_path or `out` and diagnostics
/// to `err`. Returns the process exit status.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Reads the enumeration ceiling override; nullopt when unset, kParameter
/// when not a positive integer.
std::optional<std::int64_t> ceiling_override(const char* value);

}  // namespace padiclift::cli

#endif  // PADICLIFT_CLI_HPP
