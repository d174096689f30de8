#ifndef PADICLIFT_ERROR_HPP
#define PADICLIFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace padiclift {

/// Failure categories. Each one maps to a distinct process exit status in the CLI.
enum class ErrorCode : int {
  kParameter = 10,
  kParse = 11,
  kNonIntegral = 12,
  kDivisionByZero = 13,
  kPrecisionExhausted = 14,
  kNotAField = 15,
  kSingularCurve = 16,
  kOffCurve = 17,
  kBadReduction = 18,
  kScaleExceeded = 19,
  kNotInImage = 20,
  kHypothesisViolated = 21,
  kNotInSpan = 22,
  kInconsistent = 23,
  kNoConvergence = 24,
  kOrderRequired = 25,
  kCutoffNotCertified = 26,
  kIo = 27,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_status() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

}  // namespace padiclift

#endif  // PADICLIFT_ERROR_HPP
