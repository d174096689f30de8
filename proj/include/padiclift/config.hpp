#ifndef PADICLIFT_CONFIG_HPP
#define PADICLIFT_CONFIG_HPP

#include <cstdint>

namespace padiclift::config {

// Below this modulus sqrt_all_mod scans every residue; above it, Hensel lifting.
inline constexpr std::int64_t kSqrtScanCeiling = 1'000'000;

// Largest p for which E(F_p) is counted by enumeration.
inline constexpr std::int64_t kFpEnumerationCeiling = 10'000;

// Largest p^k for the brute-force enumeration of E(Z/p^k).
inline constexpr std::int64_t kModPkEnumerationCeiling = 100'000;

// Default trial bound for divisor orders over F_p.
inline constexpr std::int64_t kDivisorOrderCeiling = 100'000;

// Environment variable that scales both enumeration ceilings (CLI only).
inline constexpr const char* kOracleCeilingEnv = "PADICLIFT_ORACLE_CEILING";

}  // namespace padiclift::config

#endif  // PADICLIFT_CONFIG_HPP
