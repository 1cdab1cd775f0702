#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace capgeom {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

struct VerifierLimits {
  std::uint64_t brute_force = 20'000'000;  // |PGammaL| gate for stabilizer enumeration
  std::size_t search_points = 121;         // complete_cap_search space-size gate
};

/// Defaults, overridden by CAPGEOM_BRUTE_FORCE_LIMIT / CAPGEOM_SEARCH_LIMIT.
VerifierLimits limits_from_env();

/// One computational claim. `pass` iff observed == expected.
struct CaseCheck {
  std::string id;
  std::string location;  // which claim this is
  std::string inputs;
  std::string expected;
  std::string basis;     // "cited", "derived" or "trivial"
  std::string observed;
  std::string note;
  bool pass = false;
};

struct VerificationReport {
  std::string version;
  VerifierLimits limits;
  std::vector<CaseCheck> checks;  // ascending id
  std::size_t passed = 0, failed = 0;
};

/// Runs every check group. Groups run on up to `workers` threads; the report
/// does not depend on `workers`. Throws capgeom::Error when a limit is too low
/// for a required check.
VerificationReport verify_paper(const VerifierLimits& limits, unsigned workers = 1);

/// Ids that every report must contain.
const std::vector<std::string>& required_check_ids();

/// Sorted-key JSON, two-space indent, trailing newline.
std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace capgeom
