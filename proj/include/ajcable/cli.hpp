#pragma once

// Command-line driver. Subcommands: verify, cable-apoly, annihilator, range,
// selftest. Exit codes: 0 all verdicts positive, 1 some check failed or was
// inconclusive, 2 usage or input error, 3 singular system or internal
// invariant violation.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ajcable/knotdb.hpp"

namespace ajcable::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

enum class Status { pass, fail, attested, inconclusive };
const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::inconclusive;
  std::string detail;
};

struct KnotReport {
  std::string name;
  int p = 0;
  int m = 0;
  int eta_plus = 0;
  int eta_minus = 0;
  bool suspect_duplicate_notation = false;
  std::vector<Check> checks;
  /// M-degree of det N(-1, M); -1 when it could not be computed or vanishes.
  int detN_degree = -1;
  std::string admissible_r;
  std::string admissible_bounds;
  /// Rendered A-polynomial of the (r, 2)-cable, when requested.
  std::string cable_apolynomial;

  /// Every check is pass or attested.
  bool verified() const;
};

/// Runs every theorem-hypothesis check on one record. `cable_r` = 0 skips
/// the cable A-polynomial. Throws InternalInvariant on broken internals.
KnotReport verify_record(const KnotRecord& r, int cable_r = 0);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Resultant oracle, determinant cross-check, d = 3 layout match and the
/// figure-eight end-to-end run.
std::vector<SuiteResult> run_selftest();

}  // namespace ajcable::cli
