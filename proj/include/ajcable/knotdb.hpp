#pragma once

// Knot records: a line-oriented `key = value` file format and a strict
// grammar for A-polynomials in M and L.
//
// Polynomial grammar (whitespace ignored):
//   expression := [sign] term (('+' | '-') term)*
//   term       := [integer] ['*'] factor ('*'? factor)*  |  integer
//   factor     := ('M' | 'L') ['^' signed-integer]
// L-exponents must be non-negative.

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ajcable/ring.hpp"

namespace ajcable {

/// Throws SyntaxError (offset into `text`) or NegativeLExponent.
Poly parse_polynomial(std::string_view text);

struct KnotRecord {
  std::string name;
  int p = 0;
  int m = 0;
  int eta_plus = 0;
  int eta_minus = 0;
  /// A' = A / (L - 1).
  Poly aprime;
  bool attest_irreducible_C = false;
  bool attest_AJ = false;
  /// Crossing number of the reduced alternating diagram, when supplied.
  std::optional<int> crossings;
  /// Another record in the same file carries the same (p, m).
  bool suspect_duplicate_notation = false;

  /// (L - 1) * A'.
  Poly full_apolynomial() const;
};

class KnotDatabase {
 public:
  /// Throws DuplicateName.
  void add(KnotRecord r);

  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  const KnotRecord* find(const std::string& name) const;
  bool empty() const noexcept { return records_.empty(); }
  std::size_t size() const noexcept { return records_.size(); }

 private:
  std::vector<KnotRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Records are separated by blank lines; `#` starts a comment. Throws
/// SyntaxError, DuplicateName, InvariantViolation.
KnotDatabase parse_db(std::string_view text);

/// Reads and parses a file; I/O failures raise std::runtime_error.
KnotDatabase load_db(const std::string& path);

struct RecordCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// deg_L(A') = (p - 1) / 2, even M-powers, and the crossing count when given.
std::vector<RecordCheck> validate_record(const KnotRecord& r);

}  // namespace ajcable
