#pragma once

// Odd-subsequence annihilator: given a homogeneous recurrence
// sum_i P_i(t, M) L^i for J(n), build the linear system whose solution
// annihilates n -> J(2n + 1), solve it by Cramer's rule, and check the
// structural identities relating it to the matrices X, N, A_j, B_j.

#include <optional>
#include <string>
#include <vector>

#include "ajcable/matrix.hpp"
#include "ajcable/ore.hpp"
#include "ajcable/ring.hpp"

namespace ajcable {

/// Whether matrix entries keep t symbolic or are read at t = -1.
enum class TMode { general, minus_one };

/// Coefficients P_0..P_d of a recurrence, each in (t, M) only.
class CoeffFamily {
 public:
  /// Throws InvalidFamily when P_0 or P_d vanishes or an entry involves L.
  explicit CoeffFamily(std::vector<Poly> coeffs);
  static CoeffFamily from_poly(const Poly& p) { return CoeffFamily(l_coefficients(p)); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }

  /// P_i(t, t^r M^2), read at t = -1 in minus_one mode; zero outside 0..d.
  Poly shifted(int i, int r, TMode mode = TMode::general) const;

 private:
  std::vector<Poly> coeffs_;
};

/// (2d+1) x (2d+1) system matrix. Column j <= d holds P(m - j, 2j + 2) in
/// row m; column d + 1 + k holds -1 in row 2k.
PolyMatrix build_D(const CoeffFamily& f, TMode mode = TMode::general);

struct XN {
  PolyMatrix X;
  PolyMatrix N;
};

/// X keeps rows 1, 3, ..., 2d-1 and 2d (0-based) of D's first d+1 columns;
/// N is its upper-left (d-1) x (d-1) block.
XN derive_X_N(const PolyMatrix& D, int d);

/// A_i, 1 <= i <= d+1: first d+1 columns of D on 0-based row 2i-2 plus the
/// odd rows 1, 3, ..., 2d-1, in increasing row order.
PolyMatrix build_A(const CoeffFamily& f, int i, TMode mode = TMode::general);

/// B_j, 1 <= j <= d+1: X without its last row and its j-th column.
PolyMatrix build_B(const CoeffFamily& f, int j, TMode mode = TMode::general);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AnnihilatorResult {
  int d = 0;
  TMode mode = TMode::general;
  /// Normalized operator: sum (-1)^i Q_i L^i with content and monomial removed.
  OreOp beta;
  /// Q_i = (-1)^i times the Cramer solution, so beta's coefficients carry no extra sign.
  std::vector<Poly> Q;
  std::vector<Poly> c;
  Poly detD;
  Poly detN;
  /// det N at t = -1; equals detN in minus_one mode.
  Poly detN_minus1;
  Integer beta_content;
  Unit beta_unit;
  /// Set when det N(-1, M) vanishes: the odd subsequence gives no usable
  /// obstruction even though the system itself is solvable.
  bool detN_vanishes_at_minus1 = false;
  std::vector<IdentityCheck> identities;

  bool all_identities_pass() const;
};

/// Solves D y = det(D) e_last exactly. Throws SingularSystem when det(D) = 0
/// and InternalInvariant when the homogeneous residual does not vanish.
AnnihilatorResult solve_odd_annihilator(const CoeffFamily& f, TMode mode = TMode::general);

struct CofactorDiagnostics {
  /// Unit u with det B_{i+1} = u * P_i(-1, M^2) * det N for every i.
  Unit minor_unit;
  /// Unit w with (-1)^{i+1} Q_i = w * S_i * det N, S_i = sum_{j+k=2i} (-1)^k P_k P_j.
  Unit square_unit;
  std::vector<IdentityCheck> checks;
};

/// Both identities at t = -1. Throws IdentityFailure ("minor_identity" or
/// "square_identity") at the first index where no single global unit
/// reconciles the two sides.
CofactorDiagnostics check_cofactor_identities(const CoeffFamily& f, const AnnihilatorResult& r);

/// det N(-1, M) built from the L-coefficients of a full A-polynomial with
/// M -> M^2. Throws OddMPower when A has an odd power of M.
Poly detN_from_apoly(const Poly& A);

/// sum_{j+k=2i} (-1)^k P_k P_j over a coefficient list.
Poly alternating_square_coefficient(const std::vector<Poly>& P, int i);

}  // namespace ajcable
