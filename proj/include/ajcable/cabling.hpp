#pragma once

// Resultants, the (r, 2)-cable formula for A-polynomials, the admissible
// window for r, and the rational-level checks on A'.

#include <string>
#include <vector>

#include "ajcable/ore.hpp"
#include "ajcable/ring.hpp"

namespace ajcable {

/// Resultant in an implicit variable x, given ascending coefficient lists
/// f = sum f[i] x^i and g = sum g[i] x^i. Coefficients may involve L, which
/// lets Res_x(P(x), x^2 - L) be expressed. Uses Res(f, g) = lc(f)^deg g *
/// prod g(roots of f). Throws BothConstant when both have degree 0.
Poly sylvester_resultant(const std::vector<Poly>& f, const std::vector<Poly>& g);

/// Resultant of f and g as polynomials in L with (t, M) coefficients.
Poly sylvester_resultant(const Poly& f, const Poly& g);

/// Res_x(P(x), x^2 - L) in closed form, where P's L-coefficients are read as
/// coefficients in x: sum_i (sum_{k+j=2i} (-1)^k P_k P_j) L^i.
Poly resultant_quadratic(const Poly& P);

/// M^{2r} L + 1 for r > 0, L + M^{-2r} for r < 0. Throws ZeroR, EvenR.
Poly f_r(int r);

/// F_r(M, L) * Res_x(A(M^2, x), x^2 - L). Throws OddMPower, EvenR, ZeroR.
Poly cable_apolynomial(const Poly& A, int r);

/// Odd r with (r + 4 eta_minus)(r - 4 eta_plus) > 0.
class RWindow {
 public:
  RWindow(int eta_plus, int eta_minus);

  int eta_plus() const noexcept { return eta_plus_; }
  int eta_minus() const noexcept { return eta_minus_; }
  /// Strict bounds: admissible iff r > upper() or r < lower(), r odd.
  int upper() const noexcept { return 4 * eta_plus_; }
  int lower() const noexcept { return -4 * eta_minus_; }

  bool test(long long r) const noexcept;
  /// "(r - 16)(r + 8) > 0, r odd"
  std::string describe() const;
  /// "r > 16 or r < -8, r odd"
  std::string bounds() const;

 private:
  int eta_plus_;
  int eta_minus_;
};

RWindow admissible_r(int eta_plus, int eta_minus);

enum class Irreducibility { certified, refuted, inconclusive };
const char* to_string(Irreducibility s);

struct ConditionIIReport {
  /// A'(M, L) != A'(M, -L).
  bool symmetry = false;
  Irreducibility q_irreducibility = Irreducibility::inconclusive;
  std::string detail;
};

/// Heuristic irreducibility over Q plus the exact L -> -L asymmetry test.
/// "certified" is a proof over Q (full-degree irreducible specialization mod a
/// prime and trivial M-content); "refuted" exhibits an exact factor found by a
/// bounded search (M-content, a power of L, or a factor linear in L with
/// monomial coefficients).
ConditionIIReport condition_ii_checks(const Poly& aprime);

/// beta * (M^r L + t^{-2r} M^{-r}), normal-ordered. Throws ZeroR, EvenR.
OreOp cable_jones_operator(const OreOp& beta, int r);

}  // namespace ajcable
