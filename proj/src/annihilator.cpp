#include "ajcable/annihilator.hpp"

#include <algorithm>
#include <sstream>

#include "ajcable/errors.hpp"

namespace ajcable {

namespace {

Poly mode_map(const Poly& p, TMode mode) {
  return mode == TMode::minus_one ? eval_t_minus1(p) : p;
}

void require_degree(int d) {
  if (d < 2) {
    throw DegreeTooSmall("annihilator construction needs L-degree >= 2, got " + std::to_string(d));
  }
}

/// The unit u with lhs[i] = u * rhs[i] for every i, skipping pairs that are
/// both zero. Returns the first failing index on mismatch.
struct UnitMatch {
  std::optional<Unit> unit;
  int failed_index = -1;
};

UnitMatch common_unit(const std::vector<Poly>& lhs, const std::vector<Poly>& rhs) {
  UnitMatch out;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].is_zero() && rhs[i].is_zero()) continue;
    auto u = unit_equal(lhs[i], rhs[i]);
    if (!u || lhs[i].is_zero() || rhs[i].is_zero() || (out.unit && !(*out.unit == *u))) {
      out.unit.reset();
      out.failed_index = static_cast<int>(i);
      return out;
    }
    out.unit = u;
  }
  if (!out.unit) out.unit = Unit{};
  return out;
}

std::string describe(const Unit& u) {
  std::ostringstream os;
  os << u;
  return os.str();
}

IdentityCheck unit_check(std::string name, const std::vector<Poly>& lhs,
                         const std::vector<Poly>& rhs) {
  UnitMatch m = common_unit(lhs, rhs);
  if (m.unit) return {std::move(name), true, "global unit " + describe(*m.unit)};
  return {std::move(name), false, "no common unit; first mismatch at index " +
                                      std::to_string(m.failed_index)};
}

std::vector<std::size_t> range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

CoeffFamily::CoeffFamily(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidFamily("empty coefficient family");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].depends_on_L()) {
      throw InvalidFamily("coefficient P_" + std::to_string(i) + " depends on L");
    }
  }
  if (coeffs_.front().is_zero()) throw InvalidFamily("leading-index coefficient P_0 is zero");
  if (coeffs_.back().is_zero()) throw InvalidFamily("top coefficient P_d is zero");
}

Poly CoeffFamily::shifted(int i, int r, TMode mode) const {
  if (i < 0 || i > degree()) return {};
  return mode_map(substitute_M(coeffs_[static_cast<std::size_t>(i)], Unit{1, r, 1}, true), mode);
}

PolyMatrix build_D(const CoeffFamily& f, TMode mode) {
  const int d = f.degree();
  require_degree(d);
  const std::size_t n = static_cast<std::size_t>(2 * d + 1);
  PolyMatrix D(n, n);
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i <= d; ++i) {
      D(static_cast<std::size_t>(i + j), static_cast<std::size_t>(j)) = f.shifted(i, 2 * j + 2, mode);
    }
  }
  for (int k = 0; k < d; ++k) {
    D(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(d + 1 + k)) = Poly(-1);
  }
  return D;
}

XN derive_X_N(const PolyMatrix& D, int d) {
  require_degree(d);
  if (D.rows() != static_cast<std::size_t>(2 * d + 1) || !D.square()) {
    throw DimensionMismatch("derive_X_N: D has wrong shape for d = " + std::to_string(d));
  }
  std::vector<std::size_t> rows;
  for (int k = 0; k < d; ++k) rows.push_back(static_cast<std::size_t>(2 * k + 1));
  rows.push_back(static_cast<std::size_t>(2 * d));
  PolyMatrix X = D.select(rows, range(static_cast<std::size_t>(d + 1)));
  const auto block = range(static_cast<std::size_t>(d - 1));
  PolyMatrix N = X.select(block, block);
  return {std::move(X), std::move(N)};
}

PolyMatrix build_A(const CoeffFamily& f, int i, TMode mode) {
  const int d = f.degree();
  require_degree(d);
  if (i < 1 || i > d + 1) {
    throw IndexOutOfRange("build_A index " + std::to_string(i) + " outside 1.." +
                          std::to_string(d + 1));
  }
  std::vector<std::size_t> rows;
  for (int k = 0; k < d; ++k) rows.push_back(static_cast<std::size_t>(2 * k + 1));
  rows.push_back(static_cast<std::size_t>(2 * i - 2));
  std::sort(rows.begin(), rows.end());
  return build_D(f, mode).select(rows, range(static_cast<std::size_t>(d + 1)));
}

PolyMatrix build_B(const CoeffFamily& f, int j, TMode mode) {
  const int d = f.degree();
  require_degree(d);
  if (j < 1 || j > d + 1) {
    throw IndexOutOfRange("build_B index " + std::to_string(j) + " outside 1.." +
                          std::to_string(d + 1));
  }
  const XN xn = derive_X_N(build_D(f, mode), d);
  return xn.X.minor(static_cast<std::size_t>(d), static_cast<std::size_t>(j - 1));
}

bool AnnihilatorResult::all_identities_pass() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

AnnihilatorResult solve_odd_annihilator(const CoeffFamily& f, TMode mode) {
  const int d = f.degree();
  require_degree(d);
  const std::size_t n = static_cast<std::size_t>(2 * d + 1);
  const PolyMatrix D = build_D(f, mode);
  std::vector<Poly> e_last(n);
  e_last.back() = Poly(1);

  auto [det, y] = solve_fraction_free(D, e_last);
  const XN xn = derive_X_N(D, d);
  if (det.is_zero()) {
    const Poly detN = det_bareiss(xn.N);
    throw SingularSystem(std::string("det(D) vanishes identically") +
                         (detN.is_zero() ? "; det(N) is zero" : ""));
  }

  // C (x, Q_d) = 0 with C = [D | -e_last] is the same as D y = det e_last.
  std::vector<Poly> expected(n);
  expected.back() = det;
  if (mat_vec(D, y) != expected) {
    throw InternalInvariant("homogeneous residual does not vanish after the Cramer solve");
  }

  AnnihilatorResult r;
  r.d = d;
  r.mode = mode;
  r.detD = det;
  r.identities.push_back({"residual", true, "all " + std::to_string(n) + " rows vanish"});

  std::vector<Poly> raw_q;
  for (int k = 0; k <= d; ++k) r.c.push_back(y[static_cast<std::size_t>(k)]);
  for (int k = 0; k < d; ++k) raw_q.push_back(y[static_cast<std::size_t>(d + 1 + k)]);
  raw_q.push_back(det);
  for (int k = 0; k <= d; ++k) r.Q.push_back(k % 2 == 0 ? raw_q[k] : -raw_q[k]);

  const Poly detX = det_bareiss(xn.X);
  r.detN = det_bareiss(xn.N);
  r.detN_minus1 = eval_t_minus1(r.detN);
  r.detN_vanishes_at_minus1 = r.detN_minus1.is_zero();

  // Expanding along the d columns holding a single -1 leaves X behind a
  // permutation of sign (-1)^{d(d+1)/2}.
  const bool flip = (d * (d + 1) / 2) % 2 != 0;
  r.identities.push_back({"detD_equals_detX", det == (flip ? -detX : detX),
                          flip ? "det(D) = -det(X)" : "det(D) = det(X)"});
  const Poly factored = f.shifted(d, 2 * d, mode) * f.shifted(d, 2 * d + 2, mode) * r.detN;
  r.identities.push_back({"detX_factorization", detX == factored, ""});

  // Cofactor bookkeeping for c and Q, up to one global unit each.
  std::vector<Poly> c_expected, q_expected;
  for (int j = 0; j <= d; ++j) {
    const Poly minor = det_bareiss(build_B(f, j + 1, mode));
    c_expected.push_back((d + j) % 2 == 0 ? minor : -minor);
  }
  for (int k = 0; k < d; ++k) q_expected.push_back(-det_bareiss(build_A(f, k + 1, mode)));
  r.identities.push_back(unit_check("c_from_B_minors", r.c, c_expected));
  r.identities.push_back(
      unit_check("Q_from_A_minors", std::vector<Poly>(r.Q.begin(), r.Q.end() - 1), q_expected));

  r.beta = OreOp::from_poly(primitive_part(from_l_coefficients(raw_q), &r.beta_content, &r.beta_unit));
  return r;
}

Poly alternating_square_coefficient(const std::vector<Poly>& P, int i) {
  Poly acc;
  const int d = static_cast<int>(P.size()) - 1;
  for (int k = std::max(0, 2 * i - d); k <= std::min(d, 2 * i); ++k) {
    const Poly term = P[static_cast<std::size_t>(k)] * P[static_cast<std::size_t>(2 * i - k)];
    if (k % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

CofactorDiagnostics check_cofactor_identities(const CoeffFamily& f, const AnnihilatorResult& r) {
  const int d = f.degree();
  require_degree(d);
  if (r.d != d) throw DimensionMismatch("annihilator result does not match the family degree");
  std::vector<Poly> p_sq;
  for (int i = 0; i <= d; ++i) p_sq.push_back(f.shifted(i, 0, TMode::minus_one));
  const Poly& detN = r.detN_minus1;

  std::vector<Poly> minor_lhs, minor_rhs, sq_lhs, sq_rhs;
  for (int i = 0; i <= d; ++i) {
    minor_lhs.push_back(det_bareiss(build_B(f, i + 1, TMode::minus_one)));
    minor_rhs.push_back(p_sq[static_cast<std::size_t>(i)] * detN);
    const Poly q = eval_t_minus1(r.Q[static_cast<std::size_t>(i)]);
    sq_lhs.push_back(i % 2 == 0 ? -q : q);
    sq_rhs.push_back(alternating_square_coefficient(p_sq, i) * detN);
  }

  CofactorDiagnostics diag;
  const UnitMatch minor = common_unit(minor_lhs, minor_rhs);
  if (!minor.unit) throw IdentityFailure("minor_identity", minor.failed_index);
  const UnitMatch square = common_unit(sq_lhs, sq_rhs);
  if (!square.unit) throw IdentityFailure("square_identity", square.failed_index);
  diag.minor_unit = *minor.unit;
  diag.square_unit = *square.unit;
  diag.checks.push_back({"minor_identity", true, "global unit " + describe(diag.minor_unit)});
  diag.checks.push_back({"square_identity", true, "global unit " + describe(diag.square_unit)});
  return diag;
}

Poly detN_from_apoly(const Poly& A) {
  for (const Term& term : A.terms()) {
    if (term.key.m() % 2 != 0) {
      throw OddMPower("A-polynomial has the odd M-power " + std::to_string(term.key.m()));
    }
  }
  const CoeffFamily f = CoeffFamily::from_poly(A);
  const XN xn = derive_X_N(build_D(f, TMode::minus_one), f.degree());
  return det_bareiss(xn.N);
}

}  // namespace ajcable
