#include <doctest.h>

#include "ajcable/annihilator.hpp"
#include "ajcable/cabling.hpp"
#include "ajcable/errors.hpp"
#include "ajcable/knotdb.hpp"
#include "ajcable/layout.hpp"
#include "support.hpp"

using namespace ajcable;
using ajcable::testing::random_family;

namespace {
const Poly t = Poly::t(), M = Poly::M(), L = Poly::L();
Poly mono(long c, int et, int em, int el) { return Poly::monomial(c, et, em, el); }
CoeffFamily simple_d2() { return CoeffFamily({Poly(1), M, Poly(1)}); }

Poly aprime_62() { return load_db(ajcable::testing::data_path("fixtures/knots.kdb")).records().front().aprime; }
}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(CoeffFamily({}), InvalidFamily);
  CHECK_THROWS_AS(CoeffFamily({Poly(), M, Poly(1)}), InvalidFamily);
  CHECK_THROWS_AS(CoeffFamily({Poly(1), M, Poly()}), InvalidFamily);
  CHECK_THROWS_AS(CoeffFamily({Poly(1), L, Poly(1)}), InvalidFamily);
  CHECK_THROWS_AS(build_D(CoeffFamily({Poly(1), M})), DegreeTooSmall);
  CHECK(simple_d2().shifted(1, 2) == mono(1, 2, 2, 0));
  CHECK(simple_d2().shifted(1, 3, TMode::minus_one) == mono(-1, 0, 2, 0));
  CHECK(simple_d2().shifted(5, 2).is_zero());
}

TEST_CASE("d = 2 construction") {
  const CoeffFamily f = simple_d2();
  const PolyMatrix D = build_D(f);
  REQUIRE(D.rows() == 5);
  CHECK(D(0, 0) == f.shifted(0, 2));
  CHECK(D(1, 0) == f.shifted(1, 2));
  CHECK(D(2, 0) == f.shifted(2, 2));
  CHECK(D(3, 0).is_zero());
  CHECK(D(4, 0).is_zero());
  const XN xn = derive_X_N(D, 2);
  REQUIRE(xn.N.rows() == 1);
  CHECK(xn.N(0, 0) == mono(1, 2, 2, 0));
}

TEST_CASE("band structure of D") {
  std::mt19937_64 rng(41);
  for (int d = 2; d <= 5; ++d) {
    const CoeffFamily f = random_family(rng, d, 2, true);
    const PolyMatrix D = build_D(f);
    for (std::size_t c = 0; c <= static_cast<std::size_t>(d); ++c) {
      int nonzero = 0;
      for (std::size_t r = 0; r < D.rows(); ++r) nonzero += D(r, c).is_zero() ? 0 : 1;
      CHECK(nonzero == d + 1);
    }
  }
}

TEST_CASE("d = 3 layout matches the reference apart from one entry of B_3") {
  const auto mismatches = compare_layouts(reference_d3_layouts(), built_d3_layouts());
  REQUIRE(mismatches.size() == 1);
  CHECK(mismatches[0].matrix == "B_3");
  CHECK(mismatches[0].row == 2);
  CHECK(mismatches[0].col == 2);
  CHECK(mismatches[0].actual == "P_2(8)");
  // The claimed minor identity needs P_2 there: det B_3 = P_2 * det N.
  const CoeffFamily f = tagged_family(3);
  const Poly lhs = eval_t_minus1(det_bareiss(build_B(f, 3)));
  const Poly rhs = f.shifted(2, 0, TMode::minus_one) *
                   det_bareiss(derive_X_N(build_D(f, TMode::minus_one), 3).N);
  CHECK(unit_equal(lhs, rhs).has_value());
}

TEST_CASE("structural identities on random families") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 24; ++trial) {
    const int d = 2 + trial % 3;
    const CoeffFamily f = random_family(rng, d, 2, true);
    const PolyMatrix D = build_D(f);
    const XN xn = derive_X_N(D, d);
    const Poly detX = det_bareiss(xn.X);
    const Poly detN = det_bareiss(xn.N);
    CHECK(detX == f.shifted(d, 2 * d) * f.shifted(d, 2 * d + 2) * detN);
    const int sign = (d * (d + 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(det_bareiss(D) == detX.scaled(sign));
    CHECK(build_A(f, d + 1) == xn.X);
  }
  CHECK_THROWS_AS(build_A(simple_d2(), 0), IndexOutOfRange);
  CHECK_THROWS_AS(build_B(simple_d2(), 4), IndexOutOfRange);
}

TEST_CASE("solve d = 2 symbolically") {
  const CoeffFamily f = simple_d2();
  const AnnihilatorResult r = solve_odd_annihilator(f);
  CHECK(r.all_identities_pass());
  CHECK(r.beta.to_poly() == L * L + (mono(-1, 10, 4, 0) + mono(1, 4, 0, 0) + Poly(1)) * L + mono(1, 4, 0, 0));
  const CofactorDiagnostics diag = check_cofactor_identities(f, r);
  CHECK(diag.checks.size() == 2);
}

TEST_CASE("random families: residual, cofactor identities, nondegeneracy") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 2 + trial % 2;
    const CoeffFamily f = random_family(rng, d, 3, true);
    AnnihilatorResult r;
    try {
      r = solve_odd_annihilator(f);
    } catch (const SingularSystem&) {
      continue;
    }
    CHECK(r.all_identities_pass());
    CHECK_NOTHROW(check_cofactor_identities(f, r));
    if (!r.detN_minus1.is_zero()) {
      CHECK_FALSE(eval_t_minus1(r.Q.front()).is_zero());
      CHECK_FALSE(eval_t_minus1(r.Q.back()).is_zero());
    }
  }
}

TEST_CASE("i = 0 square identity: -Q_0 = P_0^2 det N up to a unit at t = -1") {
  const CoeffFamily f({Poly(2) + M, M - Poly(3), Poly(1) + M * M, M});
  const AnnihilatorResult r = solve_odd_annihilator(f, TMode::minus_one);
  const Poly p0 = f.shifted(0, 0, TMode::minus_one);
  CHECK(unit_equal(-r.Q.front(), p0 * p0 * r.detN_minus1).has_value());
}

TEST_CASE("odd coefficients zero make the system singular") {
  const CoeffFamily f({Poly(1), Poly(), M, Poly(), Poly(1)});
  CHECK(det_bareiss(derive_X_N(build_D(f, TMode::minus_one), 4).N).is_zero());
  CHECK_THROWS_AS(solve_odd_annihilator(f), SingularSystem);
}

TEST_CASE("detN_from_apoly") {
  CHECK(detN_from_apoly(L * L * L * L - M * M * L * L + Poly(1)).is_zero());
  CHECK_THROWS_AS(detN_from_apoly(L * L * L + M * L + Poly(1)), OddMPower);

  // A = (L - 1)(L^2 + M^2 L + 1): coefficients (-1, 1 - M^2, M^2 - 1, 1).
  const Poly A = (L - Poly(1)) * (L * L + M * M * L + Poly(1));
  const Poly m4 = mono(1, 0, 4, 0);
  PolyMatrix N{{Poly(1) - m4, Poly(-1)}, {Poly(1), m4 - Poly(1)}};
  CHECK(detN_from_apoly(A) == det_cofactor(N));

  const Poly det62 = detN_from_apoly((L - Poly(1)) * aprime_62());
  CHECK_FALSE(det62.is_zero());
  CHECK_FALSE(det62.depends_on_t());
}

TEST_CASE("6_2 family at t = -1") {
  const CoeffFamily f = CoeffFamily::from_poly((L - Poly(1)) * aprime_62());
  REQUIRE(f.degree() == 6);
  const AnnihilatorResult r = solve_odd_annihilator(f, TMode::minus_one);
  CHECK(r.all_identities_pass());
  CHECK_FALSE(r.detN_vanishes_at_minus1);
  CHECK_NOTHROW(check_cofactor_identities(f, r));
  CHECK(r.detN == detN_from_apoly((L - Poly(1)) * aprime_62()));
  const Poly alpha_sq = substitute_M(from_l_coefficients(f.coeffs()), Unit{1, 0, 1}, true);
  CHECK(m_essentially_equal(eval_t_minus1(r.beta.to_poly()), resultant_quadratic(alpha_sq)));
}
