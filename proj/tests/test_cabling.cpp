#include <doctest.h>

#include "ajcable/cabling.hpp"
#include "ajcable/errors.hpp"
#include "ajcable/knotdb.hpp"
#include "support.hpp"

using namespace ajcable;
using ajcable::testing::random_poly;

namespace {
const Poly t = Poly::t(), M = Poly::M(), L = Poly::L();
Poly mono(long c, int et, int em, int el) { return Poly::monomial(c, et, em, el); }
Poly aprime_62() { return load_db(ajcable::testing::data_path("fixtures/knots.kdb")).records().front().aprime; }
const std::vector<Poly> kQuadratic{-Poly::L(), Poly(), Poly(1)};
}  // namespace

TEST_CASE("Sylvester resultant") {
  const Poly r = sylvester_resultant({Poly(-1), Poly(1)}, {Poly(-2), Poly(1)});
  CHECK((r == Poly(1) || r == Poly(-1)));
  CHECK(sylvester_resultant({Poly(-1), Poly(0), Poly(1)}, {Poly(-2), Poly(1)}) == Poly(3));
  CHECK(sylvester_resultant({Poly(-1), Poly(0), Poly(1)}, {Poly(1)}) == Poly(1));
  CHECK_THROWS_AS(sylvester_resultant({Poly(2)}, {Poly(3)}), BothConstant);
  CHECK_THROWS_AS(sylvester_resultant({Poly(1), Poly(1)}, {Poly()}), ZeroArgument);
  // Product of g over the roots 1, 2 of f: g = x^2 + M gives (1 + M)(4 + M).
  CHECK(sylvester_resultant({Poly(2), Poly(-3), Poly(1)}, {M, Poly(), Poly(1)}) ==
        (Poly(1) + M) * (Poly(4) + M));
}

TEST_CASE("closed-form quadratic resultant") {
  const Poly p0 = M, p1 = t, p2 = mono(1, 5, 3, 0);
  CHECK(resultant_quadratic(p0 + p1 * L + p2 * L * L) ==
        p2 * p2 * L * L + (Poly(2) * p0 * p2 - p1 * p1) * L + p0 * p0);
  CHECK(resultant_quadratic(L - Poly(1)) == Poly(1) - L);
  CHECK(unit_equal(resultant_quadratic(L - Poly(1)), L - Poly(1)) == Unit{-1, 0, 0});
  CHECK(resultant_quadratic(M + Poly(3)) == (M + Poly(3)) * (M + Poly(3)));
}

TEST_CASE("closed form agrees with the Sylvester oracle") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    Poly p = random_poly(rng, 8, 1, 3, 6);
    if (p.degree_L() < 1) p += L;
    const Poly closed = resultant_quadratic(p);
    const auto u = unit_equal(closed, sylvester_resultant(l_coefficients(p), kQuadratic));
    REQUIRE(u.has_value());
    CHECK(u->e_t == 0);
    CHECK(u->e_m == 0);
  }
}

TEST_CASE("resultant is multiplicative") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng, 4, 1, 2, 3), b = random_poly(rng, 4, 1, 2, 3);
    CHECK(resultant_quadratic(a * b) == resultant_quadratic(a) * resultant_quadratic(b));
  }
}

TEST_CASE("F_r") {
  CHECK(f_r(1) == mono(1, 0, 2, 1) + Poly(1));
  CHECK(f_r(-1) == L + mono(1, 0, 2, 0));
  CHECK(f_r(3) == mono(1, 0, 6, 1) + Poly(1));
  CHECK(f_r(-3) == L + mono(1, 0, 6, 0));
  CHECK_THROWS_AS(f_r(2), EvenR);
  CHECK_THROWS_AS(f_r(0), ZeroR);
}

TEST_CASE("cable A-polynomial") {
  CHECK(cable_apolynomial(L - Poly(1), 1) == (mono(1, 0, 2, 1) + Poly(1)) * (Poly(1) - L));
  const Poly a62 = (L - Poly(1)) * aprime_62();
  CHECK(cable_apolynomial(a62, 17).degree_L() == 7);
  CHECK(m_essentially_equal(cable_apolynomial(a62.times(Unit{-1, 0, 4}), 3), cable_apolynomial(a62, 3)));
  CHECK_THROWS_AS(cable_apolynomial(L - M, 1), OddMPower);
  CHECK_THROWS_AS(cable_apolynomial(L - Poly(1), 4), EvenR);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = substitute_M(random_poly(rng, 5, 0, 2, 3), Unit{1, 0, 1}, true) + mono(1, 0, 2, 4) + Poly(1);
    CHECK(cable_apolynomial(a, trial % 2 == 0 ? 5 : -7).degree_L() == a.degree_L() + 1);
  }
}

TEST_CASE("admissible window") {
  const RWindow w = admissible_r(4, 2);
  CHECK(w.test(17));
  CHECK_FALSE(w.test(15));
  CHECK(w.test(-9));
  CHECK_FALSE(w.test(18));
  CHECK_FALSE(w.test(-8));
  CHECK(w.describe() == "(r - 16)(r + 8) > 0, r odd");
  CHECK(w.bounds() == "r > 16 or r < -8, r odd");
  CHECK(admissible_r(0, 3).describe() == "r(r + 12) > 0, r odd");
  for (int ep = 0; ep < 5; ++ep) {
    for (int em = 0; em < 5; ++em) {
      for (int r = -41; r <= 41; ++r) CHECK(admissible_r(ep, em).test(r) == admissible_r(em, ep).test(-r));
    }
  }
}

TEST_CASE("condition ii") {
  const ConditionIIReport c62 = condition_ii_checks(aprime_62());
  CHECK(c62.symmetry);
  CHECK(c62.q_irreducibility == Irreducibility::certified);

  const ConditionIIReport c1 = condition_ii_checks(L * L + M * L + Poly(1));
  CHECK(c1.symmetry);
  CHECK(c1.q_irreducibility == Irreducibility::certified);

  CHECK(condition_ii_checks(L * L - M * M).q_irreducibility == Irreducibility::refuted);
  CHECK_FALSE(condition_ii_checks(L * L - M * M).symmetry);
  CHECK(condition_ii_checks((M + Poly(1)) * (L + M)).q_irreducibility == Irreducibility::refuted);
  CHECK(condition_ii_checks(L * (L + M)).q_irreducibility == Irreducibility::refuted);
  CHECK(condition_ii_checks(t * L + M).q_irreducibility == Irreducibility::inconclusive);
}

TEST_CASE("cable Jones operator") {
  const OreOp one = OreOp::from_poly(Poly(1));
  CHECK(cable_jones_operator(one, 1).to_poly() == M * L + mono(1, -2, -1, 0));
  // L * t^-2 M^-1 = t^-2 (t^-2 M^-1 L): one commutation past M^-1.
  CHECK(cable_jones_operator(OreOp::from_poly(L), 1).to_poly() == mono(1, 2, 1, 2) + mono(1, -4, -1, 1));
  const OreOp beta = OreOp::from_poly(L * L - mono(1, 3, 2, 1) + M);
  for (int r : {1, -1, 3, -5}) {
    CHECK(m_essentially_equal(epsilon(cable_jones_operator(beta, r)), epsilon(beta) * f_r(r)));
  }
  CHECK_THROWS_AS(cable_jones_operator(beta, 2), EvenR);
}
