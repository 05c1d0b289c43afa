#include <doctest.h>

#include "ajcable/errors.hpp"
#include "ajcable/knotdb.hpp"
#include "ajcable/ring.hpp"
#include "support.hpp"

using namespace ajcable;
using ajcable::testing::random_poly;

namespace {
const Poly t = Poly::t(), M = Poly::M(), L = Poly::L();
Poly mono(long c, int et, int em, int el) { return Poly::monomial(c, et, em, el); }
}  // namespace

TEST_CASE("canonical form drops zeros and merges terms") {
  CHECK((M - M).is_zero());
  CHECK((M + L - M) == L);
  CHECK(Poly(0).is_zero());
  const Poly p = Poly::from_terms({{MonomialKey(Exponent{0, 1, 0}), 2}, {MonomialKey(Exponent{0, 1, 0}), -2}});
  CHECK(p.is_zero());
  CHECK((M * L).size() == 1);
}

TEST_CASE("arith entry point") {
  CHECK(arith(M, L, ArithKind::mul) == L * M);
  CHECK(arith(M, Poly(), ArithKind::mul).is_zero());
  CHECK(arith(M * M - Poly(1), M - Poly(1), ArithKind::exact_div) == M + Poly(1));
  CHECK(arith(M, Poly(), ArithKind::neg) == -M);
  CHECK(arith(M, L, ArithKind::sub) == M - L);
}

TEST_CASE("exact division") {
  CHECK(exact_div(mono(6, 2, 3, 1), mono(3, 1, 1, 0)) == mono(2, 1, 2, 1));
  const Poly a = (M * t + L - Poly(3)) * (M * M * L + t * t * t - Poly(2));
  CHECK(exact_div(a, M * M * L + t * t * t - Poly(2)) == M * t + L - Poly(3));
  CHECK_THROWS_AS(exact_div(M + Poly(1), M - Poly(1)), InexactDivision);
  CHECK_THROWS_AS(exact_div(M, Poly()), ZeroArgument);
  CHECK_THROWS_AS(exact_div(Poly(1), L), InexactDivision);
}

TEST_CASE("Laurent exponents in t and M, non-negative in L") {
  CHECK(mono(1, -3, -2, 0) * mono(1, 3, 2, 0) == Poly(1));
  CHECK_THROWS(Poly::monomial(1, 0, 0, -1));
  CHECK_THROWS_AS(Poly::monomial(1, MonomialKey::kMaxTM + 1, 0, 0), ExponentOverflow);
  CHECK_THROWS_AS(mono(1, MonomialKey::kMaxTM, 0, 0) * t, ExponentOverflow);
}

TEST_CASE("substitute_M") {
  CHECK(substitute_M(M * M, Unit{1, 2, 1}, true) == mono(1, 4, 4, 0));
  CHECK(substitute_M(M + mono(1, 0, -1, 0), Unit{1, 0, 1}, true) == mono(1, 0, 2, 0) + mono(1, 0, -2, 0));
  const Poly p1 = parse_polynomial("M^4+3*M^12-2*M^2-5*M^10+1-5*M^8+2*M^6");
  const Poly squared = parse_polynomial("M^8+3*M^24-2*M^4-5*M^20+1-5*M^16+2*M^12");
  CHECK(substitute_M(p1, Unit{1, 0, 1}, true) == squared);
  CHECK(substitute_M(M * M * M, Unit{-1, 1, 0}, false) == mono(-1, 3, 0, 0));
}

TEST_CASE("evaluation at t = -1") {
  CHECK(eval_t_minus1(t * t * M * L) == M * L);
  CHECK(eval_t_minus1(t * t * t * M * M) == -(M * M));
  CHECK(eval_t_minus1(t + Poly(1)).is_zero());
}

TEST_CASE("l_coefficients") {
  const auto c = l_coefficients(Poly(1) + M * L + L * L);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Poly(1));
  CHECK(c[1] == M);
  CHECK(c[2] == Poly(1));
  CHECK(l_coefficients(Poly()).empty());
  const Poly a6 = parse_polynomial(
      "-L^5*M^26 + L^4*M^30 - 2*L^4*M^28 + L^4*M^26 + 2*L^4*M^24 - 5*L^4*M^22 - 5*L^4*M^20 + 3*L^4*M^18 + "
      "L^3*M^28 - 3*L^3*M^26 + L^3*M^24 + 5*L^3*M^22 + 3*L^3*M^20 - 12*L^3*M^18 - 13*L^3*M^16 + 3*L^3*M^14 + "
      "8*L^3*M^12 - 3*L^3*M^10 - 3*L^2*M^20 + 8*L^2*M^18 + 3*L^2*M^16 - 13*L^2*M^14 - 12*L^2*M^12 + "
      "3*L^2*M^10 + 5*L^2*M^8 + L^2*M^6 - 3*L^2*M^4 + L^2*M^2 + 3*L*M^12 - 5*L*M^10 - 5*L*M^8 + 2*L*M^6 + "
      "L*M^4 - 2*L*M^2 + L - M^4");
  const auto c6 = l_coefficients(a6);
  REQUIRE(c6.size() == 6);
  CHECK(c6[5] == mono(-1, 0, 26, 0));
}

TEST_CASE("m_essentially_equal and unit_equal") {
  CHECK(m_essentially_equal(M * M * (L + Poly(1)), L + Poly(1)));
  CHECK_FALSE(m_essentially_equal(L + M, L + Poly(1)));
  const Poly g = L * L - (M + Poly(2)) * L + M * M * M;
  CHECK(m_essentially_equal((M * M - Poly(3) * M + Poly(1)) * g, g));
  CHECK_THROWS_AS(m_essentially_equal(Poly(), g), ZeroArgument);

  const auto u = unit_equal(mono(-1, 2, 1, 0) * g, g);
  REQUIRE(u.has_value());
  CHECK(*u == Unit{-1, 2, 1});
  CHECK_FALSE(unit_equal(Poly(2) * g, g).has_value());
}

TEST_CASE("primitive_part") {
  Integer content;
  Unit removed;
  const Poly p = mono(-6, 3, 2, 1) + mono(4, 2, 5, 0);
  const Poly pp = primitive_part(p, &content, &removed);
  CHECK(content == 2);
  CHECK(pp.leading_term().coeff > 0);
  CHECK(unit_equal(p, pp.scaled(2)).has_value());
  CHECK(pp.min_degree_t() == 0);
  CHECK(pp.min_degree_M() == 0);
}

TEST_CASE("render") {
  CHECK(render(mono(-1, 0, 26, 5)) == "-L^5*M^26");
  CHECK(render(Poly(1)) == "1");
  CHECK(render(Poly()) == "0");
  CHECK(render(mono(1, 2, 1, 0)) == "M*t^2");
  CHECK(render(Poly(2) * L - Poly(1) + mono(-3, -1, 0, 0)) == "2*L - 1 - 3*t^-1");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Poly a = random_poly(rng, 5, 3, 3, 2), b = random_poly(rng, 5, 3, 3, 2), c = random_poly(rng, 5, 3, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("homomorphisms commute with ring operations") {
  std::mt19937_64 rng(12);
  const Unit image{-1, 1, 2};
  for (int trial = 0; trial < 120; ++trial) {
    const Poly a = random_poly(rng, 5, 3, 3, 2), b = random_poly(rng, 5, 3, 3, 2);
    CHECK(eval_t_minus1(a * b) == eval_t_minus1(a) * eval_t_minus1(b));
    CHECK(eval_t_minus1(a + b) == eval_t_minus1(a) + eval_t_minus1(b));
    for (bool square : {false, true}) {
      CHECK(substitute_M(a * b, image, square) == substitute_M(a, image, square) * substitute_M(b, image, square));
      CHECK(substitute_M(a - b, image, square) == substitute_M(a, image, square) - substitute_M(b, image, square));
    }
    CHECK(negate_L(negate_L(a)) == a);
  }
}

TEST_CASE("l_coefficients round trip") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng, 6, 3, 3, 4);
    const auto c = l_coefficients(a);
    CHECK(from_l_coefficients(c) == a);
  }
}

TEST_CASE("m_essentially_equal is an equivalence on M-multiples") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> coeff(1, 3), deg(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Poly g = random_poly(rng, 4, 2, 2, 3) + L * L * L;
    auto m_factor = [&] { return Poly::monomial(coeff(rng), 0, deg(rng), 0) - Poly(deg(rng) + 7); };
    const Poly f = m_factor() * g, h = m_factor() * f;
    CHECK(m_essentially_equal(g, g));
    CHECK(m_essentially_equal(f, g) == m_essentially_equal(g, f));
    CHECK(m_essentially_equal(f, g));
    CHECK(m_essentially_equal(h, f));
    CHECK(m_essentially_equal(h, g));
  }
}
