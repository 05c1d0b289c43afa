#include <doctest.h>

#include "ajcable/annihilator.hpp"
#include "ajcable/knotdb.hpp"
#include "ajcable/oretorus.hpp"
#include "ajcable/skein.hpp"
#include "support.hpp"

using namespace ajcable;
using ajcable::testing::random_poly;

namespace {
const Poly t = Poly::t(), M = Poly::M(), L = Poly::L();
Poly mono(long c, int et, int em, int el) { return Poly::monomial(c, et, em, el); }
OreOp op(const Poly& p) { return OreOp::from_poly(p); }

SequenceOracle constant() { return SequenceOracle("1", [](int) { return Poly(1); }); }
SequenceOracle t_power() { return SequenceOracle("t^2n", [](int n) { return mono(1, 2 * n, 0, 0); }); }
/// t^{n^2} + n: order 1 for the first summand, (L - 1)^2 for the second.
SequenceOracle mixed() {
  return SequenceOracle("mixed", [](int n) { return mono(1, n * n, 0, 0) + Poly(n); });
}
}  // namespace

TEST_CASE("apply") {
  CHECK(apply(op(M), constant(), 3) == mono(1, 6, 0, 0));
  CHECK(apply(op(L - Poly(1)), constant(), 5).is_zero());
  for (int n = 1; n <= 6; ++n) CHECK(apply(op(L - t * t), t_power(), n).is_zero());
  CHECK(annihilates(op(L - Poly(1)), constant(), 1, 10));
  CHECK_FALSE(annihilates(op(L - Poly(2)), constant(), 1, 10));
}

TEST_CASE("operator action is compositional") {
  std::mt19937_64 rng(61);
  const SequenceOracle f = mixed();
  for (int trial = 0; trial < 12; ++trial) {
    const OreOp a = op(random_poly(rng, 3, 2, 2, 2));
    const OreOp b = op(random_poly(rng, 3, 2, 2, 2));
    const SequenceOracle g("b f", [b, f](int n) { return apply(b, f, n); });
    for (int n = 1; n <= 4; ++n) CHECK(apply(ore_multiply(a, b), f, n) == apply(a, g, n));
  }
}

TEST_CASE("memoization returns identical values") {
  int calls = 0;
  const SequenceOracle f("count", [&calls](int n) {
    ++calls;
    return mono(1, n, 0, 0);
  });
  CHECK(f(3) == f(3));
  const SequenceOracle copy = f;
  CHECK(copy(3) == mono(1, 3, 0, 0));
  CHECK(calls == 1);
}

TEST_CASE("fitting simple sequences") {
  const auto c = fit_recurrence(constant(), 1, 1, 12);
  REQUIRE(c.has_value());
  CHECK(unit_equal(c->to_poly(), L - Poly(1)).has_value());

  const auto p = fit_recurrence(t_power(), 1, 1, 12);
  REQUIRE(p.has_value());
  CHECK(unit_equal(p->to_poly(), L - t * t).has_value());

  const auto m = find_minimal_recurrence(mixed(), 3, 4);
  REQUIRE(m.has_value());
  CHECK(m->degree() == 3);
  CHECK(annihilates(*m, mixed(), 30, 33));
}

TEST_CASE("figure-eight recurrence and the odd-subsequence annihilator") {
  const SequenceOracle jones = figure_eight_sequence();
  const auto fitted = find_minimal_recurrence(jones, 3, 32);
  REQUIRE(fitted.has_value());
  CHECK(fitted->degree() == 3);
  CHECK(annihilates(*fitted, jones, 90, 93));
  CHECK(m_essentially_equal(epsilon(*fitted), (L - Poly(1)) * ajcable::testing::figure_eight_aprime()));

  const AnnihilatorResult r = solve_odd_annihilator(CoeffFamily::from_poly(fitted->to_poly()));
  CHECK(r.all_identities_pass());
  CHECK(annihilates(r.beta, jones.odd_subsequence(), 1, 4));
}
