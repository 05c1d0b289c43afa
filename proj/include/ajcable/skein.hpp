#pragma once

// Colored Jones values of small fixture knots from Kauffman-Lins recoupling
// theory, an independent Kauffman bracket state sum, and the cyclotomic
// expansion of the figure eight used for long sequences.
//
// Variable map: values are Laurent polynomials in t with t = A^{-1}, where A
// is the Kauffman bracket variable. Normalization: the unknot is 1 for every
// color, and color n is the (n-1)-strand Jones-Wenzl projector (n = 2 gives
// the Jones polynomial).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ajcable/oretorus.hpp"
#include "ajcable/ring.hpp"

namespace ajcable {

enum class FixtureKnot { unknot, trefoil, figure_eight };

inline constexpr int kMaxFixtureColor = 6;

FixtureKnot fixture_knot_from_name(const std::string& name);

/// n-colored Jones value by recoupling; 1 <= n <= 6. Throws ColorTooLarge.
Poly colored_jones_fixture(FixtureKnot knot, int n);

/// Planar diagram code: one entry X[i, j, k, l] per crossing, labels
/// counterclockwise from the incoming under-strand.
using PDCode = std::vector<std::array<int, 4>>;

PDCode fixture_pd(FixtureKnot knot);
int writhe(const PDCode& pd);

/// Jones polynomial from the Kauffman bracket state sum,
/// (-A^3)^{-w} <D> with <unknot> = 1, in t = A^{-1}.
Poly bracket_jones(const PDCode& pd);

/// Figure-eight n-colored Jones from its cyclotomic expansion
/// sum_{k<n} prod_{j<=k} (q^n + q^{-n} - q^j - q^{-j}) with q = t^4.
Poly figure_eight_cyclotomic(int n);
std::uint64_t figure_eight_cyclotomic_mod(int n, std::uint64_t tau);

/// Unbounded figure-eight sequence backed by the cyclotomic formula.
SequenceOracle figure_eight_sequence();

/// Recoupling-backed sequence; evaluation past color 6 throws ColorTooLarge.
SequenceOracle skein_sequence(FixtureKnot knot);

}  // namespace ajcable
