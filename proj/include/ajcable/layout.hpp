#pragma once

// Symbolic view of the system matrices: every entry is named "P_i(r)"
// (meaning P_i(t, t^r M^2)), "0" or "-1". Used to compare the constructed
// matrices with the d = 3 reference layout.

#include <string>
#include <vector>

#include "ajcable/annihilator.hpp"

namespace ajcable {

using SymbolicMatrix = std::vector<std::vector<std::string>>;

struct NamedLayout {
  std::string name;
  SymbolicMatrix entries;
};

/// P_i = (i + 2) + M, so each shifted entry (i + 2) + t^r M^2 is recognizable.
CoeffFamily tagged_family(int d);

/// Names the entries of a matrix built from tagged_family; "?" when an entry
/// is not of the expected shape.
SymbolicMatrix symbolic(const PolyMatrix& m);

/// D, N, A_1..A_3 and B_1..B_3 for d = 3 as published.
std::vector<NamedLayout> reference_d3_layouts();

/// The same matrices built from tagged_family(3).
std::vector<NamedLayout> built_d3_layouts();

struct LayoutMismatch {
  std::string matrix;
  std::size_t row;
  std::size_t col;
  std::string expected;
  std::string actual;
};

/// Entry-by-entry comparison, in reference order.
std::vector<LayoutMismatch> compare_layouts(const std::vector<NamedLayout>& expected,
                                            const std::vector<NamedLayout>& actual);

}  // namespace ajcable
