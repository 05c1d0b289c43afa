#pragma once

// Normal-ordered operators sum a_i(t, M) L^i in the quantum torus, where
// L M = t^2 M L.

#include <map>
#include <string>
#include <vector>

#include "ajcable/ring.hpp"

namespace ajcable {

class OreOp {
 public:
  OreOp() = default;
  /// Reads a commutative Poly as the normal-ordered operator with the same
  /// coefficients (M-powers to the left).
  static OreOp from_poly(const Poly& p);
  static OreOp from_coefficients(const std::vector<Poly>& coeffs);

  /// Coefficient of L^i; zero when absent.
  Poly coefficient(int i) const;
  void set_coefficient(int i, Poly c);
  const std::map<int, Poly>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// L-degree; -1 for zero.
  int degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  /// The commutative Poly with the same normal-ordered coefficients.
  Poly to_poly() const;

  friend OreOp operator+(const OreOp& a, const OreOp& b);
  friend OreOp operator-(const OreOp& a, const OreOp& b);
  friend bool operator==(const OreOp&, const OreOp&) = default;

 private:
  std::map<int, Poly> coeffs_;
};

/// Normal-ordered product using L^i M^k = t^{2ik} M^k L^i.
OreOp ore_multiply(const OreOp& a, const OreOp& b);

/// The t = -1 image, a commutative Poly in M and L.
Poly epsilon(const OreOp& op);

std::string render(const OreOp& op);

}  // namespace ajcable
