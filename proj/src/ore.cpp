#include "ajcable/ore.hpp"

#include "ajcable/errors.hpp"

namespace ajcable {

OreOp OreOp::from_poly(const Poly& p) {
  return from_coefficients(l_coefficients(p));
}

OreOp OreOp::from_coefficients(const std::vector<Poly>& coeffs) {
  OreOp op;
  for (std::size_t i = 0; i < coeffs.size(); ++i) op.set_coefficient(static_cast<int>(i), coeffs[i]);
  return op;
}

Poly OreOp::coefficient(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Poly() : it->second;
}

void OreOp::set_coefficient(int i, Poly c) {
  if (i < 0) throw ExponentOverflow("negative L-power in operator");
  if (c.depends_on_L()) throw InvalidFamily("operator coefficient depends on L");
  if (c.is_zero()) {
    coeffs_.erase(i);
  } else {
    coeffs_[i] = std::move(c);
  }
}

Poly OreOp::to_poly() const {
  Poly out;
  for (const auto& [i, c] : coeffs_) out += c * Poly::monomial(1, 0, 0, i);
  return out;
}

OreOp operator+(const OreOp& a, const OreOp& b) {
  OreOp out = a;
  for (const auto& [i, c] : b.coeffs_) out.set_coefficient(i, out.coefficient(i) + c);
  return out;
}

OreOp operator-(const OreOp& a, const OreOp& b) {
  OreOp out = a;
  for (const auto& [i, c] : b.coeffs_) out.set_coefficient(i, out.coefficient(i) - c);
  return out;
}

namespace {

/// L^i applied to the left of b(t, M): M^k picks up t^{2ik}.
Poly commute_past_L(const Poly& b, int i) {
  if (i == 0) return b;
  std::vector<Term> out;
  out.reserve(b.size());
  for (const Term& term : b.terms()) {
    const Exponent e = term.exponent();
    out.push_back({MonomialKey(Exponent{e.t + 2 * i * e.m, e.m, e.l}), term.coeff});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

OreOp ore_multiply(const OreOp& a, const OreOp& b) {
  std::map<int, Poly> acc;
  for (const auto& [i, ai] : a.coefficients()) {
    for (const auto& [j, bj] : b.coefficients()) acc[i + j] += ai * commute_past_L(bj, i);
  }
  OreOp out;
  for (auto& [k, c] : acc) out.set_coefficient(k, std::move(c));
  return out;
}

Poly epsilon(const OreOp& op) { return eval_t_minus1(op.to_poly()); }

std::string render(const OreOp& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (auto it = op.coefficients().rbegin(); it != op.coefficients().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + render(it->second) + ")";
    if (it->first == 1) out += "*L";
    if (it->first > 1) out += "*L^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace ajcable
