#pragma once

#include <random>
#include <string>
#include <vector>

#include "ajcable/annihilator.hpp"
#include "ajcable/ring.hpp"

namespace ajcable::testing {

inline std::string data_path(const std::string& rel) { return std::string(AJCABLE_SOURCE_DIR) + "/" + rel; }

/// Sparse Laurent polynomial with small coefficients.
inline Poly random_poly(std::mt19937_64& rng, int max_terms, int t_span, int m_span, int l_max) {
  std::uniform_int_distribution<int> coeff(-4, 4), te(-t_span, t_span), me(-m_span, m_span), le(0, l_max),
      count(0, max_terms);
  Poly p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p += Poly::monomial(coeff(rng), te(rng), me(rng), le(rng));
  return p;
}

/// Nonzero polynomial in t and M with nonnegative exponents.
inline Poly random_coefficient(std::mt19937_64& rng, int max_terms, bool with_t) {
  std::uniform_int_distribution<int> coeff(-3, 3), te(0, with_t ? 3 : 0), me(0, 3), count(1, max_terms);
  Poly p;
  while (p.is_zero()) {
    const int n = count(rng);
    for (int i = 0; i < n; ++i) p += Poly::monomial(coeff(rng), te(rng), me(rng), 0);
  }
  return p;
}

inline CoeffFamily random_family(std::mt19937_64& rng, int d, int max_terms, bool with_t) {
  std::vector<Poly> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(random_coefficient(rng, max_terms, with_t));
  return CoeffFamily(std::move(coeffs));
}

/// Figure-eight A' = A / (L - 1).
inline Poly figure_eight_aprime() {
  const Poly L = Poly::L();
  auto m = [](int e) { return Poly::monomial(1, 0, e, 0); };
  return m(4) * L * L + (-m(8) + m(6) + Poly(2) * m(4) + m(2) - Poly(1)) * L + m(4);
}

}  // namespace ajcable::testing
