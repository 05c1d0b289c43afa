#pragma once

// Arithmetic modulo the Mersenne prime 2^61 - 1 and the reconstruction tools
// that lift modular images back to exact integers and polynomials.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ajcable/ring.hpp"

namespace ajcable::modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) noexcept {
  std::uint64_t lo = static_cast<std::uint64_t>(x & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  // s < 2^62 + 2^61; two conditional subtractions cover the range.
  if (s >= kPrime) s -= kPrime;
  if (s >= kPrime) s -= kPrime;
  return s;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept {
  return a >= b ? a - b : a + kPrime - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
  return reduce(static_cast<unsigned __int128>(a) * b);
}
inline std::uint64_t neg(std::uint64_t a) noexcept { return a == 0 ? 0 : kPrime - a; }

std::uint64_t pow(std::uint64_t base, long long e);
/// Inverse of a nonzero residue.
std::uint64_t inv(std::uint64_t a);

std::uint64_t from_integer(const Integer& x);
std::uint64_t from_signed(long long x);
/// Symmetric lift to (-p/2, p/2].
Integer to_signed_integer(std::uint64_t x);

/// Value of p at t = tau, M = mu, L = lambda. Negative powers need tau, mu
/// nonzero.
std::uint64_t eval(const Poly& p, std::uint64_t tau, std::uint64_t mu, std::uint64_t lambda = 1);

/// Dense univariate polynomial, ascending coefficients, trimmed.
using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& a);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
std::uint64_t upoly_eval(const UPoly& a, std::uint64_t x);

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
UPoly interpolate(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys);

/// Rational function num/den with deg num <= num_degree and deg den <=
/// den_degree agreeing with the interpolant `f` modulo prod (x - xs), via the
/// half extended Euclidean algorithm. Denominator is made monic.
std::optional<std::pair<UPoly, UPoly>> rational_reconstruct(const UPoly& f, const UPoly& modulus,
                                                            std::size_t num_degree);

/// Wang's rational reconstruction of a residue as n/d with |n|, d below
/// sqrt(p/2).
std::optional<std::pair<Integer, Integer>> rational_reconstruct_integer(std::uint64_t x);

/// prod (x - xs[i]).
UPoly vanishing_poly(std::span<const std::uint64_t> xs);

struct Kernel {
  /// Basis of the right kernel; vector i has a 1 in free_columns[i] and 0 in
  /// the other free columns.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> free_columns;
};

/// Right kernel of a dense matrix mod p by Gauss-Jordan elimination.
Kernel kernel(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols);

/// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);

}  // namespace ajcable::modp
