#pragma once

// Exact sparse polynomials in t, M (both Laurent) and L (non-negative powers)
// over arbitrary-precision integers.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ajcable {

using Integer = mpz_class;

/// Exponent triple of a monomial t^t * M^m * L^l.
struct Exponent {
  int t = 0;
  int m = 0;
  int l = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// A monomial key packs (l, m, t) so that integer order on keys is the
/// lexicographic order on (e_L, e_M, e_t). Product of monomials is key
/// addition minus a bias.
class MonomialKey {
 public:
  static constexpr int kBits = 21;
  static constexpr int kOffset = 1 << (kBits - 1);
  static constexpr int kMaxL = (1 << (64 - 2 * kBits)) - 1;
  static constexpr int kMinTM = -kOffset;
  static constexpr int kMaxTM = kOffset - 1;

  constexpr MonomialKey() = default;
  explicit MonomialKey(const Exponent& e);

  Exponent exponent() const noexcept;
  int t() const noexcept { return static_cast<int>(raw_ & kMask) - kOffset; }
  int m() const noexcept { return static_cast<int>((raw_ >> kBits) & kMask) - kOffset; }
  int l() const noexcept { return static_cast<int>(raw_ >> (2 * kBits)); }
  std::uint64_t raw() const noexcept { return raw_; }

  static MonomialKey from_raw(std::uint64_t raw) noexcept {
    MonomialKey k;
    k.raw_ = raw;
    return k;
  }
  /// Key of the product monomial. Caller guarantees the result is in range.
  static MonomialKey product(MonomialKey a, MonomialKey b) noexcept {
    return from_raw(a.raw_ + b.raw_ - kBias);
  }

  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;

 private:
  static constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;
  static constexpr std::uint64_t kBias =
      (static_cast<std::uint64_t>(kOffset) << kBits) | static_cast<std::uint64_t>(kOffset);
  std::uint64_t raw_ = kBias;
};

struct Term {
  MonomialKey key;
  Integer coeff;

  Exponent exponent() const noexcept { return key.exponent(); }
  friend bool operator==(const Term& a, const Term& b) {
    return a.key == b.key && a.coeff == b.coeff;
  }
};

class Poly;

/// ±t^e_t M^e_m: the units of Z[t^±1, M^±1].
struct Unit {
  int sign = 1;
  int e_t = 0;
  int e_m = 0;

  Poly to_poly() const;
  Unit inverse() const noexcept { return {sign, -e_t, -e_m}; }

  friend Unit operator*(const Unit& a, const Unit& b) noexcept {
    return {a.sign * b.sign, a.e_t + b.e_t, a.e_m + b.e_m};
  }
  friend bool operator==(const Unit&, const Unit&) = default;
};

std::ostream& operator<<(std::ostream& os, const Unit& u);

/// Immutable-by-convention sparse polynomial. Terms are kept sorted by
/// descending key with no zero coefficients, so equality is structural.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor): integer literals read naturally
  Poly(const Integer& c);  // NOLINT

  static Poly monomial(const Integer& c, int e_t, int e_m, int e_l);
  static Poly monomial(const Integer& c, const Exponent& e) { return monomial(c, e.t, e.m, e.l); }
  static Poly t() { return monomial(1, 1, 0, 0); }
  static Poly M() { return monomial(1, 0, 1, 0); }
  static Poly L() { return monomial(1, 0, 0, 1); }
  /// Builds from arbitrary terms: merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Term& trailing_term() const { return terms_.back(); }

  /// L-degree; -1 for the zero polynomial.
  int degree_L() const noexcept { return is_zero() ? -1 : terms_.front().key.l(); }
  int min_degree_L() const;
  int max_degree_M() const;
  int min_degree_M() const;
  int max_degree_t() const;
  int min_degree_t() const;
  bool depends_on_t() const;
  bool depends_on_L() const;
  bool is_constant() const;
  /// Coefficient of the given monomial (zero if absent).
  Integer coefficient(const Exponent& e) const;
  /// Integer gcd of coefficients, non-negative; zero for the zero poly.
  Integer content() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Multiplies by ±t^j M^k.
  Poly times(const Unit& u) const;
  Poly scaled(const Integer& c) const;
  /// Divides every coefficient by c; c must divide each exactly.
  Poly divide_integer(const Integer& c) const;

 private:
  std::vector<Term> terms_;

  static Poly adopt(std::vector<Term> sorted_nonzero);
  static Poly add_sorted(const Poly& a, const Poly& b, bool negate_b);
};

enum class ArithKind { add, sub, mul, neg, exact_div };

/// Single entry point for the ring operations; `neg` ignores `b`.
Poly arith(const Poly& a, const Poly& b, ArithKind kind);

/// Exact quotient a / b in Z[t^±1, M^±1, L]. Throws InexactDivision when b
/// does not divide a, ZeroArgument when b is zero.
Poly exact_div(const Poly& a, const Poly& b);

/// Replaces M^k by image^k, where image has its M-exponent doubled first when
/// `square` is set. With image = t^r M and square this realizes
/// p(t, M) -> p(t, t^r M^2).
Poly substitute_M(const Poly& p, const Unit& image, bool square);

/// The epsilon map t -> -1.
Poly eval_t_minus1(const Poly& p);

/// L -> -L.
Poly negate_L(const Poly& p);

/// [P_0, ..., P_d] with p = sum P_i L^i; empty for zero.
std::vector<Poly> l_coefficients(const Poly& p);

/// Inverse of l_coefficients.
Poly from_l_coefficients(std::span<const Poly> coeffs);

/// True iff f/g does not depend on L (every 2x2 cross product of L-coefficient
/// vectors vanishes). Throws ZeroArgument on zero input.
bool m_essentially_equal(const Poly& f, const Poly& g);

/// The unit u with f = u * g, if any.
std::optional<Unit> unit_equal(const Poly& f, const Poly& g);

/// Strips integer content and the common monomial factor, and makes the
/// leading coefficient positive. Returns the primitive part; `removed` (if
/// given) receives content and unit with p = content * unit * result.
Poly primitive_part(const Poly& p, Integer* content = nullptr, Unit* removed = nullptr);

/// Canonical text form: descending (e_L, e_M, e_t), e.g. "-L^5*M^26 + 2*L^4 - 1".
std::string render(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace ajcable
