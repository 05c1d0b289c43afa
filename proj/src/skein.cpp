#include "ajcable/skein.hpp"

#include <numeric>
#include <random>

#include "ajcable/errors.hpp"
#include "ajcable/modp.hpp"

namespace ajcable {

namespace {

using modp::add;
using modp::inv;
using modp::mul;
using modp::neg;
using modp::sub;

std::uint64_t signed_unit(long long e) { return e % 2 == 0 ? 1 : modp::kPrime - 1; }

/// Recoupling quantities at one value of A modulo 2^61 - 1.
class Recoupling {
 public:
  explicit Recoupling(std::uint64_t A) : A_(A) {
    const std::uint64_t a2 = mul(A, A);
    const std::uint64_t a2i = inv(a2);
    const std::uint64_t denom_inv = inv(sub(a2, a2i));
    // [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}); factorials up to a safe bound.
    std::uint64_t up = 1, down = 1;
    factorial_.push_back(1);
    for (int n = 1; n <= kMaxIndex; ++n) {
      up = mul(up, a2);
      down = mul(down, a2i);
      factorial_.push_back(mul(factorial_.back(), mul(sub(up, down), denom_inv)));
    }
  }

  std::uint64_t fact(int n) const { return factorial_.at(static_cast<std::size_t>(n)); }
  std::uint64_t qint(int n) const { return mul(fact(n), inv(fact(n - 1))); }

  /// Loop value of the n-strand projector: (-1)^n [n+1].
  std::uint64_t delta(int n) const { return mul(signed_unit(n), qint(n + 1)); }

  std::uint64_t theta(int a, int b, int c) const {
    const int i = (a + b - c) / 2, j = (b + c - a) / 2, k = (a + c - b) / 2;
    const std::uint64_t num = mul(mul(fact(i + j + k + 1), fact(i)), mul(fact(j), fact(k)));
    const std::uint64_t den = mul(mul(fact(i + j), fact(j + k)), fact(i + k));
    return mul(signed_unit(i + j + k), mul(num, inv(den)));
  }

  /// Tetrahedral network with edges a, b, e / c, d, f.
  std::uint64_t tet(int a, int b, int e, int c, int d, int f) const {
    const int as[4] = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
    const int bs[3] = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
    std::uint64_t inner = 1;
    for (int x : as) {
      for (int y : bs) inner = mul(inner, fact(y - x));
    }
    std::uint64_t edges = 1;
    for (int x : {a, b, c, d, e, f}) edges = mul(edges, fact(x));
    const int lo = *std::max_element(std::begin(as), std::end(as));
    const int hi = *std::min_element(std::begin(bs), std::end(bs));
    std::uint64_t sum = 0;
    for (int s = lo; s <= hi; ++s) {
      std::uint64_t den = 1;
      for (int x : as) den = mul(den, fact(s - x));
      for (int y : bs) den = mul(den, fact(y - s));
      sum = add(sum, mul(signed_unit(s), mul(fact(s + 1), inv(den))));
    }
    return mul(mul(inner, inv(edges)), sum);
  }

  /// Recoupling coefficient {a b i; c d j}.
  std::uint64_t sixj(int a, int b, int i, int c, int d, int j) const {
    return mul(mul(tet(a, b, i, c, d, j), delta(i)), inv(mul(theta(a, d, i), theta(b, c, i))));
  }

  /// Half-twist eigenvalue on the channel c of a (x) b.
  std::uint64_t twist(int a, int b, int c) const {
    const long long e = (static_cast<long long>(c) * (c + 2) - a * (a + 2) - b * (b + 2)) / 2;
    return mul(signed_unit((a + b - c) / 2), modp::pow(A_, e));
  }

  /// Framing factor of a full curl on an a-colored strand: (-1)^a A^{a(a+2)}.
  std::uint64_t curl(int a) const {
    return mul(signed_unit(a), modp::pow(A_, static_cast<long long>(a) * (a + 2)));
  }

  static bool admissible(int a, int b, int c) {
    return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
  }

 private:
  static constexpr int kMaxIndex = 64;
  std::uint64_t A_;
  std::vector<std::uint64_t> factorial_;
};

using Mat = std::vector<std::vector<std::uint64_t>>;

Mat matmul(const Mat& x, const Mat& y) {
  const std::size_t n = x.size();
  Mat out(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = add(out[i][j], mul(x[i][l], y[l][j]));
    }
  }
  return out;
}

Mat matinv(Mat x) {
  const std::size_t n = x.size();
  Mat out(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && x[p][c] == 0) ++p;
    if (p == n) throw InternalInvariant("singular recoupling matrix");
    std::swap(x[p], x[c]);
    std::swap(out[p], out[c]);
    const std::uint64_t iv = inv(x[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      x[c][j] = mul(x[c][j], iv);
      out[c][j] = mul(out[c][j], iv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || x[r][c] == 0) continue;
      const std::uint64_t f = x[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        x[r][j] = sub(x[r][j], mul(f, x[c][j]));
        out[r][j] = sub(out[r][j], mul(f, out[c][j]));
      }
    }
  }
  return out;
}

/// Closure of the colored 2-braid sigma_1^3 (positive trefoil).
std::uint64_t trefoil_value(int a, std::uint64_t A) {
  const Recoupling R(A);
  std::uint64_t bracket = 0;
  for (int c = 0; c <= 2 * a; c += 2) {
    bracket = add(bracket, mul(R.delta(c), modp::pow(R.twist(a, a, c), 3)));
  }
  const std::uint64_t framed = mul(bracket, modp::pow(R.curl(a), -3));
  return mul(framed, inv(R.delta(a)));
}

/// Closure of the 3-braid sigma_1 sigma_2^{-1} sigma_1 sigma_2^{-1}. The
/// fusion basis e_i (strands 1, 2 fused to i, then with strand 3 to k)
/// diagonalizes sigma_1; sigma_2 is diagonal in the basis fusing strands 2, 3
/// first, related by the recoupling matrix F. Writhe is 0.
std::uint64_t figure_eight_value(int a, std::uint64_t A) {
  const Recoupling R(A);
  std::uint64_t bracket = 0;
  for (int k = 0; k <= 3 * a; ++k) {
    std::vector<int> channels;
    for (int i = 0; i <= 2 * a; i += 2) {
      if (Recoupling::admissible(i, a, k)) channels.push_back(i);
    }
    if (channels.empty()) continue;
    const std::size_t m = channels.size();
    Mat F(m, std::vector<std::uint64_t>(m));
    Mat d1(m, std::vector<std::uint64_t>(m, 0));
    Mat d2_inv(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) F[x][y] = R.sixj(a, a, channels[y], a, k, channels[x]);
      d1[x][x] = R.twist(a, a, channels[x]);
      d2_inv[x][x] = inv(R.twist(a, a, channels[x]));
    }
    const Mat s2_inv = matmul(matmul(matinv(F), d2_inv), F);
    const Mat word = matmul(matmul(matmul(d1, s2_inv), d1), s2_inv);
    std::uint64_t trace = 0;
    for (std::size_t x = 0; x < m; ++x) trace = add(trace, word[x][x]);
    bracket = add(bracket, mul(R.delta(k), trace));
  }
  return mul(bracket, inv(R.delta(a)));
}

/// Recovers a Laurent polynomial in A from its values by interpolating
/// A^{K/2} f(A), doubling K until held-out points agree.
template <class Eval>
Poly interpolate_laurent(Eval&& eval, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, modp::kPrime - 1);
  constexpr std::size_t kExtra = 4;
  for (std::size_t K = 32; K <= 4096; K *= 2) {
    std::vector<std::uint64_t> xs, ys;
    const long long half = static_cast<long long>(K / 2);
    for (std::size_t s = 0; s < K + kExtra; ++s) {
      const std::uint64_t x = dist(rng);
      xs.push_back(x);
      ys.push_back(mul(modp::pow(x, half), eval(x)));
    }
    const modp::UPoly g = modp::interpolate(std::span(xs.data(), K), std::span(ys.data(), K));
    bool ok = true;
    for (std::size_t s = K; s < K + kExtra && ok; ++s) ok = modp::upoly_eval(g, xs[s]) == ys[s];
    if (!ok) continue;
    std::vector<Term> terms;
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (g[e] == 0) continue;
      const int a_exp = static_cast<int>(static_cast<long long>(e) - half);
      // t = A^{-1}
      terms.push_back({MonomialKey(Exponent{-a_exp, 0, 0}), modp::to_signed_integer(g[e])});
    }
    return Poly::from_terms(std::move(terms));
  }
  throw InternalInvariant("colored Jones interpolation did not stabilize");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

FixtureKnot fixture_knot_from_name(const std::string& name) {
  if (name == "0_1" || name == "unknot") return FixtureKnot::unknot;
  if (name == "3_1" || name == "trefoil") return FixtureKnot::trefoil;
  if (name == "4_1" || name == "figure_eight" || name == "figure-eight") return FixtureKnot::figure_eight;
  throw UnsupportedKnot("no skein fixture for knot '" + name + "'");
}

Poly colored_jones_fixture(FixtureKnot knot, int n) {
  if (n < 1) throw ColorTooLarge("color must be >= 1, got " + std::to_string(n));
  if (n > kMaxFixtureColor) {
    throw ColorTooLarge("skein fixture limited to color " + std::to_string(kMaxFixtureColor) +
                        ", got " + std::to_string(n));
  }
  const int a = n - 1;
  switch (knot) {
    case FixtureKnot::unknot:
      return Poly(1);
    case FixtureKnot::trefoil:
      return interpolate_laurent([a](std::uint64_t A) { return trefoil_value(a, A); }, 31 + n);
    case FixtureKnot::figure_eight:
      return interpolate_laurent([a](std::uint64_t A) { return figure_eight_value(a, A); }, 41 + n);
  }
  throw UnsupportedKnot("unknown fixture knot");
}

PDCode fixture_pd(FixtureKnot knot) {
  switch (knot) {
    case FixtureKnot::unknot:
      return {};
    case FixtureKnot::trefoil:
      return {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}};
    case FixtureKnot::figure_eight:
      return {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
  }
  throw UnsupportedKnot("unknown fixture knot");
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (const auto& x : pd) {
    const int j = x[1], l = x[3];
    // Over-strand runs j -> l or l -> j; label order decides the sign.
    w += (j - l == 1 || l - j > 1) ? 1 : -1;
  }
  return w;
}

Poly bracket_jones(const PDCode& pd) {
  if (pd.empty()) return Poly(1);
  int max_label = 0;
  for (const auto& x : pd) {
    for (int v : x) max_label = std::max(max_label, v);
  }
  // Work in A (stored as the t slot) and map t = A^{-1} at the end.
  const Poly A = Poly::t();
  const Poly delta = -(Poly::monomial(1, 2, 0, 0) + Poly::monomial(1, -2, 0, 0));
  const std::size_t c = pd.size();
  Poly bracket;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    UnionFind uf(max_label + 1);
    int a_count = 0;
    for (std::size_t i = 0; i < c; ++i) {
      const auto& x = pd[i];
      if (state >> i & 1) {
        uf.unite(x[0], x[3]);
        uf.unite(x[1], x[2]);
      } else {
        uf.unite(x[0], x[1]);
        uf.unite(x[2], x[3]);
        ++a_count;
      }
    }
    int loops = 0;
    for (int v = 1; v <= max_label; ++v) loops += uf.find(v) == v ? 1 : 0;
    Poly term = Poly::monomial(1, a_count - (static_cast<int>(c) - a_count), 0, 0);
    for (int k = 1; k < loops; ++k) term *= delta;
    bracket += term;
  }
  const int w = writhe(pd);
  Poly normalized = bracket * Poly::monomial(w % 2 == 0 ? 1 : -1, -3 * w, 0, 0);
  std::vector<Term> flipped;
  for (const Term& term : normalized.terms()) {
    flipped.push_back({MonomialKey(Exponent{-term.key.t(), 0, 0}), term.coeff});
  }
  return Poly::from_terms(std::move(flipped));
}

Poly figure_eight_cyclotomic(int n) {
  if (n < 1) throw ColorTooLarge("color must be >= 1");
  const Poly qn_sum = Poly::monomial(1, 4 * n, 0, 0) + Poly::monomial(1, -4 * n, 0, 0);
  Poly sum(1), prod(1);
  for (int k = 1; k < n; ++k) {
    prod *= qn_sum - Poly::monomial(1, 4 * k, 0, 0) - Poly::monomial(1, -4 * k, 0, 0);
    sum += prod;
  }
  return sum;
}

std::uint64_t figure_eight_cyclotomic_mod(int n, std::uint64_t tau) {
  const std::uint64_t q = modp::pow(tau, 4);
  const std::uint64_t qi = inv(q);
  const std::uint64_t qn = modp::pow(q, n);
  const std::uint64_t qn_sum = add(qn, inv(qn));
  std::uint64_t sum = 1, prod = 1, qk = 1, qki = 1;
  for (int k = 1; k < n; ++k) {
    qk = mul(qk, q);
    qki = mul(qki, qi);
    prod = mul(prod, sub(qn_sum, add(qk, qki)));
    sum = add(sum, prod);
  }
  return sum;
}

SequenceOracle figure_eight_sequence() {
  return SequenceOracle("4_1 cyclotomic", figure_eight_cyclotomic, figure_eight_cyclotomic_mod);
}

SequenceOracle skein_sequence(FixtureKnot knot) {
  const char* name = knot == FixtureKnot::unknot    ? "0_1 skein"
                     : knot == FixtureKnot::trefoil ? "3_1 skein"
                                                    : "4_1 skein";
  return SequenceOracle(name, [knot](int n) { return colored_jones_fixture(knot, n); });
}

}  // namespace ajcable
