#include "ajcable/modp.hpp"

#include <algorithm>

#include "ajcable/errors.hpp"

namespace ajcable::modp {

std::uint64_t pow(std::uint64_t base, long long e) {
  if (e < 0) {
    base = inv(base);
    e = -e;
  }
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw ZeroArgument("inverse of zero residue");
  return pow(a, static_cast<long long>(kPrime - 2));
}

std::uint64_t from_integer(const Integer& x) {
  static const Integer p = [] {
    Integer v;
    mpz_set_ui(v.get_mpz_t(), 1);
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 61);
    return Integer(v - 1);
  }();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  // r < 2^61 fits in an unsigned long on LP64.
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

std::uint64_t from_signed(long long x) {
  if (x >= 0) return static_cast<std::uint64_t>(x) % kPrime;
  const std::uint64_t magnitude = static_cast<std::uint64_t>(-(x + 1)) + 1;
  return neg(magnitude % kPrime);
}

Integer to_signed_integer(std::uint64_t x) {
  Integer v;
  if (x > kPrime / 2) {
    mpz_set_ui(v.get_mpz_t(), kPrime - x);
    return -v;
  }
  mpz_set_ui(v.get_mpz_t(), x);
  return v;
}

std::uint64_t eval(const Poly& p, std::uint64_t tau, std::uint64_t mu, std::uint64_t lambda) {
  std::uint64_t acc = 0;
  for (const Term& term : p.terms()) {
    const Exponent e = term.exponent();
    std::uint64_t v = from_integer(term.coeff);
    if (e.t != 0) v = mul(v, pow(tau, e.t));
    if (e.m != 0) v = mul(v, pow(mu, e.m));
    if (e.l != 0) v = mul(v, pow(lambda, e.l));
    acc = add(acc, v);
  }
  return acc;
}

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw ZeroArgument("polynomial division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = mul(r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

std::uint64_t upoly_eval(const UPoly& a, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = add(mul(acc, x), a[i]);
  return acc;
}

UPoly interpolate(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys) {
  const std::size_t n = xs.size();
  std::vector<std::uint64_t> coef(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = mul(sub(coef[i], coef[i - 1]), inv(sub(xs[i], xs[i - j])));
      if (i == j) break;
    }
  }
  UPoly result;
  for (std::size_t k = n; k-- > 0;) {
    // result = result * (x - xs[k]) + coef[k]
    UPoly next(result.size() + 1, 0);
    for (std::size_t i = 0; i < result.size(); ++i) {
      next[i + 1] = add(next[i + 1], result[i]);
      next[i] = sub(next[i], mul(result[i], xs[k]));
    }
    next[0] = add(next[0], coef[k]);
    result = std::move(next);
  }
  trim(result);
  return result;
}

UPoly vanishing_poly(std::span<const std::uint64_t> xs) {
  UPoly out{1};
  for (std::uint64_t x : xs) out = upoly_mul(out, UPoly{neg(x), 1});
  return out;
}

std::optional<std::pair<UPoly, UPoly>> rational_reconstruct(const UPoly& f, const UPoly& modulus,
                                                            std::size_t num_degree) {
  UPoly r0 = modulus, r1 = f;
  trim(r1);
  UPoly s0{}, s1{1};
  auto deg = [](const UPoly& a) { return a.empty() ? -1 : static_cast<long>(a.size()) - 1; };
  while (deg(r1) > static_cast<long>(num_degree)) {
    auto [q, r] = upoly_divmod(r0, r1);
    UPoly qs = upoly_mul(q, s1);
    UPoly s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      s2[i] = sub(i < s0.size() ? s0[i] : 0, i < qs.size() ? qs[i] : 0);
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1.empty()) return std::nullopt;
  // num = s1 * f mod modulus = r1 by the Euclidean invariant.
  const std::uint64_t li = inv(s1.back());
  for (auto& c : s1) c = mul(c, li);
  for (auto& c : r1) c = mul(c, li);
  // The reconstruction is only valid when the denominator is coprime to the
  // modulus; callers verify by evaluation on extra points.
  return std::make_pair(r1, s1);
}

std::optional<std::pair<Integer, Integer>> rational_reconstruct_integer(std::uint64_t x) {
  // Bound sqrt(p / 2) ~ 2^30.
  const std::int64_t bound = std::int64_t{1} << 30;
  std::int64_t r0 = static_cast<std::int64_t>(kPrime), r1 = static_cast<std::int64_t>(x);
  __int128 s0 = 0, s1 = 1;
  while (r1 >= bound) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    const __int128 s2 = s0 - static_cast<__int128>(q) * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0) return std::nullopt;
  __int128 den = s1;
  __int128 num = r1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den >= bound) return std::nullopt;
  if (mul(from_signed(static_cast<long long>(den)), x) !=
      from_signed(static_cast<long long>(num))) {
    return std::nullopt;
  }
  const long long n = static_cast<long long>(num);
  const long long d = static_cast<long long>(den);
  Integer g;
  Integer nn(static_cast<long>(n)), dd(static_cast<long>(d));
  mpz_gcd(g.get_mpz_t(), nn.get_mpz_t(), dd.get_mpz_t());
  if (g != 1) return std::nullopt;
  return std::make_pair(nn, dd);
}

Kernel kernel(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[rank]);
    const std::uint64_t pi = inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = mul(v, pi);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = sub(rows[r][k], mul(f, rows[rank][k]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  Kernel out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = neg(rows[i][free]);
    out.basis.push_back(std::move(v));
    out.free_columns.push_back(free);
  }
  return out;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
  }
  return a;
}

}  // namespace ajcable::modp
