#include "ajcable/cabling.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ajcable/errors.hpp"
#include "ajcable/matrix.hpp"
#include "ajcable/modp.hpp"

namespace ajcable {

namespace {

void trim(std::vector<Poly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

void require_odd_r(int r) {
  if (r == 0) throw ZeroR("r must be nonzero");
  if (r % 2 == 0) throw EvenR("r = " + std::to_string(r) + " is even; the (r, 2)-cable is a link");
}

void require_even_m(const Poly& A) {
  for (const Term& term : A.terms()) {
    if (term.key.m() % 2 != 0) {
      throw OddMPower("A-polynomial has the odd M-power " + std::to_string(term.key.m()));
    }
  }
}

// ---- univariate integer polynomials (ascending coefficients) ----

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const Integer& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  const Integer g = zcontent(a);
  for (Integer& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (sgn(a.back()) < 0) {
    for (Integer& c : a) c = -c;
  }
  return a;
}

/// Pseudo-remainder of a by b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  ztrim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Integer lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (Integer& c : a) c *= b.back();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    ztrim(a);
  }
  return a;
}

/// gcd over Q[x], returned primitive with positive leading coefficient.
ZPoly zgcd(ZPoly a, ZPoly b) {
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zprimitive(zprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// A t-free Laurent polynomial in M as ascending coefficients after
/// multiplying by M^{-shift}.
ZPoly to_zpoly(const Poly& p, int shift) {
  ZPoly out;
  for (const Term& term : p.terms()) {
    const std::size_t k = static_cast<std::size_t>(term.key.m() - shift);
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] += term.coeff;
  }
  ztrim(out);
  return out;
}

Poly from_zpoly(const ZPoly& a) {
  Poly out;
  for (std::size_t k = 0; k < a.size(); ++k) out += Poly::monomial(a[k], 0, static_cast<int>(k), 0);
  return out;
}

// ---- dense polynomials over a small prime field ----

using FPoly = std::vector<long>;

void ftrim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long fmod_pos(long x, long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

long finv(long a, long p) {
  long result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

FPoly fmulmod(const FPoly& a, const FPoly& b, const FPoly& m, long p) {
  if (a.empty() || b.empty()) return {};
  FPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // m is monic.
  const std::size_t dm = m.size() - 1;
  for (std::size_t k = prod.size(); k-- > dm;) {
    const long c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) prod[k - dm + i] = fmod_pos(prod[k - dm + i] - c * m[i], p);
  }
  prod.resize(std::min(prod.size(), dm));
  ftrim(prod);
  return prod;
}

FPoly fgcd(FPoly a, FPoly b, long p) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    const long li = finv(b.back(), p);
    while (a.size() >= b.size()) {
      const long c = a.back() * li % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = fmod_pos(a[shift + i] - c * b[i], p);
      ftrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

/// Ben-Or: a monic f of degree n is irreducible over F_p iff
/// gcd(f, x^{p^i} - x) = 1 for 1 <= i <= n/2.
bool irreducible_mod_p(const FPoly& f, long p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  FPoly x{0, 1};
  FPoly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    FPoly base = h, acc{1};
    for (long e = p; e > 0; e >>= 1) {
      if (e & 1) acc = fmulmod(acc, base, f, p);
      base = fmulmod(base, base, f, p);
    }
    h = acc;
    FPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = fmod_pos(diff[1] - 1, p);
    ftrim(diff);
    if (diff.empty()) return false;
    if (fgcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<Integer> small_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer a = abs(n);
  if (a == 0) return out;
  for (long k = 1; k <= 1000 && k <= a; ++k) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(k))) out.push_back(Integer(k));
  }
  return out;
}

}  // namespace

Poly sylvester_resultant(const std::vector<Poly>& f_in, const std::vector<Poly>& g_in) {
  std::vector<Poly> f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) throw ZeroArgument("resultant of a zero polynomial");
  const std::size_t n = f.size() - 1;
  const std::size_t m = g.size() - 1;
  if (n == 0 && m == 0) throw BothConstant("resultant needs a nonconstant argument");
  PolyMatrix S(n + m, n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i <= n; ++i) S(j + n - i, j) = f[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= m; ++i) S(j + m - i, m + j) = g[i];
  }
  return det_bareiss(S);
}

Poly sylvester_resultant(const Poly& f, const Poly& g) {
  return sylvester_resultant(l_coefficients(f), l_coefficients(g));
}

Poly resultant_quadratic(const Poly& P) {
  const std::vector<Poly> coeffs = l_coefficients(P);
  const int d = static_cast<int>(coeffs.size()) - 1;
  Poly out;
  for (int i = 0; i <= d; ++i) {
    Poly s;
    for (int k = std::max(0, 2 * i - d); k <= std::min(d, 2 * i); ++k) {
      const Poly term = coeffs[static_cast<std::size_t>(k)] * coeffs[static_cast<std::size_t>(2 * i - k)];
      if (k % 2 == 0) {
        s += term;
      } else {
        s -= term;
      }
    }
    out += s * Poly::monomial(1, 0, 0, i);
  }
  return out;
}

Poly f_r(int r) {
  require_odd_r(r);
  if (r > 0) return Poly::monomial(1, 0, 2 * r, 1) + Poly(1);
  return Poly::L() + Poly::monomial(1, 0, -2 * r, 0);
}

Poly cable_apolynomial(const Poly& A, int r) {
  const Poly F = f_r(r);
  require_even_m(A);
  return F * resultant_quadratic(substitute_M(A, Unit{1, 0, 1}, true));
}

RWindow::RWindow(int eta_plus, int eta_minus) : eta_plus_(eta_plus), eta_minus_(eta_minus) {
  if (eta_plus < 0 || eta_minus < 0) throw std::invalid_argument("crossing counts must be >= 0");
}

bool RWindow::test(long long r) const noexcept {
  if (r % 2 == 0) return false;
  const long long a = r + 4LL * eta_minus_;
  const long long b = r - 4LL * eta_plus_;
  return (a > 0 && b > 0) || (a < 0 && b < 0);
}

std::string RWindow::describe() const {
  auto factor = [](int shift) {
    if (shift == 0) return std::string("r");
    return std::string("(r ") + (shift > 0 ? "+ " : "- ") + std::to_string(std::abs(shift)) + ")";
  };
  return factor(-upper()) + factor(-lower()) + " > 0, r odd";
}

std::string RWindow::bounds() const {
  return "r > " + std::to_string(upper()) + " or r < " + std::to_string(lower()) + ", r odd";
}

RWindow admissible_r(int eta_plus, int eta_minus) { return RWindow(eta_plus, eta_minus); }

const char* to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::certified:
      return "certified";
    case Irreducibility::refuted:
      return "refuted";
    case Irreducibility::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ConditionIIReport condition_ii_checks(const Poly& aprime) {
  if (aprime.is_zero()) throw ZeroArgument("condition_ii_checks needs a nonzero polynomial");
  ConditionIIReport rep;
  rep.symmetry = negate_L(aprime) != aprime;
  if (aprime.depends_on_t()) {
    rep.detail = "input depends on t";
    return rep;
  }
  const int d = aprime.degree_L();
  if (d == 0) {
    rep.detail = "no L-dependence";
    return rep;
  }
  if (aprime.min_degree_L() > 0) {
    rep.q_irreducibility = Irreducibility::refuted;
    rep.detail = "factor L^" + std::to_string(aprime.min_degree_L());
    return rep;
  }

  const std::vector<Poly> coeffs = l_coefficients(aprime);
  const int shift = aprime.min_degree_M();
  std::vector<ZPoly> zc;
  for (const Poly& c : coeffs) zc.push_back(to_zpoly(c, shift));

  ZPoly content;
  for (const ZPoly& c : zc) {
    if (!c.empty()) content = content.empty() ? zprimitive(c) : zgcd(content, c);
  }
  // Strip the power of M, which is a unit.
  std::size_t low = 0;
  while (low < content.size() && sgn(content[low]) == 0) ++low;
  content.erase(content.begin(), content.begin() + static_cast<long>(low));
  if (content.size() > 1) {
    rep.q_irreducibility = Irreducibility::refuted;
    rep.detail = "nontrivial M-content " + render(from_zpoly(content));
    return rep;
  }

  // Factor linear in L with monomial coefficients: u*L - v*M^k.
  const Integer& lead = coeffs.back().leading_term().coeff;
  const Integer& trail = coeffs.front().leading_term().coeff;
  const int span = aprime.max_degree_M() - aprime.min_degree_M();
  constexpr std::uint64_t kProbe = 1000003;
  std::vector<std::uint64_t> probe_values;
  for (const Poly& c : coeffs) probe_values.push_back(modp::eval(c, 1, kProbe));
  for (const Integer& u : small_divisors(lead)) {
    for (const Integer& v0 : small_divisors(trail)) {
      for (int sign : {1, -1}) {
        const Integer v = v0 * sign;
        for (int k = -span; k <= span; ++k) {
          // u^d * A'(M, (v/u) M^k) = sum P_i v^i u^{d-i} M^{ki}; screened
          // at one modular point before the exact check.
          const std::uint64_t mu_k = modp::pow(kProbe, k);
          const std::uint64_t ur = modp::from_integer(u), vr = modp::from_integer(v);
          std::uint64_t probe = 0;
          for (int i = 0; i <= d; ++i) {
            std::uint64_t term = modp::mul(probe_values[static_cast<std::size_t>(i)],
                                           modp::mul(modp::pow(modp::mul(vr, mu_k), i),
                                                     modp::pow(ur, d - i)));
            probe = modp::add(probe, term);
          }
          if (probe != 0) continue;
          Poly value;
          for (int i = 0; i <= d; ++i) {
            Integer vp, up;
            mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(i));
            mpz_pow_ui(up.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(d - i));
            value += coeffs[static_cast<std::size_t>(i)].scaled(vp * up) *
                     Poly::monomial(1, 0, k * i, 0);
          }
          if (value.is_zero()) {
            rep.q_irreducibility = Irreducibility::refuted;
            rep.detail = "factor " + render(Poly::monomial(u, 0, 0, 1) - Poly::monomial(v, 0, k, 0));
            return rep;
          }
        }
      }
    }
  }

  // Specializations M = m0 (as num/den), primes in fixed order.
  const std::pair<long, long> points[] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}};
  const long primes[] = {3, 5, 7, 11, 13};
  for (const auto& [num, den] : points) {
    std::vector<Integer> specialised;
    for (const ZPoly& c : zc) {
      // den^deg * c(num/den) with deg the common M-degree bound.
      const std::size_t deg = static_cast<std::size_t>(span);
      Integer acc = 0, npow = 1;
      std::vector<Integer> dpow(deg + 1, 1);
      for (std::size_t k = 1; k <= deg; ++k) dpow[k] = dpow[k - 1] * den;
      for (std::size_t k = 0; k < c.size(); ++k) {
        acc += c[k] * npow * dpow[deg - k];
        npow *= num;
      }
      specialised.push_back(acc);
    }
    if (sgn(specialised.back()) == 0) continue;
    for (long p : primes) {
      if (mpz_divisible_ui_p(specialised.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
      FPoly f;
      for (const Integer& c : specialised) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        f.push_back(r.get_si());
      }
      const long li = finv(f.back(), p);
      for (long& c : f) c = c * li % p;
      if (irreducible_mod_p(f, p)) {
        rep.q_irreducibility = Irreducibility::certified;
        std::ostringstream os;
        os << "M = " << num;
        if (den != 1) os << "/" << den;
        os << ", p = " << p << ": irreducible of degree " << d;
        rep.detail = os.str();
        return rep;
      }
    }
  }
  rep.detail = "no certifying specialization among M in {1, 2, 3, 1/2}, p in {3, 5, 7, 11, 13}";
  return rep;
}

OreOp cable_jones_operator(const OreOp& beta, int r) {
  require_odd_r(r);
  OreOp mult;
  mult.set_coefficient(1, Poly::monomial(1, 0, r, 0));
  mult.set_coefficient(0, Poly::monomial(1, -2 * r, -r, 0));
  return ore_multiply(beta, mult);
}

}  // namespace ajcable
