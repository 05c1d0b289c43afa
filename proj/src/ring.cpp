#include "ajcable/ring.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ajcable/errors.hpp"

namespace ajcable {

namespace {

void check_exponent(long long t, long long m, long long l) {
  if (t < MonomialKey::kMinTM || t > MonomialKey::kMaxTM || m < MonomialKey::kMinTM ||
      m > MonomialKey::kMaxTM || l < 0 || l > MonomialKey::kMaxL) {
    throw ExponentOverflow("monomial exponent (" + std::to_string(t) + ", " + std::to_string(m) +
                           ", " + std::to_string(l) + ") out of range");
  }
}

struct Box {
  int min_t, max_t, min_m, max_m, min_l, max_l;
};

Box box_of(const Poly& p) {
  Box b{0, 0, 0, 0, 0, 0};
  bool first = true;
  for (const Term& term : p.terms()) {
    const Exponent e = term.exponent();
    if (first) {
      b = {e.t, e.t, e.m, e.m, e.l, e.l};
      first = false;
      continue;
    }
    b.min_t = std::min(b.min_t, e.t);
    b.max_t = std::max(b.max_t, e.t);
    b.min_m = std::min(b.min_m, e.m);
    b.max_m = std::max(b.max_m, e.m);
    b.min_l = std::min(b.min_l, e.l);
    b.max_l = std::max(b.max_l, e.l);
  }
  return b;
}

bool desc(const Term& a, const Term& b) { return a.key > b.key; }

}  // namespace

MonomialKey::MonomialKey(const Exponent& e) {
  check_exponent(e.t, e.m, e.l);
  raw_ = (static_cast<std::uint64_t>(e.l) << (2 * kBits)) |
         (static_cast<std::uint64_t>(e.m + kOffset) << kBits) |
         static_cast<std::uint64_t>(e.t + kOffset);
}

Exponent MonomialKey::exponent() const noexcept { return {t(), m(), l()}; }

Poly Unit::to_poly() const { return Poly::monomial(sign, e_t, e_m, 0); }

std::ostream& operator<<(std::ostream& os, const Unit& u) {
  return os << (u.sign < 0 ? "-" : "+") << "t^" << u.e_t << "*M^" << u.e_m;
}

Poly::Poly(long c) : Poly(Integer(c)) {}

Poly::Poly(const Integer& c) {
  if (sgn(c) != 0) terms_.push_back({MonomialKey(Exponent{}), c});
}

Poly Poly::monomial(const Integer& c, int e_t, int e_m, int e_l) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({MonomialKey(Exponent{e_t, e_m, e_l}), c});
  return p;
}

Poly Poly::adopt(std::vector<Term> sorted_nonzero) {
  Poly p;
  p.terms_ = std::move(sorted_nonzero);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), desc);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& term : terms) {
    if (!out.empty() && out.back().key == term.key) {
      out.back().coeff += term.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return adopt(std::move(out));
}

int Poly::min_degree_L() const { return is_zero() ? -1 : box_of(*this).min_l; }
int Poly::max_degree_M() const { return box_of(*this).max_m; }
int Poly::min_degree_M() const { return box_of(*this).min_m; }
int Poly::max_degree_t() const { return box_of(*this).max_t; }
int Poly::min_degree_t() const { return box_of(*this).min_t; }

bool Poly::depends_on_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.key.t() != 0; });
}

bool Poly::depends_on_L() const { return degree_L() > 0; }

bool Poly::is_constant() const {
  return is_zero() || (terms_.size() == 1 && terms_.front().key == MonomialKey(Exponent{}));
}

Integer Poly::coefficient(const Exponent& e) const {
  const MonomialKey key(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& a, const MonomialKey& k) { return a.key > k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return 0;
}

Integer Poly::content() const {
  Integer g = 0;
  for (const Term& term : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Term& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

Poly Poly::add_sorted(const Poly& a, const Poly& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->key > j->key)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->key > i->key) {
      out.push_back({j->key, negate_b ? Integer(-j->coeff) : j->coeff});
      ++j;
    } else {
      Integer c = negate_b ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
      if (sgn(c) != 0) out.push_back({i->key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return adopt(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) { return *this = add_sorted(*this, o, false); }
Poly& Poly::operator-=(const Poly& o) { return *this = add_sorted(*this, o, true); }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Integer& c) const {
  if (sgn(c) == 0) return {};
  Poly r = *this;
  for (Term& term : r.terms_) term.coeff *= c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Box ba = box_of(a);
  const Box bb = box_of(b);
  check_exponent(ba.min_t + bb.min_t, ba.min_m + bb.min_m, 0);
  check_exponent(ba.max_t + bb.max_t, ba.max_m + bb.max_m, ba.max_l + bb.max_l);

  if (a.size() == 1 || b.size() == 1) {
    const Poly& mono = a.size() == 1 ? a : b;
    const Poly& other = a.size() == 1 ? b : a;
    const Term& m = mono.terms_.front();
    std::vector<Term> out;
    out.reserve(other.size());
    // Multiplying by a monomial preserves the term order.
    for (const Term& term : other.terms_) {
      out.push_back({MonomialKey::product(term.key, m.key), term.coeff * m.coeff});
    }
    return Poly::adopt(std::move(out));
  }

  std::unordered_map<std::uint64_t, Integer> acc;
  acc.reserve(a.size() * b.size());
  Integer prod;
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      mpz_mul(prod.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
      acc[MonomialKey::product(x.key, y.key).raw()] += prod;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [raw, c] : acc) {
    if (sgn(c) != 0) out.push_back({MonomialKey::from_raw(raw), std::move(c)});
  }
  std::sort(out.begin(), out.end(), desc);
  return Poly::adopt(std::move(out));
}

Poly Poly::times(const Unit& u) const {
  return *this * Poly::monomial(u.sign, u.e_t, u.e_m, 0);
}

Poly Poly::divide_integer(const Integer& c) const {
  if (sgn(c) == 0) throw ZeroArgument("division by zero integer");
  Poly r = *this;
  for (Term& term : r.terms_) {
    if (!mpz_divisible_p(term.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw InexactDivision("integer " + c.get_str() + " does not divide coefficient " +
                            term.coeff.get_str());
    }
    mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroArgument("exact_div by zero polynomial");
  if (a.is_zero()) return {};
  const Term& lead = b.leading_term();
  if (b.size() == 1) {
    const Exponent e = lead.exponent();
    std::vector<Term> out;
    out.reserve(a.size());
    for (const Term& term : a.terms()) {
      const Exponent x = term.exponent();
      if (x.l < e.l || !mpz_divisible_p(term.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
        throw InexactDivision("monomial divisor does not divide every term");
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), term.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
      out.push_back({MonomialKey(Exponent{x.t - e.t, x.m - e.m, x.l - e.l}), std::move(q)});
    }
    return Poly::from_terms(std::move(out));
  }

  // Any exact quotient has exponents inside this box, since extreme degrees
  // in each variable add under multiplication in a domain.
  const Box ba = box_of(a);
  const Box bb = box_of(b);
  const Box q_box{ba.min_t - bb.min_t, ba.max_t - bb.max_t, ba.min_m - bb.min_m,
                  ba.max_m - bb.max_m, ba.min_l - bb.min_l, ba.max_l - bb.max_l};
  if (q_box.min_t > q_box.max_t || q_box.min_m > q_box.max_m || q_box.min_l > q_box.max_l ||
      q_box.min_l < 0) {
    throw InexactDivision("degree bounds exclude an exact quotient");
  }

  std::map<std::uint64_t, Integer, std::greater<>> rem;
  for (const Term& term : a.terms()) rem.emplace(term.key.raw(), term.coeff);

  const Exponent le = lead.exponent();
  std::vector<Term> quotient;
  Integer qc, prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    const Exponent re = MonomialKey::from_raw(top->first).exponent();
    const Exponent qe{re.t - le.t, re.m - le.m, re.l - le.l};
    if (qe.t < q_box.min_t || qe.t > q_box.max_t || qe.m < q_box.min_m || qe.m > q_box.max_m ||
        qe.l < q_box.min_l || qe.l > q_box.max_l ||
        !mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw InexactDivision("nonzero remainder in exact division");
    }
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    const MonomialKey qk(qe);
    for (const Term& term : b.terms()) {
      mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), term.coeff.get_mpz_t());
      auto [it, inserted] = rem.try_emplace(MonomialKey::product(qk, term.key).raw());
      it->second -= prod;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back({qk, qc});
  }
  return Poly::from_terms(std::move(quotient));
}

Poly arith(const Poly& a, const Poly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
    case ArithKind::neg:
      return -a;
    case ArithKind::exact_div:
      return exact_div(a, b);
  }
  return {};
}

Poly substitute_M(const Poly& p, const Unit& image, bool square) {
  const long long em = static_cast<long long>(image.e_m) * (square ? 2 : 1);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& term : p.terms()) {
    const Exponent e = term.exponent();
    const long long nt = e.t + static_cast<long long>(image.e_t) * e.m;
    const long long nm = em * e.m;
    check_exponent(nt, nm, e.l);
    const bool flip = image.sign < 0 && (e.m % 2 != 0);
    out.push_back({MonomialKey(Exponent{static_cast<int>(nt), static_cast<int>(nm), e.l}),
                   flip ? Integer(-term.coeff) : term.coeff});
  }
  return Poly::from_terms(std::move(out));
}

Poly eval_t_minus1(const Poly& p) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& term : p.terms()) {
    const Exponent e = term.exponent();
    out.push_back({MonomialKey(Exponent{0, e.m, e.l}),
                   (e.t % 2 != 0) ? Integer(-term.coeff) : term.coeff});
  }
  return Poly::from_terms(std::move(out));
}

Poly negate_L(const Poly& p) {
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  for (Term& term : out) {
    if (term.key.l() % 2 != 0) term.coeff = -term.coeff;
  }
  return Poly::from_terms(std::move(out));
}

std::vector<Poly> l_coefficients(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(p.degree_L()) + 1);
  for (const Term& term : p.terms()) {
    const Exponent e = term.exponent();
    buckets[static_cast<std::size_t>(e.l)].push_back({MonomialKey(Exponent{e.t, e.m, 0}), term.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.push_back(Poly::from_terms(std::move(bucket)));
  return out;
}

Poly from_l_coefficients(std::span<const Poly> coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const Term& term : coeffs[i].terms()) {
      const Exponent e = term.exponent();
      out.push_back({MonomialKey(Exponent{e.t, e.m, e.l + static_cast<int>(i)}), term.coeff});
    }
  }
  return Poly::from_terms(std::move(out));
}

bool m_essentially_equal(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroArgument("m_essentially_equal needs nonzero inputs");
  const auto fc = l_coefficients(f);
  const auto gc = l_coefficients(g);
  if (fc.size() != gc.size()) return false;
  // In a domain it suffices to compare against one pivot index where f is nonzero.
  std::size_t k = 0;
  while (fc[k].is_zero()) ++k;
  if (gc[k].is_zero()) return false;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i].is_zero() != gc[i].is_zero()) return false;
    if (i == k || fc[i].is_zero()) continue;
    if (fc[i] * gc[k] != gc[i] * fc[k]) return false;
  }
  return true;
}

std::optional<Unit> unit_equal(const Poly& f, const Poly& g) {
  if (f.size() != g.size()) return std::nullopt;
  if (f.is_zero()) return Unit{};
  const Exponent fe = f.leading_term().exponent();
  const Exponent ge = g.leading_term().exponent();
  if (fe.l != ge.l) return std::nullopt;
  int sign;
  if (f.leading_term().coeff == g.leading_term().coeff) {
    sign = 1;
  } else if (f.leading_term().coeff == -g.leading_term().coeff) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  const Unit u{sign, fe.t - ge.t, fe.m - ge.m};
  if (g.times(u) == f) return u;
  return std::nullopt;
}

Poly primitive_part(const Poly& p, Integer* content, Unit* removed) {
  if (p.is_zero()) {
    if (content) *content = 0;
    if (removed) *removed = Unit{};
    return {};
  }
  Integer c = p.content();
  const Box b = box_of(p);
  const int sign = sgn(p.leading_term().coeff) < 0 ? -1 : 1;
  const Unit u{sign, b.min_t, b.min_m};
  if (content) *content = c;
  if (removed) *removed = u;
  return p.divide_integer(c).times(u.inverse());
}

namespace {

void append_power(std::ostream& os, char var, int e, bool& need_star) {
  if (e == 0) return;
  if (need_star) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  need_star = true;
}

}  // namespace

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& term : p.terms()) {
    const Exponent e = term.exponent();
    Integer c = term.coeff;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    const bool constant = e.t == 0 && e.m == 0 && e.l == 0;
    bool need_star = false;
    if (constant || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    append_power(os, 'L', e.l, need_star);
    append_power(os, 'M', e.m, need_star);
    append_power(os, 't', e.t, need_star);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << render(p); }

}  // namespace ajcable
