#include "ajcable/oretorus.hpp"

#include <random>

#include "ajcable/errors.hpp"
#include "ajcable/modp.hpp"

namespace ajcable {

SequenceOracle::SequenceOracle(std::string name, Exact exact, Modular modular)
    : name_(std::move(name)),
      exact_(std::move(exact)),
      modular_(std::move(modular)),
      cache_(std::make_shared<Cache>()) {}

Poly SequenceOracle::operator()(int n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(n);
    if (it != cache_->values.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate computes the same value.
  Poly value = exact_(n);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->values.try_emplace(n, std::move(value)).first->second;
}

std::uint64_t SequenceOracle::eval_mod(int n, std::uint64_t tau) const {
  if (modular_) return modular_(n, tau);
  return modp::eval((*this)(n), tau, 1);
}

SequenceOracle SequenceOracle::odd_subsequence() const {
  SequenceOracle base = *this;
  Modular modular;
  if (modular_) modular = [base](int n, std::uint64_t tau) { return base.eval_mod(2 * n + 1, tau); };
  return SequenceOracle(
      name_ + "(2n+1)", [base](int n) { return base(2 * n + 1); }, modular);
}

Poly apply(const OreOp& op, const SequenceOracle& f, int n) {
  Poly acc;
  for (const auto& [i, coeff] : op.coefficients()) {
    acc += substitute_M(coeff, Unit{1, 2 * n, 0}, false) * f(n + i);
  }
  return acc;
}

bool annihilates(const OreOp& op, const SequenceOracle& f, int first, int last) {
  for (int n = first; n <= last; ++n) {
    if (!apply(op, f, n).is_zero()) return false;
  }
  return true;
}

namespace {

struct KernelSample {
  std::size_t nullity = 0;
  std::size_t free_column = 0;
  std::vector<std::uint64_t> vector;
};

KernelSample sample_kernel(const SequenceOracle& f, int d, int b, int n_samples,
                           std::uint64_t tau) {
  const std::size_t cols = static_cast<std::size_t>((d + 1) * (b + 1));
  std::vector<std::uint64_t> fvals;
  for (int n = 1; n <= n_samples + d; ++n) fvals.push_back(f.eval_mod(n, tau));
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(static_cast<std::size_t>(n_samples));
  for (int n = 1; n <= n_samples; ++n) {
    std::vector<std::uint64_t> row(cols);
    const std::uint64_t step = modp::pow(tau, 2 * n);
    for (int i = 0; i <= d; ++i) {
      std::uint64_t power = fvals[static_cast<std::size_t>(n - 1 + i)];
      for (int k = 0; k <= b; ++k) {
        row[static_cast<std::size_t>(i * (b + 1) + k)] = power;
        power = modp::mul(power, step);
      }
    }
    rows.push_back(std::move(row));
  }
  modp::Kernel ker = modp::kernel(std::move(rows), cols);
  KernelSample out;
  out.nullity = ker.basis.size();
  if (out.nullity == 1) {
    out.free_column = ker.free_columns.front();
    out.vector = std::move(ker.basis.front());
  }
  return out;
}

struct RationalCoordinate {
  modp::UPoly num;
  modp::UPoly den;
};

/// Interpolates each coordinate from the first k points and checks the
/// reconstruction on the remaining ones.
std::optional<std::vector<RationalCoordinate>> reconstruct(
    const std::vector<std::uint64_t>& taus, const std::vector<std::vector<std::uint64_t>>& values,
    std::size_t k) {
  const std::span<const std::uint64_t> xs(taus.data(), k);
  const modp::UPoly modulus = modp::vanishing_poly(xs);
  const std::size_t coords = values.front().size();
  std::vector<RationalCoordinate> out;
  out.reserve(coords);
  for (std::size_t c = 0; c < coords; ++c) {
    std::vector<std::uint64_t> ys(k);
    for (std::size_t s = 0; s < k; ++s) ys[s] = values[s][c];
    const modp::UPoly interp = modp::interpolate(xs, ys);
    auto rr = modp::rational_reconstruct(interp, modulus, (k - 1) / 2);
    if (!rr) return std::nullopt;
    for (std::size_t s = k; s < taus.size(); ++s) {
      const std::uint64_t den = modp::upoly_eval(rr->second, taus[s]);
      if (den == 0 || modp::mul(den, values[s][c]) != modp::upoly_eval(rr->first, taus[s])) {
        return std::nullopt;
      }
    }
    out.push_back({std::move(rr->first), std::move(rr->second)});
  }
  return out;
}

std::optional<Poly> lift_operator(const std::vector<RationalCoordinate>& coords, int b) {
  modp::UPoly lcm{1};
  for (const auto& c : coords) {
    const modp::UPoly g = modp::upoly_gcd(lcm, c.den);
    lcm = modp::upoly_mul(modp::upoly_divmod(lcm, g).first, c.den);
  }
  // Rational coefficients over a common integer denominator.
  std::vector<std::vector<std::pair<Integer, Integer>>> rat(coords.size());
  Integer common = 1;
  for (std::size_t u = 0; u < coords.size(); ++u) {
    const modp::UPoly poly =
        modp::upoly_mul(coords[u].num, modp::upoly_divmod(lcm, coords[u].den).first);
    for (std::uint64_t x : poly) {
      auto q = modp::rational_reconstruct_integer(x);
      if (!q) return std::nullopt;
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q->second.get_mpz_t());
      rat[u].push_back(*q);
    }
  }
  std::vector<Term> terms;
  for (std::size_t u = 0; u < coords.size(); ++u) {
    const int i = static_cast<int>(u) / (b + 1);
    const int k = static_cast<int>(u) % (b + 1);
    for (std::size_t e = 0; e < rat[u].size(); ++e) {
      const auto& [num, den] = rat[u][e];
      if (sgn(num) == 0) continue;
      Integer c = num * (common / den);
      terms.push_back({MonomialKey(Exponent{static_cast<int>(e), k, i}), std::move(c)});
    }
  }
  Poly p = Poly::from_terms(std::move(terms));
  if (p.is_zero()) return std::nullopt;
  return primitive_part(p);
}

}  // namespace

std::optional<OreOp> fit_recurrence(const SequenceOracle& f, int d, int m_degree_bound,
                                    int n_samples, const FitOptions& options) {
  if (d < 0 || m_degree_bound < 0 || n_samples < 1) return std::nullopt;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, modp::kPrime - 1);

  int b = m_degree_bound;
  std::uint64_t tau0 = dist(rng);
  KernelSample first = sample_kernel(f, d, b, n_samples, tau0);
  // Extra solutions are M-multiples of a lower-degree one.
  while (first.nullity > 1) {
    b -= static_cast<int>(first.nullity) - 1;
    if (b < 0) return std::nullopt;
    first = sample_kernel(f, d, b, n_samples, tau0);
  }
  if (first.nullity == 0) return std::nullopt;

  std::vector<std::uint64_t> taus{tau0};
  std::vector<std::vector<std::uint64_t>> values{first.vector};
  constexpr std::size_t kExtra = 4;
  std::size_t k = 8;
  std::size_t failures = 0;
  while (k + kExtra <= options.max_points) {
    while (taus.size() < k + kExtra) {
      const std::uint64_t tau = dist(rng);
      KernelSample s = sample_kernel(f, d, b, n_samples, tau);
      if (s.nullity != 1 || s.free_column != first.free_column) {
        // Unlucky point where the rank profile drops; a few are tolerable.
        if (++failures > 16) return std::nullopt;
        continue;
      }
      taus.push_back(tau);
      values.push_back(std::move(s.vector));
    }
    // Hold out the last kExtra samples for checking.
    std::vector<std::uint64_t> ordered_taus(taus.begin(), taus.begin() + static_cast<long>(k));
    std::vector<std::vector<std::uint64_t>> ordered_values(values.begin(),
                                                           values.begin() + static_cast<long>(k));
    ordered_taus.insert(ordered_taus.end(), taus.end() - kExtra, taus.end());
    ordered_values.insert(ordered_values.end(), values.end() - kExtra, values.end());
    if (auto coords = reconstruct(ordered_taus, ordered_values, k)) {
      auto lifted = lift_operator(*coords, b);
      if (!lifted) return std::nullopt;
      OreOp op = OreOp::from_poly(*lifted);
      if (!annihilates(op, f, n_samples + 1, n_samples + options.verify_count)) return std::nullopt;
      return op;
    }
    k *= 2;
  }
  return std::nullopt;
}

std::optional<OreOp> find_minimal_recurrence(const SequenceOracle& f, int max_d, int max_m_degree,
                                             const FitOptions& options) {
  for (int d = 1; d <= max_d; ++d) {
    for (int b = 1;; b *= 2) {
      const int bound = std::min(b, max_m_degree);
      const int samples = (d + 1) * (bound + 1) + 8;
      if (auto op = fit_recurrence(f, d, bound, samples, options)) return op;
      if (bound == max_m_degree) break;
    }
  }
  return std::nullopt;
}

}  // namespace ajcable
