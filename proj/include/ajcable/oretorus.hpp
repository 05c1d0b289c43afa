#pragma once

// Operators acting on sequences n -> Z[t^±1]: M multiplies by t^{2n}, L
// shifts n -> n + 1. Includes a brute-force recurrence finder used as an
// independent oracle for the annihilator construction.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ajcable/ore.hpp"
#include "ajcable/ring.hpp"

namespace ajcable {

/// A memoized sequence of Laurent polynomials in t, with an optional fast
/// evaluator at t = tau modulo 2^61 - 1. Copies share the cache; the cache
/// is guarded so one oracle may be read from several threads.
class SequenceOracle {
 public:
  using Exact = std::function<Poly(int n)>;
  using Modular = std::function<std::uint64_t(int n, std::uint64_t tau)>;

  SequenceOracle(std::string name, Exact exact, Modular modular = {});

  const std::string& name() const noexcept { return name_; }
  Poly operator()(int n) const;
  std::uint64_t eval_mod(int n, std::uint64_t tau) const;

  /// n -> f(2n + 1).
  SequenceOracle odd_subsequence() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, Poly> values;
  };
  std::string name_;
  Exact exact_;
  Modular modular_;
  std::shared_ptr<Cache> cache_;
};

/// sum_i a_i(t, t^{2n}) f(n + i).
Poly apply(const OreOp& op, const SequenceOracle& f, int n);

/// True iff apply(op, f, n) vanishes for every n in [first, last].
bool annihilates(const OreOp& op, const SequenceOracle& f, int first, int last);

struct FitOptions {
  std::uint64_t seed = 0x5eed;
  /// Cap on evaluation points per reconstruction attempt.
  std::size_t max_points = 1024;
  /// Number of fresh n past the samples used for the exact re-check.
  int verify_count = 4;
};

/// Looks for P_0..P_d of M-degree <= m_degree_bound with
/// sum_i P_i(t, t^{2n}) f(n + i) = 0 for n = 1..n_samples. Works modulo a
/// large prime at random t and lifts by rational reconstruction; any
/// returned operator has been re-verified exactly on fresh n. When the
/// solution space has dimension k > 1 the bound is lowered by k - 1 first.
std::optional<OreOp> fit_recurrence(const SequenceOracle& f, int d, int m_degree_bound,
                                    int n_samples, const FitOptions& options = {});

/// Tries d = 1..max_d and, for each, M-degree bounds 1, 2, 4, ... up to
/// max_m_degree; returns the first success.
std::optional<OreOp> find_minimal_recurrence(const SequenceOracle& f, int max_d, int max_m_degree,
                                             const FitOptions& options = {});

}  // namespace ajcable
