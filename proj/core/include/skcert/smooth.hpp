#pragma once

// Smooth-number counting psi(x, k) and the probability of the event
// "some prime p > k divides m exactly once", which drives every witness search.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "skcert/valuations.hpp"

namespace skcert {

inline constexpr u64 kPsiCap = 100'000'000;
inline constexpr u64 kExactProbabilityCap = 10'000'000;

/// Constant used by the empirical guard psi(x,k) log x / x <= log k + C.
inline constexpr double kLemmaConstant = 4.0;

struct SmoothCount {
  u64 x = 0;
  u64 k = 0;
  u64 count = 0;
  bool operator==(const SmoothCount&) const = default;
};

/// Smallest-prime-factor table for [0, limit], limit <= kPsiCap.
class SpfSieve {
 public:
  explicit SpfSieve(u64 limit);

  u64 limit() const { return spf_.size() - 1; }
  std::uint32_t smallest_factor(u64 n) const { return spf_[n]; }

  /// psi(x, k) for x <= limit().
  SmoothCount psi(u64 x, u64 k) const;

  /// Sum of log s over k-smooth s <= x.
  double smooth_log_sum(u64 x, u64 k) const;

  /// Whether some prime p > k has v_p(n) = 1 (n <= limit()).
  bool has_large_unit_prime(u64 n, u64 k) const;

 private:
  std::vector<std::uint32_t> spf_;
};

bool is_smooth(u64 n, u64 k);

SmoothCount psi(u64 x, u64 k);

/// x / log x * (log k + C), the right-hand side of the psi upper bound.
double psi_bound(u64 x, u64 k, double constant = kLemmaConstant);

struct ExactMode {};
struct SampledMode {
  u64 samples = 0;
  u64 seed = 0;
};
using ProbabilityMode = std::variant<ExactMode, SampledMode>;

struct ProbabilityEstimate {
  u64 hits = 0;
  u64 trials = 0;
  bool exact = false;
  double value() const { return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials); }
  /// Binomial standard error; 0 for exact results.
  double std_error() const;
};

/// P(exists prime p > k with v_p(m) = 1) for m uniform in [1, x].
ProbabilityEstimate prob_exists_large_unit_prime(u64 x, u64 k, const ProbabilityMode& mode);

/// For i = 0..t-1: the smallest prime p > k with v_p(m - i) = 1, if any.
std::vector<std::optional<u64>> shifted_witness_profile(u64 m, u64 k, u64 t);

/// Smallest prime factor p > bound of n appearing with exponent exactly 1.
std::optional<u64> smallest_unit_prime_above(u64 n, u64 bound);

}  // namespace skcert
