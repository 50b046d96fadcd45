#include "skcert/smooth.hpp"

#include <cmath>
#include <stdexcept>

#include "skcert/random.hpp"

namespace skcert {

SpfSieve::SpfSieve(u64 limit) {
  if (limit > kPsiCap) throw std::out_of_range("SpfSieve: limit exceeds 10^8");
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

SmoothCount SpfSieve::psi(u64 x, u64 k) const {
  if (x > limit()) throw std::out_of_range("SpfSieve::psi: x beyond sieve limit");
  // smooth[n] = spf(n) <= k and n / spf(n) is smooth; n / spf(n) < n.
  std::vector<std::uint8_t> smooth(x + 1, 0);
  u64 count = 0;
  if (x >= 1) {
    smooth[1] = 1;
    count = 1;
  }
  for (u64 n = 2; n <= x; ++n) {
    const u64 p = spf_[n];
    if (p <= k && smooth[n / p]) {
      smooth[n] = 1;
      ++count;
    }
  }
  return {x, k, count};
}

double SpfSieve::smooth_log_sum(u64 x, u64 k) const {
  if (x > limit()) throw std::out_of_range("SpfSieve::smooth_log_sum: x beyond sieve limit");
  std::vector<std::uint8_t> smooth(x + 1, 0);
  double sum = 0.0;
  if (x >= 1) smooth[1] = 1;
  for (u64 n = 2; n <= x; ++n) {
    const u64 p = spf_[n];
    if (p <= k && smooth[n / p]) {
      smooth[n] = 1;
      sum += std::log(static_cast<double>(n));
    }
  }
  return sum;
}

bool SpfSieve::has_large_unit_prime(u64 n, u64 k) const {
  if (n > limit()) throw std::out_of_range("SpfSieve::has_large_unit_prime: n beyond sieve limit");
  while (n > 1) {
    const u64 p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p > k && e == 1) return true;
  }
  return false;
}

bool is_smooth(u64 n, u64 k) {
  if (n == 0) throw std::invalid_argument("is_smooth: n must be positive");
  if (n == 1) return true;
  return factorize(n).back().prime <= k;
}

SmoothCount psi(u64 x, u64 k) {
  if (x > kPsiCap) throw std::out_of_range("psi: x exceeds 10^8");
  if (k >= x) return {x, k, x};
  return SpfSieve(x).psi(x, k);
}

double psi_bound(u64 x, u64 k, double constant) {
  const double lx = std::log(static_cast<double>(x));
  return static_cast<double>(x) / lx * (std::log(static_cast<double>(k)) + constant);
}

double ProbabilityEstimate::std_error() const {
  if (exact || trials == 0) return 0.0;
  const double p = value();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

ProbabilityEstimate prob_exists_large_unit_prime(u64 x, u64 k, const ProbabilityMode& mode) {
  if (x == 0) throw std::invalid_argument("prob_exists_large_unit_prime: x must be positive");
  if (std::holds_alternative<ExactMode>(mode)) {
    if (x > kExactProbabilityCap) throw std::out_of_range("prob_exists_large_unit_prime: exact mode capped at 10^7");
    const SpfSieve sieve(x);
    ProbabilityEstimate est{0, x, true};
    for (u64 m = 1; m <= x; ++m) {
      if (sieve.has_large_unit_prime(m, k)) ++est.hits;
    }
    return est;
  }
  const auto& sampled = std::get<SampledMode>(mode);
  if (sampled.samples == 0) throw std::invalid_argument("prob_exists_large_unit_prime: need at least one sample");
  if (x > kMaxInput) throw std::out_of_range("prob_exists_large_unit_prime: x exceeds 2^63-1");
  auto rng = make_stream(sampled.seed, 0);
  ProbabilityEstimate est{0, sampled.samples, false};
  for (u64 s = 0; s < sampled.samples; ++s) {
    const u64 m = uniform_in(rng, 1, x);
    if (smallest_unit_prime_above(m, k)) ++est.hits;
  }
  return est;
}

std::optional<u64> smallest_unit_prime_above(u64 n, u64 bound) {
  if (n <= bound) return std::nullopt;
  for (const PrimePower& pp : factorize(n)) {
    if (pp.prime > bound && pp.exponent == 1) return pp.prime;
  }
  return std::nullopt;
}

std::vector<std::optional<u64>> shifted_witness_profile(u64 m, u64 k, u64 t) {
  if (t < 1) throw std::invalid_argument("shifted_witness_profile: t must be >= 1");
  if (m <= t) throw std::invalid_argument("shifted_witness_profile: need m > t");
  std::vector<std::optional<u64>> out;
  out.reserve(t);
  for (u64 i = 0; i < t; ++i) out.push_back(smallest_unit_prime_above(m - i, k));
  return out;
}

}  // namespace skcert
