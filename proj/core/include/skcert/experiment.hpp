#pragma once

// Seeded Monte-Carlo harness: draws m uniformly from [1, x], certifies every
// degree in a range and cross-checks a share of the S_k certificates against
// the Frobenius oracle. Each sample owns an RNG stream derived from
// (seed, sample id), and aggregation runs in sample order, so reports are
// byte-identical for any thread count.

#include <optional>
#include <string>
#include <vector>

#include "skcert/certify.hpp"
#include "skcert/instance.hpp"

namespace skcert {

enum class FamilyChoice { Trimmed, Laguerre, Both };

std::string_view to_string(FamilyChoice f);
FamilyChoice parse_family_choice(std::string_view s);
std::vector<Family> families_of(FamilyChoice f);

struct ExperimentConfig {
  std::vector<u64> x_values;
  u64 k_min = 8;
  u64 k_max = 10;
  u64 samples = 100;
  FamilyChoice family = FamilyChoice::Trimmed;
  u64 seed = 0;
  u64 oracle_budget = 100;
  double oracle_fraction = 0.0;
  unsigned threads = 1;

  /// Throws std::invalid_argument on a malformed configuration.
  void validate() const;
};

struct CellCounts {
  u64 x = 0;
  u64 k = 0;
  Family family = Family::Trimmed;
  u64 samples = 0;
  u64 n_sk = 0;
  u64 n_alt = 0;
  u64 n_irr = 0;
  u64 n_inc = 0;
  u64 oracle_checked = 0;
  u64 oracle_confirmed = 0;
  u64 contradictions = 0;
  bool operator==(const CellCounts&) const = default;
};

/// The "every k in range certifies" event per (x, family).
struct ForAllCounts {
  u64 x = 0;
  Family family = Family::Trimmed;
  u64 samples = 0;
  u64 success = 0;
  double rate() const { return samples == 0 ? 0.0 : static_cast<double>(success) / static_cast<double>(samples); }
  bool operator==(const ForAllCounts&) const = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CellCounts> cells;
  std::vector<ForAllCounts> for_all;
  u64 oracle_checked = 0;
  u64 oracle_confirmed = 0;
  u64 contradictions = 0;
  /// Not serialized: kept out of reports so they stay reproducible.
  double wall_clock_seconds = 0.0;

  const CellCounts& cell(u64 x, u64 k, Family f) const;
  const ForAllCounts& for_all_of(u64 x, Family f) const;
};

/// Throws std::runtime_error if any oracle sample contradicts a certificate.
ExperimentReport run_theorem_experiment(const ExperimentConfig& config);

struct SmoothExperimentRow {
  u64 x = 0;
  u64 k = 0;
  u64 t = 0;
  u64 samples = 0;
  u64 hits = 0;
  double probability() const { return samples == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples); }
  double deficit() const { return 1.0 - probability(); }
  /// log k / log x + 1/k, the shape of the deficit's upper bound.
  double predictor() const;
  bool operator==(const SmoothExperimentRow&) const = default;
};

struct SmoothExperimentReport {
  u64 seed = 0;
  std::vector<SmoothExperimentRow> rows;
};

/// Empirical probability that every m - i, 0 <= i < t, has a prime p > k
/// dividing it exactly once.
SmoothExperimentReport run_smooth_experiment(const std::vector<u64>& x_values, u64 k, u64 samples, u64 seed,
                                             u64 t = 7);

/// Certificate/oracle agreement campaign over random (m, k) instances.
struct AgreementConfig {
  u64 m_min = 10'000;
  u64 m_max = 1'000'000'000'000;
  std::vector<u64> k_values;
  u64 samples_per_k = 25;
  FamilyChoice family = FamilyChoice::Both;
  u64 seed = 0;
  u64 oracle_budget = 100;
  /// When false only SymmetricFull certificates (and k = 6 requests) go to
  /// the oracle.
  bool oracle_all = false;
  unsigned threads = 1;

  void validate() const;
};

struct AgreementRecord {
  Family family = Family::Trimmed;
  u64 n = 0;
  u64 m = 0;
  u64 k = 0;
  Conclusion conclusion = Conclusion::InconclusiveByPaperMethod;
  bool oracle_run = false;
  /// confirmed_sk for k >= 8, small_k_confirmed for k <= 7.
  bool oracle_confirmed = false;
  u64 primes_tried = 0;
  bool consistent = true;
  bool operator==(const AgreementRecord&) const = default;
};

struct AgreementReport {
  AgreementConfig config;
  std::vector<AgreementRecord> records;
  u64 certified = 0;
  u64 certified_confirmed = 0;
  u64 contradictions = 0;
};

AgreementReport run_agreement_experiment(const AgreementConfig& config);

}  // namespace skcert
