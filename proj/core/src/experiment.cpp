#include "skcert/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "skcert/modpoly.hpp"
#include "skcert/random.hpp"
#include "skcert/smooth.hpp"

namespace skcert {

namespace {

// Runs body(i) for i in [0, count) on `threads` workers. The first exception
// thrown by any task is rethrown on the caller.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool oracle_agrees(const OracleVerdict& v, u64 k) { return k >= 8 ? v.confirmed_sk : v.small_k_confirmed; }

struct SampleOutcome {
  // Indexed [family][k - k_min].
  std::vector<std::vector<Conclusion>> conclusions;
  std::vector<std::vector<int>> oracle;  // -1 not run, 0 unconfirmed, 1 confirmed
  std::vector<std::vector<bool>> contradiction;
};

}  // namespace

std::string_view to_string(FamilyChoice f) {
  switch (f) {
    case FamilyChoice::Trimmed:
      return "trimmed";
    case FamilyChoice::Laguerre:
      return "laguerre";
    case FamilyChoice::Both:
      return "both";
  }
  return "unknown";
}

FamilyChoice parse_family_choice(std::string_view s) {
  if (s == "trimmed") return FamilyChoice::Trimmed;
  if (s == "laguerre") return FamilyChoice::Laguerre;
  if (s == "both") return FamilyChoice::Both;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

std::vector<Family> families_of(FamilyChoice f) {
  switch (f) {
    case FamilyChoice::Trimmed:
      return {Family::Trimmed};
    case FamilyChoice::Laguerre:
      return {Family::Laguerre};
    case FamilyChoice::Both:
      return {Family::Trimmed, Family::Laguerre};
  }
  return {};
}

void ExperimentConfig::validate() const {
  if (x_values.empty()) throw std::invalid_argument("experiment: at least one x value is required");
  if (k_min < 2) throw std::invalid_argument("experiment: k_min must be >= 2");
  if (k_max < k_min) throw std::invalid_argument("experiment: k_max must be >= k_min");
  if (samples < 1) throw std::invalid_argument("experiment: samples must be >= 1");
  if (oracle_fraction < 0.0 || oracle_fraction > 1.0) {
    throw std::invalid_argument("experiment: oracle_fraction must lie in [0, 1]");
  }
  if (oracle_fraction > 0.0 && oracle_budget < 1) throw std::invalid_argument("experiment: oracle_budget must be >= 1");
  for (u64 x : x_values) {
    if (x <= k_max) throw std::invalid_argument("experiment: every x must exceed k_max");
    if (x > kMaxInput) throw std::invalid_argument("experiment: x exceeds 2^63-1");
  }
}

const CellCounts& ExperimentReport::cell(u64 x, u64 k, Family f) const {
  for (const CellCounts& c : cells) {
    if (c.x == x && c.k == k && c.family == f) return c;
  }
  throw std::out_of_range("ExperimentReport: no such cell");
}

const ForAllCounts& ExperimentReport::for_all_of(u64 x, Family f) const {
  for (const ForAllCounts& c : for_all) {
    if (c.x == x && c.family == f) return c;
  }
  throw std::out_of_range("ExperimentReport: no such cell");
}

ExperimentReport run_theorem_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Family> families = families_of(config.family);
  const u64 nk = config.k_max - config.k_min + 1;
  const std::size_t total = config.x_values.size() * config.samples;

  std::vector<SampleOutcome> outcomes(total);
  parallel_for(total, config.threads, [&](std::size_t task) {
    const std::size_t xi = task / config.samples;
    const u64 x = config.x_values[xi];
    auto rng = make_stream(config.seed, task);
    const u64 m = uniform_in(rng, 1, x);

    SampleOutcome& out = outcomes[task];
    out.conclusions.assign(families.size(), std::vector<Conclusion>(nk, Conclusion::InconclusiveByPaperMethod));
    out.oracle.assign(families.size(), std::vector<int>(nk, -1));
    out.contradiction.assign(families.size(), std::vector<bool>(nk, false));
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
      for (u64 k = config.k_min; k <= config.k_max; ++k) {
        const u64 ki = k - config.k_min;
        // Drawn unconditionally so the stream layout does not depend on outcomes.
        const double pick = unit_uniform(rng);
        const u64 oracle_seed = rng();
        if (m <= k) continue;
        const PolyInstance inst(families[fi], m - k, m);
        const Certificate cert = certify(inst);
        out.conclusions[fi][ki] = cert.conclusion;
        if (cert.conclusion != Conclusion::SymmetricFull || pick >= config.oracle_fraction) continue;
        const OracleVerdict v = oracle_confirm(inst, config.oracle_budget, oracle_seed);
        out.oracle[fi][ki] = oracle_agrees(v, k) ? 1 : 0;
        out.contradiction[fi][ki] = !evidence_consistent(v, k);
      }
    }
  });

  ExperimentReport report;
  report.config = config;
  for (std::size_t xi = 0; xi < config.x_values.size(); ++xi) {
    const u64 x = config.x_values[xi];
    for (std::size_t fi = 0; fi < families.size(); ++fi) {
      ForAllCounts all{x, families[fi], config.samples, 0};
      std::vector<CellCounts> row(nk);
      for (u64 ki = 0; ki < nk; ++ki) row[ki] = CellCounts{x, config.k_min + ki, families[fi], config.samples};
      for (u64 s = 0; s < config.samples; ++s) {
        const SampleOutcome& out = outcomes[xi * config.samples + s];
        bool every = true;
        for (u64 ki = 0; ki < nk; ++ki) {
          CellCounts& c = row[ki];
          switch (out.conclusions[fi][ki]) {
            case Conclusion::SymmetricFull:
              ++c.n_sk;
              break;
            case Conclusion::AtLeastAlternating:
              ++c.n_alt;
              every = false;
              break;
            case Conclusion::IrreducibleOnly:
              ++c.n_irr;
              every = false;
              break;
            case Conclusion::InconclusiveByPaperMethod:
              ++c.n_inc;
              every = false;
              break;
          }
          if (out.oracle[fi][ki] >= 0) {
            ++c.oracle_checked;
            if (out.oracle[fi][ki] == 1) ++c.oracle_confirmed;
          }
          if (out.contradiction[fi][ki]) ++c.contradictions;
        }
        if (every) ++all.success;
      }
      for (const CellCounts& c : row) {
        report.oracle_checked += c.oracle_checked;
        report.oracle_confirmed += c.oracle_confirmed;
        report.contradictions += c.contradictions;
        report.cells.push_back(c);
      }
      report.for_all.push_back(all);
    }
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (report.contradictions > 0) {
    throw std::runtime_error("experiment: " + std::to_string(report.contradictions) +
                             " oracle samples contradict emitted certificates");
  }
  return report;
}

double SmoothExperimentRow::predictor() const {
  return std::log(static_cast<double>(k)) / std::log(static_cast<double>(x)) + 1.0 / static_cast<double>(k);
}

SmoothExperimentReport run_smooth_experiment(const std::vector<u64>& x_values, u64 k, u64 samples, u64 seed,
                                             u64 t) {
  if (x_values.empty()) throw std::invalid_argument("smooth experiment: at least one x value is required");
  if (samples < 1) throw std::invalid_argument("smooth experiment: samples must be >= 1");
  if (t < 1) throw std::invalid_argument("smooth experiment: t must be >= 1");
  if (k < 1) throw std::invalid_argument("smooth experiment: k must be >= 1");
  SmoothExperimentReport report{seed, {}};
  for (std::size_t xi = 0; xi < x_values.size(); ++xi) {
    const u64 x = x_values[xi];
    if (x < 1 || x > kMaxInput) throw std::invalid_argument("smooth experiment: x outside [1, 2^63-1]");
    SmoothExperimentRow row{x, k, t, samples, 0};
    auto rng = make_stream(seed, xi);
    for (u64 s = 0; s < samples; ++s) {
      const u64 m = uniform_in(rng, 1, x);
      if (m <= t) continue;
      bool all = true;
      for (u64 i = 0; i < t && all; ++i) all = smallest_unit_prime_above(m - i, k).has_value();
      if (all) ++row.hits;
    }
    report.rows.push_back(row);
  }
  return report;
}

void AgreementConfig::validate() const {
  if (k_values.empty()) throw std::invalid_argument("agreement: at least one k is required");
  if (samples_per_k < 1) throw std::invalid_argument("agreement: samples_per_k must be >= 1");
  if (oracle_budget < 1) throw std::invalid_argument("agreement: oracle_budget must be >= 1");
  if (m_max > kMaxInput) throw std::invalid_argument("agreement: m_max exceeds 2^63-1");
  for (u64 k : k_values) {
    if (k < 1) throw std::invalid_argument("agreement: k must be >= 1");
    if (std::max(m_min, k + 1) > m_max) throw std::invalid_argument("agreement: empty m range for some k");
  }
}

AgreementReport run_agreement_experiment(const AgreementConfig& config) {
  config.validate();
  const std::vector<Family> families = families_of(config.family);
  const std::size_t total = config.k_values.size() * config.samples_per_k;
  std::vector<std::vector<AgreementRecord>> per_task(total);

  parallel_for(total, config.threads, [&](std::size_t task) {
    const u64 k = config.k_values[task / config.samples_per_k];
    auto rng = make_stream(config.seed, task);
    const u64 m = uniform_in(rng, std::max(config.m_min, k + 1), config.m_max);
    for (Family fam : families) {
      const u64 oracle_seed = rng();
      const PolyInstance inst(fam, m - k, m);
      const Certificate cert = certify(inst);
      AgreementRecord rec{fam, inst.n(), m, k, cert.conclusion};
      const bool wanted = config.oracle_all || cert.conclusion == Conclusion::SymmetricFull || k == 6;
      if (wanted) {
        const OracleVerdict v = oracle_confirm(inst, config.oracle_budget, oracle_seed);
        rec.oracle_run = true;
        rec.oracle_confirmed = oracle_agrees(v, k);
        rec.primes_tried = v.primes_tried;
        rec.consistent = evidence_consistent(v, k);
      }
      per_task[task].push_back(rec);
    }
  });

  AgreementReport report;
  report.config = config;
  for (auto& recs : per_task) {
    for (AgreementRecord& r : recs) {
      if (r.conclusion == Conclusion::SymmetricFull) {
        ++report.certified;
        if (r.oracle_confirmed) ++report.certified_confirmed;
      }
      if (!r.consistent) ++report.contradictions;
      report.records.push_back(r);
    }
  }
  return report;
}

}  // namespace skcert
