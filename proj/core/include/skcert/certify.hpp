#pragma once

// Prime-witness certification that a trimmed exponential or Laguerre member
// has Galois group S_k.
//
// For k >= 8 three witnesses are combined:
//   A  prime p1 > k with v_{p1}(m) = 1: polygon is one segment (0,1)-(k,0),
//      a tame k-cycle, so f is irreducible.
//   B  prime p2 > k with v_{p2}(m - i) = 1, i = k mod 2: segment
//      (0,1)-(2[k/2],0) gives an even-length cycle, an odd permutation.
//   C  a prime p in (k/2, k-2) whose p-cycle comes either from a tame segment
//      at a large prime q (delta route) or from wild ramification at p itself
//      (gamma route). Transitive + p-cycle forces G >= A_k by Jordan.
// For 2 <= k <= 7 (k != 6) shifted witnesses q_i > 7 give cycles of every
// length k-i, which pins the group down to S_k.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skcert/instance.hpp"
#include "skcert/polygon.hpp"

namespace skcert {

enum class Conclusion { SymmetricFull, AtLeastAlternating, IrreducibleOnly, InconclusiveByPaperMethod };

std::string_view to_string(Conclusion c);
Conclusion parse_conclusion(std::string_view s);

struct WitnessA {
  u64 p = 0;
  CycleWitness cycle;
  bool operator==(const WitnessA&) const = default;
};

struct WitnessB {
  u64 p = 0;
  u64 even_len = 0;
  u64 shift = 0;
  CycleWitness cycle;
  bool operator==(const WitnessB&) const = default;
};

enum class CRoute { Delta, Gamma };

struct WitnessC {
  CRoute route = CRoute::Delta;
  u64 p = 0;   // the prime cycle length, k/2 < p < k-2
  u64 q = 0;   // delta: prime > k carrying the segment; gamma: equals p
  u64 j1 = 0;  // segment start index (delta: 0)
  u64 j2 = 0;  // segment end index, j1 + p
  CycleWitness cycle;
  bool operator==(const WitnessC&) const = default;
};

struct SmallKWitness {
  u64 shift = 0;  // i; the witness yields a (k - i)-cycle
  u64 q = 0;
  CycleWitness cycle;
  bool operator==(const SmallKWitness&) const = default;
};

struct Certificate {
  PolyInstance instance;
  std::optional<WitnessA> witness_a;
  std::optional<WitnessB> witness_b;
  std::optional<WitnessC> witness_c;
  std::optional<std::vector<SmallKWitness>> small_k;
  Conclusion conclusion = Conclusion::InconclusiveByPaperMethod;
  std::vector<std::string> deduction;
  bool operator==(const Certificate&) const = default;
};

/// Smallest lower bound for the small-degree witness primes.
inline constexpr u64 kSmallKPrimeFloor = 7;

std::optional<WitnessA> find_witness_a(const PolyInstance& instance);
std::optional<WitnessB> find_witness_b(const PolyInstance& instance);

/// Requires k >= 8. Scans primes p in (k/2, k-2) from the largest down,
/// trying the delta route before the gamma route for each p.
std::optional<WitnessC> find_witness_c(const PolyInstance& instance);

/// Requires 2 <= k <= 7.
Certificate certify_small_k(const PolyInstance& instance);

Certificate certify(const PolyInstance& instance);

/// Primes strictly inside (k/2, k-2), descending.
std::vector<u64> jordan_primes(u64 k);

}  // namespace skcert
