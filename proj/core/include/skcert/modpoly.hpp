#pragma once

// Frobenius-cycle-type oracle. Reduces an instance modulo primes r, factors
// over F_r by distinct-degree factorization and, through Dedekind's theorem,
// reads each factor-degree multiset as the cycle type of an element of G_f.
// It never looks at Newton polygons, so it checks certificates independently.

#include <optional>
#include <vector>

#include "skcert/instance.hpp"
#include "skcert/valuations.hpp"

namespace skcert {

inline constexpr u64 kModulusCap = u64{1} << 62;
inline constexpr u64 kOracleLow = u64{1} << 20;
inline constexpr u64 kOracleHigh = u64{1} << 40;

/// Dense polynomial over F_r, coefficients little-endian in [0, r).
class ModPoly {
 public:
  /// Reduces coefficients mod r and trims leading zeros. Throws unless the
  /// result has degree >= 0 (i.e. is nonzero) and r is a prime below 2^62.
  ModPoly(u64 modulus, std::vector<u64> coeffs);

  u64 modulus() const { return modulus_; }
  const std::vector<u64>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  u64 leading() const { return coeffs_.back(); }

  bool operator==(const ModPoly&) const = default;

 private:
  u64 modulus_;
  std::vector<u64> coeffs_;
};

ModPoly operator*(const ModPoly& a, const ModPoly& b);

/// A cycle type: parts sorted in non-increasing order.
using CycleType = std::vector<u64>;

struct FrobeniusSample {
  u64 r = 0;
  bool squarefree = false;
  CycleType cycle_type;  // empty unless squarefree
  bool operator==(const FrobeniusSample&) const = default;
};

struct OracleFound {
  bool k_cycle = false;
  bool odd_type = false;
  std::optional<u64> jordan_p;
  // Used only by the small-degree criterion.
  bool k_minus_one_cycle = false;
  u64 order_lcm = 1;
  bool outside_pgl2_f5 = false;
  bool operator==(const OracleFound&) const = default;
};

struct OracleVerdict {
  /// [k] type, an odd type and a prime part in (k/2, k-2) were all seen.
  bool confirmed_sk = false;
  /// Criterion for k <= 7 (transitive, 2-transitive, odd, lcm(1..k) | |G|,
  /// plus a type outside PGL2(F5) when k = 6). Always false for k >= 8.
  bool small_k_confirmed = false;
  std::vector<FrobeniusSample> evidence;
  u64 primes_tried = 0;
  OracleFound found;
  u64 seed = 0;
  bool operator==(const OracleVerdict&) const = default;
};

/// Coefficient i is u_i * prod_{j=n+i+1..m} j (mod r). Requires r prime, r > k.
ModPoly reduce_instance(const PolyInstance& instance, u64 r);

bool squarefree_mod(const ModPoly& f);

/// Degrees of the irreducible factors of a squarefree f, non-increasing.
CycleType cycle_type_mod(const ModPoly& f);

/// Samples primes r in (max(k, 2^20), 2^40) from a seeded stream until the
/// applicable criterion holds or `budget` primes have been tried.
OracleVerdict oracle_confirm(const PolyInstance& instance, u64 budget, u64 seed);

/// Cycle types occurring in PGL2(F5) acting on the six points of P^1(F5).
const std::vector<CycleType>& pgl2_f5_cycle_types();

/// Whether the permutation with this cycle type is odd (k - #parts odd).
bool is_odd_type(const CycleType& type);

/// Whether a verdict's evidence is consistent with G_f = S_k: every sample is
/// well formed (parts positive, summing to k).
bool evidence_consistent(const OracleVerdict& verdict, u64 k);

}  // namespace skcert
