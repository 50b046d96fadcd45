#pragma once

// p-adic valuations of integers, factorials and binomials, plus deterministic
// primality testing and factorization for word-sized integers.
//
// Every input is validated against the 63-bit cap; all intermediate products
// are carried in 128 bits.

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

namespace skcert {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMaxInput = static_cast<u64>(std::numeric_limits<i64>::max());

/// Exponent of a prime in an integer; Infinity is reserved for the value 0.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(u64 value) : value_(value) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // Precondition: is_finite().
  constexpr u64 value() const { return value_; }

  constexpr bool operator==(const Valuation&) const = default;
  constexpr std::strong_ordering operator<=>(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }

  constexpr Valuation operator+(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return Valuation(value_ + o.value_);
  }

 private:
  u64 value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Complete factorization of 1 <= n <= 2^63-1. Trial division below 10^4,
/// then Brent's variant of Pollard rho with a fixed parameter schedule.
Factorization factorize(u64 n);

/// Exponent of p in n (n >= 1).
Valuation vp_int(u64 n, u64 p);

/// Same as vp_int but accepts n = 0 (returns Infinity).
Valuation vp_int_or_inf(u64 n, u64 p);

/// v_p(n!) via Legendre's formula.
u64 vp_factorial(u64 n, u64 p);

/// v_p(m!/j!) for 0 <= j <= m.
u64 vp_factorial_ratio(u64 m, u64 j, u64 p);

/// v_p(C(k, j)) for 0 <= j <= k.
u64 vp_binomial(u64 k, u64 j, u64 p);

// Throws std::invalid_argument when p is not prime. Used at API boundaries.
void require_prime(u64 p, const char* what);

}  // namespace skcert
