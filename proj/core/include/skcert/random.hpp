#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "skcert/valuations.hpp"

namespace skcert {

inline constexpr std::string_view kRngName = "mt19937_64/seed_seq(seed,stream)";

/// Independent engine for (seed, stream). Both seed_seq and mt19937_64 are
/// fully specified by the standard, so streams are identical across
/// platforms and thread schedules.
inline std::mt19937_64 make_stream(u64 seed, u64 stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform value in [0, bound) by a single 64x64->128 multiply (no rejection
/// loop; the bias is below bound / 2^64).
inline u64 uniform_below(std::mt19937_64& rng, u64 bound) {
  return static_cast<u64>((static_cast<u128>(rng()) * bound) >> 64);
}

/// Uniform value in [lo, hi], lo <= hi.
inline u64 uniform_in(std::mt19937_64& rng, u64 lo, u64 hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

}  // namespace skcert
