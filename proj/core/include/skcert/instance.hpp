#pragma once

#include <string>
#include <string_view>

#include "skcert/valuations.hpp"

namespace skcert {

enum class Family { Trimmed, Laguerre };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

/// One member of the family [f_{n,m}], always in its integer normalization
///
///   g(x) = sum_{i=0..k} u_i * (m! / (n+i)!) * x^i,   k = m - n,
///
/// with unit multipliers u_i = 1 (trimmed exponential, g = m! f_{n,m}) or
/// u_i = (-1)^i C(k, i) (Laguerre, g = k! L_k^(n) = m! (k!/m!) L_k^(n)).
class PolyInstance {
 public:
  PolyInstance(Family family, u64 n, u64 m);

  static PolyInstance from_m_k(Family family, u64 m, u64 k);

  Family family() const { return family_; }
  u64 n() const { return n_; }
  u64 m() const { return m_; }
  u64 degree() const { return m_ - n_; }

  bool operator==(const PolyInstance&) const = default;

 private:
  Family family_;
  u64 n_;
  u64 m_;
};

/// v_p(u_j): always 0 for trimmed members, v_p(C(k, j)) for Laguerre.
Valuation unit_valuation(const PolyInstance& instance, u64 j, u64 p);

/// Sign of the unit multiplier u_j (+1 or -1).
int unit_sign(const PolyInstance& instance, u64 j);

}  // namespace skcert
