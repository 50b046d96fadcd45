#include "skcert/instance.hpp"

#include <stdexcept>
#include <string>

namespace skcert {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Trimmed:
      return "trimmed";
    case Family::Laguerre:
      return "laguerre";
  }
  return "unknown";
}

Family parse_family(std::string_view s) {
  if (s == "trimmed") return Family::Trimmed;
  if (s == "laguerre") return Family::Laguerre;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

PolyInstance::PolyInstance(Family family, u64 n, u64 m) : family_(family), n_(n), m_(m) {
  if (n < 1) throw std::invalid_argument("PolyInstance: n must be >= 1");
  if (m <= n) throw std::invalid_argument("PolyInstance: m must exceed n");
  if (m > kMaxInput) throw std::out_of_range("PolyInstance: m exceeds 2^63-1");
}

PolyInstance PolyInstance::from_m_k(Family family, u64 m, u64 k) {
  if (k < 1 || k >= m) throw std::invalid_argument("PolyInstance: need 1 <= k < m");
  return PolyInstance(family, m - k, m);
}

Valuation unit_valuation(const PolyInstance& instance, u64 j, u64 p) {
  if (j > instance.degree()) throw std::invalid_argument("unit_valuation: index outside [0, k]");
  if (instance.family() == Family::Trimmed) return Valuation(0);
  return Valuation(vp_binomial(instance.degree(), j, p));
}

int unit_sign(const PolyInstance& instance, u64 j) {
  if (instance.family() == Family::Trimmed) return 1;
  return (j % 2 == 0) ? 1 : -1;
}

}  // namespace skcert
