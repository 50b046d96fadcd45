#include "skcert/modpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "skcert/certify.hpp"
#include "skcert/random.hpp"

namespace skcert {

namespace {

using Poly = std::vector<u64>;  // little-endian, no leading zeros; empty = 0

struct Field {
  u64 r;
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= r ? s - r : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + r - b; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, r); }
  u64 inv(u64 a) const { return powmod(a, r - 2, r); }
};

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  const u64 lead_inv = F.inv(b.back());
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const u64 c = F.mul(a[i], lead_inv);
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

Poly make_monic(const Field& F, Poly a) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (u64& c : a) c = F.mul(c, inv);
  return a;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

Poly derivative(const Field& F, const Poly& a) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(F.mul(a[i], static_cast<u64>(i) % F.r));
  trim(out);
  return out;
}

Poly powmod_poly(const Field& F, Poly base, u64 e, const Poly& mod) {
  Poly result = poly_mod(F, Poly{1}, mod);
  base = poly_mod(F, base, mod);
  while (e > 0) {
    if (e & 1) result = poly_mod(F, poly_mul(F, result, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return result;
}

u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace

ModPoly::ModPoly(u64 modulus, std::vector<u64> coeffs) : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus >= kModulusCap) throw std::out_of_range("ModPoly: modulus must be below 2^62");
  require_prime(modulus, "ModPoly");
  for (u64& c : coeffs_) c %= modulus;
  trim(coeffs_);
  if (coeffs_.empty()) throw std::invalid_argument("ModPoly: zero polynomial");
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("ModPoly: modulus mismatch");
  const Field F{a.modulus()};
  return ModPoly(a.modulus(), poly_mul(F, a.coeffs(), b.coeffs()));
}

ModPoly reduce_instance(const PolyInstance& instance, u64 r) {
  const u64 k = instance.degree();
  if (r <= k) throw std::invalid_argument("reduce_instance: modulus must exceed the degree");
  require_prime(r, "reduce_instance");
  const Field F{r};
  // Coefficient i carries prod_{j=n+i+1..m} j, built from the top down.
  std::vector<u64> coeffs(k + 1);
  u64 running = 1;
  for (u64 i = k + 1; i-- > 0;) {
    if (i < k) running = F.mul(running, (instance.n() + i + 1) % r);
    u64 c = running;
    if (instance.family() == Family::Laguerre) {
      // C(k, i) is a unit mod r since r > k; compute it as a product ratio.
      u64 num = 1, den = 1;
      for (u64 t = 0; t < i; ++t) {
        num = F.mul(num, (k - t) % r);
        den = F.mul(den, (t + 1) % r);
      }
      c = F.mul(c, F.mul(num, F.inv(den)));
      if (unit_sign(instance, i) < 0) c = F.sub(0, c);
    }
    coeffs[i] = c;
  }
  return ModPoly(r, std::move(coeffs));
}

bool squarefree_mod(const ModPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("squarefree_mod: degree must be >= 1");
  const Field F{f.modulus()};
  const Poly d = derivative(F, f.coeffs());
  if (d.empty()) return false;
  return poly_gcd(F, f.coeffs(), d).size() == 1;
}

CycleType cycle_type_mod(const ModPoly& f) {
  if (!squarefree_mod(f)) throw std::invalid_argument("cycle_type_mod: polynomial is not squarefree");
  const Field F{f.modulus()};
  const u64 r = f.modulus();
  Poly rest = make_monic(F, f.coeffs());
  const Poly x{0, 1};
  Poly w = poly_mod(F, x, rest);
  CycleType parts;
  for (u64 d = 1; 2 * d <= rest.size() - 1; ++d) {
    w = powmod_poly(F, w, r, rest);
    Poly diff = w;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = F.sub(diff[1], 1);
    trim(diff);
    const Poly g = poly_gcd(F, rest, diff);
    if (g.size() > 1) {
      const u64 count = (g.size() - 1) / d;
      parts.insert(parts.end(), count, d);
      rest = poly_divmod(F, rest, g).first;
      w = poly_mod(F, w, rest);
    }
  }
  if (rest.size() > 1) parts.push_back(rest.size() - 1);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

const std::vector<CycleType>& pgl2_f5_cycle_types() {
  static const std::vector<CycleType> types = {
      {1, 1, 1, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2}, {3, 3}, {4, 1, 1}, {5, 1}, {6},
  };
  return types;
}

bool is_odd_type(const CycleType& type) {
  const u64 total = std::accumulate(type.begin(), type.end(), u64{0});
  return (total - type.size()) % 2 == 1;
}

bool evidence_consistent(const OracleVerdict& verdict, u64 k) {
  for (const FrobeniusSample& s : verdict.evidence) {
    if (!s.squarefree) {
      if (!s.cycle_type.empty()) return false;
      continue;
    }
    if (std::accumulate(s.cycle_type.begin(), s.cycle_type.end(), u64{0}) != k) return false;
    if (std::any_of(s.cycle_type.begin(), s.cycle_type.end(), [](u64 part) { return part == 0; })) return false;
    if (!std::is_sorted(s.cycle_type.begin(), s.cycle_type.end(), std::greater<>())) return false;
  }
  return true;
}

OracleVerdict oracle_confirm(const PolyInstance& instance, u64 budget, u64 seed) {
  if (budget < 1) throw std::invalid_argument("oracle_confirm: budget must be >= 1");
  const u64 k = instance.degree();
  const std::vector<u64> jordan = jordan_primes(k);
  // lcm(1..k); only the small-degree criterion needs it.
  u64 full_lcm = 1;
  if (k <= 7) {
    for (u64 i = 2; i <= k; ++i) full_lcm = lcm_u64(full_lcm, i);
  }

  OracleVerdict verdict;
  verdict.seed = seed;
  OracleFound& found = verdict.found;

  auto small_k_done = [&] {
    if (k == 1) return true;
    if (k > 7) return false;
    const bool two_transitive = k <= 2 || found.k_minus_one_cycle;
    const bool pgl_ok = k != 6 || found.outside_pgl2_f5;
    return found.k_cycle && two_transitive && found.odd_type && found.order_lcm % full_lcm == 0 && pgl_ok;
  };
  auto jordan_done = [&] { return found.k_cycle && found.odd_type && found.jordan_p.has_value(); };

  const u64 lo = std::max(k, kOracleLow) + 1;
  const u64 hi = kOracleHigh - 1;
  auto rng = make_stream(seed, 0);
  while (verdict.primes_tried < budget && !(k >= 8 ? jordan_done() : small_k_done())) {
    u64 r = uniform_in(rng, lo, hi);
    while (!is_prime(r)) r = uniform_in(rng, lo, hi);
    ++verdict.primes_tried;

    const ModPoly f = reduce_instance(instance, r);
    FrobeniusSample sample{r, squarefree_mod(f), {}};
    if (sample.squarefree) {
      sample.cycle_type = cycle_type_mod(f);
      const CycleType& t = sample.cycle_type;
      if (t.size() == 1) found.k_cycle = true;
      if (k >= 2 && t == CycleType{k - 1, 1}) found.k_minus_one_cycle = true;
      if (is_odd_type(t)) found.odd_type = true;
      if (k <= 7) {
        // Tracks gcd(lcm of element orders, lcm(1..k)).
        u64 order = 1;
        for (u64 part : t) order = lcm_u64(order, part);
        found.order_lcm = lcm_u64(found.order_lcm, std::gcd(order, full_lcm));
      }
      for (u64 p : jordan) {
        if (std::find(t.begin(), t.end(), p) != t.end() && (!found.jordan_p || p > *found.jordan_p)) {
          found.jordan_p = p;
        }
      }
      if (k == 6) {
        const auto& pgl = pgl2_f5_cycle_types();
        if (std::find(pgl.begin(), pgl.end(), t) == pgl.end()) found.outside_pgl2_f5 = true;
      }
    }
    verdict.evidence.push_back(std::move(sample));
  }
  verdict.confirmed_sk = k >= 8 && jordan_done();
  verdict.small_k_confirmed = small_k_done();
  return verdict;
}

}  // namespace skcert
