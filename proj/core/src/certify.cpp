#include "skcert/certify.hpp"

#include <stdexcept>
#include <string>

#include "skcert/smooth.hpp"

namespace skcert {

namespace {

std::string str(u64 v) { return std::to_string(v); }

// "a 5-cycle" but "an 8-cycle", "an 11-cycle".
std::string a_cycle(u64 len) {
  const std::string s = str(len);
  const bool eleven_or_eighteen = (s.size() % 3 == 2) && (s.rfind("11", 0) == 0 || s.rfind("18", 0) == 0);
  return (s[0] == '8' || eleven_or_eighteen ? "an " : "a ") + s + "-cycle";
}

// Smallest prime q > bound with v_q(value) = 1 whose unit multipliers at both
// segment ends are q-adic units.
std::optional<u64> admissible_prime(const PolyInstance& instance, u64 value, u64 bound, u64 lo, u64 hi) {
  if (value <= bound) return std::nullopt;
  for (const PrimePower& pp : factorize(value)) {
    if (pp.prime <= bound || pp.exponent != 1) continue;
    if (unit_valuation(instance, lo, pp.prime) != Valuation(0)) continue;
    if (unit_valuation(instance, hi, pp.prime) != Valuation(0)) continue;
    return pp.prime;
  }
  return std::nullopt;
}

// A prime q > k dividing n + t = m - (k - t) exactly once puts the points
// (j, 1) for j < t and (j, 0) for j >= t on the polygon at q, so (0,1)-(t,0)
// is a maximal segment.
CycleWitness leading_tame_segment(u64 q, u64 t) {
  return {q, static_cast<i64>(t), Segment{{0, 1}, static_cast<i64>(t), 1}, WitnessKind::Tame};
}

}  // namespace

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::SymmetricFull:
      return "SymmetricFull";
    case Conclusion::AtLeastAlternating:
      return "AtLeastAlternating";
    case Conclusion::IrreducibleOnly:
      return "IrreducibleOnly";
    case Conclusion::InconclusiveByPaperMethod:
      return "InconclusiveByPaperMethod";
  }
  return "unknown";
}

Conclusion parse_conclusion(std::string_view s) {
  for (Conclusion c : {Conclusion::SymmetricFull, Conclusion::AtLeastAlternating, Conclusion::IrreducibleOnly,
                       Conclusion::InconclusiveByPaperMethod}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown conclusion '" + std::string(s) + "'");
}

std::vector<u64> jordan_primes(u64 k) {
  std::vector<u64> out;
  if (k < 3) return out;
  for (u64 p = k - 3; 2 * p > k; --p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::optional<WitnessA> find_witness_a(const PolyInstance& instance) {
  const u64 k = instance.degree();
  const auto p = admissible_prime(instance, instance.m(), k, 0, k);
  if (!p) return std::nullopt;
  return WitnessA{*p, leading_tame_segment(*p, k)};
}

std::optional<WitnessB> find_witness_b(const PolyInstance& instance) {
  const u64 k = instance.degree();
  const u64 even_len = 2 * (k / 2);
  const u64 shift = k - even_len;
  if (even_len == 0) return std::nullopt;
  const auto p = admissible_prime(instance, instance.m() - shift, k, 0, even_len);
  if (!p) return std::nullopt;
  return WitnessB{*p, even_len, shift, leading_tame_segment(*p, even_len)};
}

std::optional<WitnessC> find_witness_c(const PolyInstance& instance) {
  const u64 k = instance.degree();
  if (k < 8) throw std::invalid_argument("find_witness_c: requires k >= 8");
  const u64 n = instance.n();
  const u64 m = instance.m();
  for (u64 p : jordan_primes(k)) {
    // Delta: a prime q > k dividing m - (k - p) = n + p exactly once.
    if (const auto q = admissible_prime(instance, m - (k - p), k, 0, p)) {
      return WitnessC{CRoute::Delta, p, *q, 0, p, leading_tame_segment(*q, p)};
    }
    // Gamma: two multiples m_p - p < m_p of p in [n, m] with v_p(m_p) = 1.
    const u64 mp = p * (m / p);
    if (mp < n + p || (mp / p) % p == 0) continue;
    const u64 j1 = mp - p - n;
    const u64 j2 = mp - n;
    if (unit_valuation(instance, j1, p) != Valuation(0)) continue;
    if (unit_valuation(instance, j2, p) != Valuation(0)) continue;
    const CycleWitness cycle{p, static_cast<i64>(p), Segment{{static_cast<i64>(j1), 1}, static_cast<i64>(p), 1},
                             WitnessKind::RamificationOrder};
    return WitnessC{CRoute::Gamma, p, p, j1, j2, cycle};
  }
  return std::nullopt;
}

Certificate certify_small_k(const PolyInstance& instance) {
  const u64 k = instance.degree();
  if (k < 2 || k > 7) throw std::invalid_argument("certify_small_k: requires 2 <= k <= 7");
  const u64 m = instance.m();

  Certificate cert{instance, {}, {}, {}, std::vector<SmallKWitness>{}, Conclusion::InconclusiveByPaperMethod, {}};
  auto& witnesses = *cert.small_k;
  for (u64 i = 0; i < k; ++i) {
    const u64 len = k - i;
    if (const auto q = admissible_prime(instance, m - i, kSmallKPrimeFloor, 0, len)) {
      witnesses.push_back({i, *q, leading_tame_segment(*q, len)});
      cert.deduction.push_back("q_" + str(i) + " = " + str(*q) + ": v_q(m - " + str(i) +
                               ") = 1, tame segment (0,1)-(" + str(len) + ",0) gives " + a_cycle(len));
    } else {
      cert.deduction.push_back("no prime q > 7 divides m - " + str(i) + " = " + str(m - i) +
                               " exactly once; no " + str(len) + "-cycle witness");
    }
  }

  if (k == 6) {
    cert.deduction.push_back(
        "degree 6: PGL2(F5) acting on the projective line over F5 is 2-transitive, contains odd permutations, "
        "has order 120 divisible by lcm(1..6) = 60 and contains an r-cycle for every r <= 6, so cycle witnesses "
        "cannot separate it from S_6");
    return cert;
  }
  if (witnesses.size() != k) {
    cert.deduction.push_back("witness set incomplete; inconclusive");
    return cert;
  }
  cert.deduction.push_back("k-cycle: G is transitive, f is irreducible");
  cert.deduction.push_back("(k-1)-cycle fixing a root: the stabilizer is transitive on the rest, G is 2-transitive");
  cert.deduction.push_back("one of k, k-1 is even; that cycle is an odd permutation, G is not inside A_" + str(k));
  cert.deduction.push_back("cycles of every length 1..k: lcm(1.." + str(k) + ") divides |G|");
  cert.deduction.push_back("for k <= 7, k != 6, the only 2-transitive subgroup of S_k outside A_k with order "
                           "divisible by lcm(1..k) is S_k; G = S_" + str(k));
  cert.conclusion = Conclusion::SymmetricFull;
  return cert;
}

Certificate certify(const PolyInstance& instance) {
  const u64 k = instance.degree();
  if (k == 1) {
    Certificate cert{instance, {}, {}, {}, std::vector<SmallKWitness>{}, Conclusion::SymmetricFull, {}};
    cert.deduction.push_back("degree 1: linear polynomial, G = S_1");
    return cert;
  }
  if (k <= 7) return certify_small_k(instance);

  Certificate cert{instance, find_witness_a(instance), find_witness_b(instance), {}, std::nullopt,
                   Conclusion::InconclusiveByPaperMethod, {}};
  const auto primes = jordan_primes(k);
  if (primes.empty()) {
    cert.deduction.push_back("no prime in (k/2, k-2); no Jordan witness available");
  } else {
    cert.witness_c = find_witness_c(instance);
  }

  if (cert.witness_a) {
    cert.deduction.push_back("A: p1 = " + str(cert.witness_a->p) + " > k with v_p1(m) = 1; polygon at p1 is the single "
                             "segment (0,1)-(" + str(k) + ",0), tame since p1 > k: a k-cycle, f irreducible, G transitive");
  } else {
    cert.deduction.push_back("A: no prime p > k divides m exactly once");
  }
  if (cert.witness_b) {
    const auto& b = *cert.witness_b;
    cert.deduction.push_back("B: p2 = " + str(b.p) + " > k with v_p2(m - " + str(b.shift) + ") = 1; tame segment (0,1)-(" +
                             str(b.even_len) + ",0) gives " + a_cycle(b.even_len) +
                             ", an odd permutation: G is not inside A_k");
  } else {
    cert.deduction.push_back("B: no prime p > k divides m - (k mod 2) exactly once");
  }
  if (cert.witness_c) {
    const auto& c = *cert.witness_c;
    if (c.route == CRoute::Delta) {
      cert.deduction.push_back("C (delta): q = " + str(c.q) + " > k with v_q(m - " + str(k - c.p) +
                               ") = 1; tame segment (0,1)-(" + str(c.p) + ",0) gives " + a_cycle(c.p));
    } else {
      cert.deduction.push_back("C (gamma): multiples " + str(instance.n() + c.j1) + " < " + str(instance.n() + c.j2) +
                               " of p = " + str(c.p) + " in [n, m], v_p of the larger is 1; segment (" + str(c.j1) +
                               ",1)-(" + str(c.j2) + ",0) of slope -1/p gives a root of valuation 1/p, so p | |G|");
      cert.deduction.push_back("p > k/2: every element of order p in S_k is a single p-cycle (Cauchy), so G has a " +
                               str(c.p) + "-cycle");
    }
  } else if (!primes.empty()) {
    cert.deduction.push_back("C: neither route succeeds for any prime in (k/2, k-2)");
  }

  if (cert.witness_a && cert.witness_c) {
    cert.deduction.push_back("transitive with a p-cycle, k/2 < p < k-2: G is primitive and, by Jordan's theorem, "
                             "contains A_k");
    if (cert.witness_b) {
      cert.deduction.push_back("A_k <= G and G not inside A_k: G = S_" + str(k));
      cert.conclusion = Conclusion::SymmetricFull;
    } else {
      cert.conclusion = Conclusion::AtLeastAlternating;
    }
  } else if (cert.witness_a) {
    cert.conclusion = Conclusion::IrreducibleOnly;
  }
  return cert;
}

}  // namespace skcert
