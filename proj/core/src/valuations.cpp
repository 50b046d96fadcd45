#include "skcert/valuations.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skcert {

namespace {

constexpr u64 kTrialLimit = 10000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<u64> out;
    for (u64 i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

void require_capped(u64 n, const char* what) {
  if (n > kMaxInput) {
    throw std::out_of_range(std::string(what) + ": input exceeds 2^63-1");
  }
}

// Brent's cycle detection on x -> x^2 + c. Returns a nontrivial divisor of
// the odd composite n, or n itself on failure for this c.
u64 brent_rho(u64 n, u64 c) {
  constexpr u64 kBatch = 128;
  u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
  u64 r = 1;
  auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = step(y);
    u64 k = 0;
    do {
      ys = y;
      const u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = step(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = step(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 c = 1;; ++c) {
    const u64 d = brent_rho(n, c);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  require_capped(n, "factorize");

  std::vector<u64> primes;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    if (n < kTrialLimit * kTrialLimit) {
      primes.push_back(n);
    } else {
      factor_into(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());

  Factorization out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

void require_prime(u64 p, const char* what) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
  }
}

Valuation vp_int(u64 n, u64 p) {
  require_prime(p, "vp_int");
  if (n == 0) throw std::invalid_argument("vp_int: n must be positive");
  require_capped(n, "vp_int");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return Valuation(v);
}

Valuation vp_int_or_inf(u64 n, u64 p) {
  if (n == 0) {
    require_prime(p, "vp_int");
    return Valuation::infinity();
  }
  return vp_int(n, p);
}

u64 vp_factorial(u64 n, u64 p) {
  require_prime(p, "vp_factorial");
  require_capped(n, "vp_factorial");
  u64 v = 0;
  while (n >= p) {
    n /= p;
    v += n;
  }
  return v;
}

u64 vp_factorial_ratio(u64 m, u64 j, u64 p) {
  if (j > m) throw std::invalid_argument("vp_factorial_ratio: j > m");
  return vp_factorial(m, p) - vp_factorial(j, p);
}

u64 vp_binomial(u64 k, u64 j, u64 p) {
  if (j > k) throw std::invalid_argument("vp_binomial: j outside [0, k]");
  return vp_factorial(k, p) - vp_factorial(j, p) - vp_factorial(k - j, p);
}

}  // namespace skcert
