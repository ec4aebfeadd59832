#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace moore2 {

inline int64_t mod_floor(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime factors by trial division. Adequate for n up to ~2^40.
inline std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimePower {
  int64_t p;
  int e;
};

// Decomposes q = p^e with p prime, or nothing if q is not a prime power.
inline std::optional<PrimePower> as_prime_power(int64_t q) {
  if (q < 2) return std::nullopt;
  auto fs = prime_factors(q);
  if (fs.size() != 1) return std::nullopt;
  int64_t p = fs[0];
  int e = 0;
  while (q > 1) {
    if (q % p != 0) return std::nullopt;
    q /= p;
    ++e;
  }
  return PrimePower{p, e};
}

inline int64_t pow_i64(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace moore2
