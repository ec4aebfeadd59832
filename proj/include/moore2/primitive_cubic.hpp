#pragma once

#include <array>
#include <cstdint>
#include <tuple>
#include <utility>

#include "errors.hpp"
#include "field.hpp"
#include "numtheory.hpp"

namespace moore2 {
namespace detail {

// Arithmetic in K[x] / (x^3 - a2*x^2 - a1*x - a0). No irreducibility is
// assumed; this is the workhorse for testing whether the residue of x has
// full multiplicative order.
struct CubicRing {
  FieldSpec K;
  FieldElement a2, a1, a0;

  using Elt = std::array<FieldElement, 3>;

  Elt zero() const { return {K.zero(), K.zero(), K.zero()}; }
  Elt one() const { return {K.one(), K.zero(), K.zero()}; }
  Elt xi() const { return {K.zero(), K.one(), K.zero()}; }

  Elt mul(const Elt& x, const Elt& y) const {
    std::array<FieldElement, 5> c = {K.zero(), K.zero(), K.zero(), K.zero(), K.zero()};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c[i + j] = c[i + j] + x[i] * y[j];
    // substitute x^3 = a2*x^2 + a1*x + a0 from the top degree down
    for (int d = 4; d >= 3; --d) {
      c[d - 1] = c[d - 1] + c[d] * a2;
      c[d - 2] = c[d - 2] + c[d] * a1;
      c[d - 3] = c[d - 3] + c[d] * a0;
      c[d] = K.zero();
    }
    return {c[0], c[1], c[2]};
  }

  Elt pow(Elt b, int64_t e) const {
    Elt r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

// A cubic over K is reducible exactly when it has a root in K.
inline bool cubic_has_root(const FieldSpec& K, const FieldElement& a2, const FieldElement& a1,
                           const FieldElement& a0) {
  for (int64_t i = 0; i < K.order(); ++i) {
    FieldElement t = K.from_index(i);
    if (t * t * t - a2 * t * t - a1 * t - a0 == K.zero()) return true;
  }
  return false;
}

// Assumes x^3 - a2*x^2 - a1*x - a0 is irreducible, so the ring is GF(q^3);
// the residue of x is primitive iff its order is q^3 - 1, checked through
// the prime factorization of q^3 - 1.
inline bool cubic_root_is_primitive(const FieldSpec& K, const FieldElement& a2,
                                    const FieldElement& a1, const FieldElement& a0) {
  CubicRing R{K, a2, a1, a0};
  int64_t m = K.order() * K.order() * K.order() - 1;
  for (int64_t ell : prime_factors(m)) {
    if (R.pow(R.xi(), m / ell) == R.one()) return false;
  }
  return true;
}

}  // namespace detail

// First pair (alpha, beta), both nonzero, scanned lexicographically in
// canonical element order (alpha outer), such that x^3 - alpha*x - beta is
// irreducible over K with a primitive root. No such cubic exists over GF(4).
inline std::pair<FieldElement, FieldElement> find_primitive_cubic(const FieldSpec& K) {
  if (K.order() == 4)
    throw NoSpecialCubicError("no primitive cubic of the form x^3-(a*x+b) exists over GF(4)");
  FieldElement z2 = K.zero();
  for (int64_t ai = 1; ai < K.order(); ++ai) {
    FieldElement alpha = K.from_index(ai);
    for (int64_t bi = 1; bi < K.order(); ++bi) {
      FieldElement beta = K.from_index(bi);
      if (!detail::cubic_has_root(K, z2, alpha, beta) &&
          detail::cubic_root_is_primitive(K, z2, alpha, beta))
        return {alpha, beta};
    }
  }
  throw NoSpecialCubicError("scan exhausted without a primitive cubic of special form");
}

// First monic cubic x^3 - (a2*x^2 + a1*x + a0), scanned lexicographically
// over (a2, a1, a0) in canonical element order, that is irreducible with a
// primitive root. Exists for every prime power q.
inline std::tuple<FieldElement, FieldElement, FieldElement> find_any_primitive_cubic(
    const FieldSpec& K) {
  for (int64_t i2 = 0; i2 < K.order(); ++i2) {
    FieldElement a2 = K.from_index(i2);
    for (int64_t i1 = 0; i1 < K.order(); ++i1) {
      FieldElement a1 = K.from_index(i1);
      for (int64_t i0 = 0; i0 < K.order(); ++i0) {
        FieldElement a0 = K.from_index(i0);
        if (!detail::cubic_has_root(K, a2, a1, a0) &&
            detail::cubic_root_is_primitive(K, a2, a1, a0))
          return {a2, a1, a0};
      }
    }
  }
  throw InternalError("no primitive cubic found");  // cannot happen for prime-power q
}

}  // namespace moore2
