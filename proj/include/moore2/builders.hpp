#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "difference_sets.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "numtheory.hpp"

namespace moore2 {

// A point of the projective plane over K: a nonzero coordinate triple up to
// scaling, stored normalized so the leftmost nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(const FieldElement& x0, const FieldElement& x1, const FieldElement& x2)
      : c_{x0, x1, x2} {
    const FieldSpec& K = x0.field();
    if (x1.field() != K || x2.field() != K)
      throw FieldMismatchError("projective coordinates must come from one field");
    for (auto& c : c_) {
      if (c.is_zero()) continue;
      FieldElement s = inv(c);
      c_ = {c_[0] * s, c_[1] * s, c_[2] * s};
      return;
    }
    throw ZeroElementError("projective point requires a nonzero coordinate triple");
  }

  const FieldElement& x0() const { return c_[0]; }
  const FieldElement& x1() const { return c_[1]; }
  const FieldElement& x2() const { return c_[2]; }
  const std::array<FieldElement, 3>& coords() const { return c_; }

  bool operator==(const ProjectivePoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

 private:
  std::array<FieldElement, 3> c_;
};

// All q^2+q+1 projective points in lexicographic order of their normalized
// coordinate vectors (componentwise canonical element order, x0 first):
// (0,0,1), then (0,1,t), then (1,s,t).
inline std::vector<ProjectivePoint> projective_points(const FieldSpec& K) {
  std::vector<ProjectivePoint> pts;
  int64_t q = K.order();
  pts.reserve(q * q + q + 1);
  FieldElement zero = K.zero(), one = K.one();
  pts.emplace_back(zero, zero, one);
  for (int64_t t = 0; t < q; ++t) pts.emplace_back(zero, one, K.from_index(t));
  for (int64_t s = 0; s < q; ++s)
    for (int64_t t = 0; t < q; ++t) pts.emplace_back(one, K.from_index(s), K.from_index(t));
  return pts;
}

inline std::string point_label(const ProjectivePoint& p) {
  return "(" + to_string(p.x0()) + "," + to_string(p.x1()) + "," + to_string(p.x2()) + ")";
}

// Vertices 0..n-1, edge {x,y} iff x != y and (x+y) mod n lies in D. Loops
// (2x in D) are suppressed.
inline Graph diff_graph(const DifferenceSet& D) {
  int64_t n = D.modulus();
  std::vector<char> in_set(n, 0);
  for (int64_t e : D.elements()) in_set[e] = 1;
  Graph G(n);
  for (int64_t x = 0; x < n; ++x) {
    G.set_label(x, std::to_string(x));
    for (int64_t y = x + 1; y < n; ++y)
      if (in_set[(x + y) % n]) G.add_edge(x, y);
  }
  G.validate();
  return G;
}

// Projective points of the plane over GF(q), joined when their coordinate
// dot product x0y0 + x1y1 + x2y2 vanishes. Loops at self-orthogonal points
// are suppressed.
inline Graph brown_graph(int64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");
  FieldSpec K = make_field(pp->p, pp->e);
  auto pts = projective_points(K);
  int64_t n = static_cast<int64_t>(pts.size());
  Graph G(n);
  for (int64_t i = 0; i < n; ++i) G.set_label(i, point_label(pts[i]));
  for (int64_t i = 0; i < n; ++i) {
    const auto& x = pts[i].coords();
    for (int64_t j = i + 1; j < n; ++j) {
      const auto& y = pts[j].coords();
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]).is_zero()) G.add_edge(i, j);
    }
  }
  G.validate();
  return G;
}

// For even q the q+1 self-orthogonal points of B(q) all have degree q; a
// new vertex joined to exactly those lifts the graph to (q+1)-regular of
// order q^2+q+2 while keeping diameter 2.
inline Graph brown_augmented(int64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");
  if (pp->p != 2) throw OddQError("augmentation requires even q, got q=" + std::to_string(q));
  Graph B = brown_graph(q);
  int64_t n = B.order();
  Graph G(n + 1);
  for (int64_t v = 0; v < n; ++v) {
    G.set_label(v, B.label(v));
    for (int32_t w : B.neighbors(v))
      if (w > v) G.add_edge(v, w);
  }
  G.set_label(n, "aug");
  int64_t joined = 0;
  for (int64_t v = 0; v < n; ++v)
    if (B.degree(v) == q) {
      G.add_edge(v, n);
      ++joined;
    }
  if (joined != q + 1)
    throw InternalError("expected q+1 vertices of degree q before augmentation");
  G.validate();
  return G;
}

// Projective points joined when the bilinear form
//   x0y2 + x1y1 + x2y0 + alpha*x2y2
// vanishes. The form is symmetric, so the graph is well defined.
inline Graph bilinear_graph(const FieldSpec& K, const FieldElement& alpha) {
  if (!alpha.valid() || alpha.field() != K)
    throw FieldMismatchError("form coefficient must come from the given field");
  if (alpha.is_zero()) throw ZeroAlphaError("form coefficient alpha must be nonzero");
  auto pts = projective_points(K);
  int64_t n = static_cast<int64_t>(pts.size());
  Graph G(n);
  for (int64_t i = 0; i < n; ++i) G.set_label(i, point_label(pts[i]));
  for (int64_t i = 0; i < n; ++i) {
    const auto& x = pts[i].coords();
    for (int64_t j = i + 1; j < n; ++j) {
      const auto& y = pts[j].coords();
      if ((x[0] * y[2] + x[1] * y[1] + x[2] * y[0] + alpha * x[2] * y[2]).is_zero())
        G.add_edge(i, j);
    }
  }
  G.validate();
  return G;
}

// Vertices are pairs over Z_p x Z_p in row-major order ((a,b) at a*p+b),
// joined when the componentwise sum of the two pairs lies in R. This is
// the skeleton the hybrid construction adds difference set edges to.
inline Graph rds_sum_graph(const RelativeDifferenceSet& R) {
  int64_t p = R.p();
  std::vector<char> in_r(p * p, 0);
  for (const auto& [a, b] : R.elements()) in_r[a * p + b] = 1;
  int64_t n = p * p;
  Graph G(n);
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b)
      G.set_label(a * p + b, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (int64_t u = 0; u < n; ++u) {
    int64_t a = u / p, b = u % p;
    for (int64_t v = u + 1; v < n; ++v) {
      int64_t c = v / p, d = v % p;
      if (in_r[((a + c) % p) * p + (b + d) % p]) G.add_edge(u, v);
    }
  }
  G.validate();
  return G;
}

// Hybrid of the quadratic relative difference set and a perfect difference
// set: vertices are pairs over Z_p x Z_p with p = q^2+q+1 prime, and
// distinct (a,b) ~ (c,d) when (a+c, b+d) lies in R = {(t, t^2)} or when
// a = c and b+d mod p lies in S.
inline Graph hybrid_graph(int64_t q, const DifferenceSet& S) {
  auto pp = as_prime_power(q);
  if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");
  int64_t p = q * q + q + 1;
  if (!is_prime(p)) throw NotPrimeError("p=" + std::to_string(p) + " is not prime");
  if (S.modulus() != p)
    throw InvalidPdsError("difference set modulus " + std::to_string(S.modulus()) +
                          " does not match p=" + std::to_string(p));
  if (!verify_perfect(S).valid)
    throw InvalidPdsError("difference set is not perfect mod " + std::to_string(p));

  RelativeDifferenceSet R = quadratic_rds(p);
  std::vector<char> in_r(p * p, 0);
  for (const auto& [a, b] : R.elements()) in_r[a * p + b] = 1;
  std::vector<char> in_s(p, 0);
  for (int64_t e : S.elements()) in_s[e] = 1;

  int64_t n = p * p;
  Graph G(n);
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b)
      G.set_label(a * p + b, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (int64_t u = 0; u < n; ++u) {
    int64_t a = u / p, b = u % p;
    for (int64_t v = u + 1; v < n; ++v) {
      int64_t c = v / p, d = v % p;
      if (in_r[((a + c) % p) * p + (b + d) % p] || (a == c && in_s[(b + d) % p]))
        G.add_edge(u, v);
    }
  }
  G.validate();
  return G;
}

inline Graph hybrid_graph(int64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");
  int64_t p = q * q + q + 1;
  if (!is_prime(p)) throw NotPrimeError("p=" + std::to_string(p) + " is not prime");
  return hybrid_graph(q, singer_set(q));
}

}  // namespace moore2
