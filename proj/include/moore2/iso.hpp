#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "difference_sets.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "report.hpp"
#include "tower.hpp"

namespace moore2 {

enum class MatrixRole { General, Form, BasisChange, InverseBasis };

// 3x3 matrix over a finite field, with a tag recording what the matrix is
// used as (quadratic form, basis change, or its inverse).
class Matrix3 {
 public:
  explicit Matrix3(const FieldSpec& K, MatrixRole role = MatrixRole::General)
      : K_(K), role_(role) {
    e_.fill(K.zero());
  }

  static Matrix3 identity(const FieldSpec& K) {
    Matrix3 m(K);
    for (int i = 0; i < 3; ++i) m.at(i, i) = K.one();
    return m;
  }

  const FieldSpec& field() const { return K_; }
  MatrixRole role() const { return role_; }
  void set_role(MatrixRole r) { role_ = r; }

  FieldElement& at(int r, int c) { return e_[static_cast<size_t>(r * 3 + c)]; }
  const FieldElement& at(int r, int c) const { return e_[static_cast<size_t>(r * 3 + c)]; }

  Matrix3 transpose() const {
    Matrix3 m(K_, role_);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    if (a.K_ != b.K_) throw FieldMismatchError("matrix product across different fields");
    Matrix3 m(a.K_);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        FieldElement s = a.K_.zero();
        for (int k = 0; k < 3; ++k) s = s + a.at(r, k) * b.at(k, c);
        m.at(r, c) = s;
      }
    return m;
  }

  std::array<FieldElement, 3> apply(const std::array<FieldElement, 3>& col) const {
    std::array<FieldElement, 3> out = {K_.zero(), K_.zero(), K_.zero()};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) out[r] = out[r] + at(r, k) * col[k];
    return out;
  }

  FieldElement determinant() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }

  Matrix3 inverse() const {
    FieldElement det = determinant();
    if (det.is_zero()) throw DegenerateBasisError("matrix is singular");
    FieldElement s = inv(det);
    Matrix3 m(K_, role_ == MatrixRole::BasisChange ? MatrixRole::InverseBasis : role_);
    m.at(0, 0) = (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) * s;
    m.at(0, 1) = (at(0, 2) * at(2, 1) - at(0, 1) * at(2, 2)) * s;
    m.at(0, 2) = (at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1)) * s;
    m.at(1, 0) = (at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2)) * s;
    m.at(1, 1) = (at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0)) * s;
    m.at(1, 2) = (at(0, 2) * at(1, 0) - at(0, 0) * at(1, 2)) * s;
    m.at(2, 0) = (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0)) * s;
    m.at(2, 1) = (at(0, 1) * at(2, 0) - at(0, 0) * at(2, 1)) * s;
    m.at(2, 2) = (at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0)) * s;
    return m;
  }

  bool operator==(const Matrix3& o) const { return K_ == o.K_ && e_ == o.e_; }
  bool operator!=(const Matrix3& o) const { return !(*this == o); }

 private:
  FieldSpec K_;
  MatrixRole role_;
  std::array<FieldElement, 9> e_;
};

// The symmetric matrix of the form x0y2 + x1y1 + x2y0 + alpha*x2y2:
//   [0 0 1]
//   [0 1 0]
//   [1 0 alpha]
inline Matrix3 form_matrix(const FieldElement& alpha) {
  if (!alpha.valid()) throw FieldMismatchError("form coefficient is uninitialized");
  if (alpha.is_zero()) throw ZeroAlphaError("form coefficient alpha must be nonzero");
  const FieldSpec& K = alpha.field();
  Matrix3 B(K, MatrixRole::Form);
  B.at(0, 2) = K.one();
  B.at(1, 1) = K.one();
  B.at(2, 0) = K.one();
  B.at(2, 2) = alpha;
  return B;
}

// x B y^T.
inline FieldElement apply_form(const Matrix3& B, const std::array<FieldElement, 3>& x,
                               const std::array<FieldElement, 3>& y) {
  const FieldSpec& K = B.field();
  FieldElement s = K.zero();
  auto col = B.apply(y);
  for (int i = 0; i < 3; ++i) s = s + x[static_cast<size_t>(i)] * col[static_cast<size_t>(i)];
  return s;
}

// Basis change A with A^T B A = gamma * I for B = form_matrix(alpha).
// Odd q: with (c, d) the canonical solution of c^2 + d^2 = -1 and h = 1/2,
//   A = [d - c*alpha*h   -(c + d*alpha*h)   -(1 + alpha*h)]
//       [c - d            c + d              1            ]
//       [c                d                  1            ]
// and gamma = -1. Even q: with s = sqrt(alpha), t = sqrt(1/alpha),
//   A = [s 0 0; 0 1 0; t 0 t]
// and gamma = 1. The identity A^T B A = gamma*I is checked before
// returning; its failure would mean an arithmetic defect, not bad input.
inline std::pair<Matrix3, FieldElement> diagonalizing_matrix(const FieldElement& alpha) {
  if (!alpha.valid()) throw FieldMismatchError("form coefficient is uninitialized");
  if (alpha.is_zero()) throw ZeroAlphaError("form coefficient alpha must be nonzero");
  const FieldSpec& K = alpha.field();
  if (K.order() == 4)
    throw NoSpecialCubicError("the special basis route is not used over GF(4)");

  Matrix3 A(K, MatrixRole::BasisChange);
  FieldElement gamma = K.zero();
  if (K.characteristic() == 2) {
    FieldElement s = sqrt_char2(alpha);
    FieldElement t = sqrt_char2(inv(alpha));
    A.at(0, 0) = s;
    A.at(1, 1) = K.one();
    A.at(2, 0) = t;
    A.at(2, 2) = t;
    gamma = K.one();
  } else {
    auto [c, d] = two_squares(-K.one());
    FieldElement h = inv(K.scalar(2));
    FieldElement ah = alpha * h;
    A.at(0, 0) = d - c * ah;
    A.at(0, 1) = -(c + d * ah);
    A.at(0, 2) = -(K.one() + ah);
    A.at(1, 0) = c - d;
    A.at(1, 1) = c + d;
    A.at(1, 2) = K.one();
    A.at(2, 0) = c;
    A.at(2, 1) = d;
    A.at(2, 2) = K.one();
    gamma = -K.one();
  }

  Matrix3 B = form_matrix(alpha);
  Matrix3 got = A.transpose() * B * A;
  Matrix3 want = Matrix3::identity(K);
  for (int i = 0; i < 3; ++i) want.at(i, i) = gamma;
  if (got != want)
    throw DegenerateBasisError("basis change does not diagonalize the form to gamma*I");
  return {A, gamma};
}

// A vertex map between two graphs, with a flag recording whether full
// edge-preservation has been checked.
struct VertexBijection {
  std::string source;
  std::string target;
  std::vector<int64_t> map;
  bool verified = false;
};

// Valid iff f.map is a bijection of equal-order vertex sets and preserves
// both edges and non-edges in every direction. Counterexample pairs are
// itemized.
inline VerificationReport verify_bijection(const Graph& G, const Graph& H,
                                           const VertexBijection& f) {
  VerificationReport rep;
  if (G.order() != H.order()) {
    rep.failures.push_back("graph orders differ: " + std::to_string(G.order()) + " vs " +
                           std::to_string(H.order()));
    return rep;
  }
  if (static_cast<int64_t>(f.map.size()) != G.order()) {
    rep.failures.push_back("mapping covers " + std::to_string(f.map.size()) + " of " +
                           std::to_string(G.order()) + " vertices");
    return rep;
  }
  std::vector<char> hit(static_cast<size_t>(H.order()), 0);
  for (int64_t u = 0; u < G.order(); ++u) {
    int64_t v = f.map[static_cast<size_t>(u)];
    if (v < 0 || v >= H.order()) {
      rep.failures.push_back("vertex " + std::to_string(u) + " maps out of range");
      return rep;
    }
    if (hit[static_cast<size_t>(v)]) {
      rep.failures.push_back("image vertex " + std::to_string(v) + " is hit twice");
      return rep;
    }
    hit[static_cast<size_t>(v)] = 1;
  }
  for (int64_t u = 0; u < G.order(); ++u)
    for (int64_t v = u + 1; v < G.order(); ++v) {
      bool e = G.adjacent(u, v);
      bool fe = H.adjacent(f.map[static_cast<size_t>(u)], f.map[static_cast<size_t>(v)]);
      if (e != fe)
        rep.failures.push_back("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is " +
                               (e ? "an edge" : "a non-edge") + " but its image is " +
                               (fe ? "an edge" : "a non-edge"));
    }
  rep.valid = rep.failures.empty();
  return rep;
}

namespace detail {

// Stored vertex-to-point assignment for q = 4, where the constructive
// basis-change route is unavailable. Codes per coordinate: 0 -> 0, 1 -> 1,
// 2 -> z, 3 -> z^2 over GF(4) with z^2 = z + 1. Always re-verified against
// both graphs before use, never trusted.
inline const std::array<std::array<int, 3>, 21>& q4_point_codes() {
  static const std::array<std::array<int, 3>, 21> codes = {{
      {1, 0, 1}, {1, 3, 1}, {1, 1, 0}, {1, 3, 3}, {0, 1, 0}, {1, 2, 2}, {0, 1, 2},
      {1, 2, 3}, {1, 3, 2}, {1, 3, 0}, {1, 0, 0}, {0, 1, 1}, {0, 0, 1}, {1, 2, 0},
      {1, 1, 1}, {0, 1, 3}, {1, 2, 1}, {1, 0, 3}, {1, 0, 2}, {1, 1, 3}, {1, 1, 2},
  }};
  return codes;
}

inline FieldElement decode_q4_coordinate(const FieldSpec& K, int code) {
  switch (code) {
    case 0: return K.zero();
    case 1: return K.one();
    case 2: return K.gen();
    case 3: return K.gen() * K.gen();
    default: throw InternalError("bad stored coordinate code");
  }
}

}  // namespace detail

// The difference set whose graph the q = 4 stored bijection maps from.
inline DifferenceSet reference_set_q4() { return DifferenceSet(21, {0, 1, 4, 14, 16}); }

// The source difference set used by singer_to_brown: the Singer set for
// most q, the fixed reference set for q = 4 (where the stored assignment
// is tied to that particular equivalent set).
inline DifferenceSet singer_brown_set(int64_t q) {
  if (q == 4) return reference_set_q4();
  return singer_set(q);
}

// Constructive vertex bijection from the difference graph onto the Brown
// graph. For q != 4: coset i carries coordinates x = coset_power(i); the
// basis change A with A^T B A = gamma*I turns the form condition
// B(x, y) = 0 into orthogonality of x' = A^{-1} x and y' = A^{-1} y, so
// i maps to the projective point of A^{-1} x. For q = 4 the stored
// assignment is used. Either way the result is verified pair-by-pair
// before it is returned.
inline VertexBijection singer_to_brown(int64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");

  DifferenceSet S = singer_brown_set(q);
  Graph D = diff_graph(S);
  Graph B = brown_graph(q);

  FieldSpec K = make_field(pp->p, pp->e);
  auto pts = projective_points(K);
  auto point_index = [&](const ProjectivePoint& p) -> int64_t {
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == p) return static_cast<int64_t>(i);
    throw InternalError("projective point missing from enumeration");
  };

  VertexBijection f;
  f.source = "diff(" + std::to_string(S.modulus()) + ")";
  f.target = "brown(q=" + std::to_string(q) + ")";
  f.map.resize(static_cast<size_t>(D.order()));

  if (q == 4) {
    const auto& codes = detail::q4_point_codes();
    for (size_t i = 0; i < codes.size(); ++i) {
      ProjectivePoint p(detail::decode_q4_coordinate(K, codes[i][0]),
                        detail::decode_q4_coordinate(K, codes[i][1]),
                        detail::decode_q4_coordinate(K, codes[i][2]));
      f.map[i] = point_index(p);
    }
  } else {
    CubicTower T = CubicTower::make(q);
    auto [A, gamma] = diagonalizing_matrix(T.alpha());
    Matrix3 Ainv = A.inverse();
    for (int64_t i = 0; i < D.order(); ++i) {
      auto x = Ainv.apply(T.coset_power(i).coords());
      f.map[static_cast<size_t>(i)] = point_index(ProjectivePoint(x[0], x[1], x[2]));
    }
  }

  auto rep = verify_bijection(D, B, f);
  if (!rep.valid)
    throw VerificationFailedError("constructed vertex map fails edge preservation: " +
                                  rep.failures.front());
  f.verified = true;
  return f;
}

namespace detail {

// Shared-dictionary iterative color refinement: both graphs draw colors
// from one signature table, so classes are comparable across graphs.
// Returns false when the class histograms separate the graphs.
inline bool refine_colors(const Graph& G, const Graph& H, std::vector<int>& cg,
                          std::vector<int>& ch) {
  auto ng = static_cast<size_t>(G.order());
  auto nh = static_cast<size_t>(H.order());
  cg.assign(ng, 0);
  ch.assign(nh, 0);
  {
    std::map<int64_t, int> seed;
    for (size_t v = 0; v < ng; ++v) cg[v] = seed.emplace(G.degree(static_cast<int64_t>(v)),
                                                         static_cast<int>(seed.size())).first->second;
    for (size_t v = 0; v < nh; ++v) ch[v] = seed.emplace(H.degree(static_cast<int64_t>(v)),
                                                         static_cast<int>(seed.size())).first->second;
  }
  auto histograms_match = [&] {
    std::map<int, int64_t> a, b;
    for (int c : cg) ++a[c];
    for (int c : ch) ++b[c];
    return a == b;
  };
  if (!histograms_match()) return false;

  size_t colors = 0;
  for (int iter = 0; iter < G.order() + 1; ++iter) {
    std::map<std::vector<int>, int> table;
    auto signature = [&](const Graph& X, const std::vector<int>& cx, size_t v) {
      std::vector<int> sig;
      sig.reserve(X.neighbors(static_cast<int64_t>(v)).size() + 1);
      sig.push_back(cx[v]);
      for (int32_t w : X.neighbors(static_cast<int64_t>(v)))
        sig.push_back(cx[static_cast<size_t>(w)]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<int> ng2(ng), nh2(nh);
    for (size_t v = 0; v < ng; ++v)
      ng2[v] = table.emplace(signature(G, cg, v), static_cast<int>(table.size())).first->second;
    for (size_t v = 0; v < nh; ++v)
      nh2[v] = table.emplace(signature(H, ch, v), static_cast<int>(table.size())).first->second;
    cg.swap(ng2);
    ch.swap(nh2);
    if (!histograms_match()) return false;
    if (table.size() == colors) break;  // stable partition
    colors = table.size();
  }
  return true;
}

}  // namespace detail

// Independent isomorphism oracle: color refinement to prune, then
// deterministic backtracking (vertices in ascending class-size order,
// candidates in ascending index order). Returns a verified bijection, or
// absent when the exhaustive search refutes isomorphism.
inline std::optional<VertexBijection> general_isomorphism(const Graph& G, const Graph& H,
                                                          int64_t node_budget = 10'000'000) {
  if (G.order() > 500 || H.order() > 500)
    throw InputError("general isomorphism search supports at most 500 vertices");
  if (G.order() != H.order() || G.edge_count() != H.edge_count()) return std::nullopt;

  std::vector<int> cg, ch;
  if (!detail::refine_colors(G, H, cg, ch)) return std::nullopt;

  auto n = static_cast<size_t>(G.order());
  std::map<int, std::vector<int64_t>> classes_h;
  for (size_t v = 0; v < n; ++v) classes_h[ch[v]].push_back(static_cast<int64_t>(v));

  // fix the assignment order: rarest color classes first, then by index
  std::vector<int64_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int64_t>(i);
  std::sort(order.begin(), order.end(), [&](int64_t a, int64_t b) {
    size_t sa = classes_h[cg[static_cast<size_t>(a)]].size();
    size_t sb = classes_h[cg[static_cast<size_t>(b)]].size();
    if (sa != sb) return sa < sb;
    if (cg[static_cast<size_t>(a)] != cg[static_cast<size_t>(b)])
      return cg[static_cast<size_t>(a)] < cg[static_cast<size_t>(b)];
    return a < b;
  });

  std::vector<int64_t> image(n, -1);
  std::vector<char> used(n, 0);
  int64_t nodes = 0;

  auto consistent = [&](size_t depth, int64_t u, int64_t v) {
    for (size_t k = 0; k < depth; ++k) {
      int64_t w = order[k];
      if (G.adjacent(u, w) != H.adjacent(v, image[static_cast<size_t>(w)])) return false;
    }
    return true;
  };

  // iterative depth-first search with explicit candidate cursors
  std::vector<size_t> cursor(n + 1, 0);
  size_t depth = 0;
  while (true) {
    if (depth == n) {
      VertexBijection f;
      f.source = "G";
      f.target = "H";
      f.map.assign(image.begin(), image.end());
      auto rep = verify_bijection(G, H, f);
      if (!rep.valid) throw InternalError("search produced a map that fails verification");
      f.verified = true;
      return f;
    }
    int64_t u = order[depth];
    const auto& cands = classes_h[cg[static_cast<size_t>(u)]];
    bool advanced = false;
    while (cursor[depth] < cands.size()) {
      int64_t v = cands[cursor[depth]++];
      if (used[static_cast<size_t>(v)]) continue;
      if (++nodes > node_budget)
        throw BudgetExceededError("isomorphism search exceeded its node budget");
      if (!consistent(depth, u, v)) continue;
      image[static_cast<size_t>(u)] = v;
      used[static_cast<size_t>(v)] = 1;
      ++depth;
      cursor[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    --depth;
    int64_t placed = image[static_cast<size_t>(order[depth])];
    used[static_cast<size_t>(placed)] = 0;
    image[static_cast<size_t>(order[depth])] = -1;
  }
}

}  // namespace moore2
