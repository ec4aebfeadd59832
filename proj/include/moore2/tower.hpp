#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "numtheory.hpp"
#include "primitive_cubic.hpp"

namespace moore2 {

class CubicTower;
class TowerElement;

namespace detail {

struct TowerImpl {
  FieldSpec K;
  FieldElement a2, a1, a0;  // xi^3 = a2*xi^2 + a1*xi + a0
  bool special = false;     // a2 = 0 and a1, a0 both nonzero
  int64_t n = 0;            // q^2 + q + 1, the order of F* / K*

  // powers[i] is the projectively normalized representative of xi^i K*
  // (scaled so its leftmost nonzero coordinate is 1); log_index maps the
  // flattened coordinates of each representative back to i, sorted by key.
  std::vector<std::array<FieldElement, 3>> powers;
  std::vector<std::pair<int64_t, int64_t>> log_index;

  CubicRing ring() const { return CubicRing{K, a2, a1, a0}; }

  int64_t flatten(const std::array<FieldElement, 3>& v) const {
    return (K.index_of(v[0]) * K.order() + K.index_of(v[1])) * K.order() + K.index_of(v[2]);
  }

  std::array<FieldElement, 3> normalize(std::array<FieldElement, 3> v) const {
    for (auto& c : v)
      if (!c.is_zero()) {
        FieldElement s = inv(c);
        return {v[0] * s, v[1] * s, v[2] * s};
      }
    throw ZeroElementError("cannot normalize the zero element");
  }

  bool same_as(const TowerImpl& o) const {
    return K == o.K && a2 == o.a2 && a1 == o.a1 && a0 == o.a0;
  }
};

}  // namespace detail

// An element x0 + x1*xi + x2*xi^2 of F = GF(q^3), coordinates over K.
class TowerElement {
 public:
  TowerElement() = default;

  bool valid() const { return impl_ != nullptr; }
  const FieldElement& x0() const { return c_[0]; }
  const FieldElement& x1() const { return c_[1]; }
  const FieldElement& x2() const { return c_[2]; }
  const std::array<FieldElement, 3>& coords() const { return c_; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    if (!a.valid() || !b.valid()) return a.valid() == b.valid();
    return a.impl_->same_as(*b.impl_) && a.c_ == b.c_;
  }
  friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

 private:
  std::shared_ptr<const detail::TowerImpl> impl_;
  std::array<FieldElement, 3> c_;

  TowerElement(std::shared_ptr<const detail::TowerImpl> im, std::array<FieldElement, 3> c)
      : impl_(std::move(im)), c_(std::move(c)) {}

  static void check_same(const TowerElement& a, const TowerElement& b) {
    if (!a.valid() || !b.valid())
      throw TowerMismatchError("operation on an uninitialized tower element");
    if (!a.impl_->same_as(*b.impl_))
      throw TowerMismatchError("operands belong to different towers");
  }

  friend class CubicTower;
  friend TowerElement ext_mul(const TowerElement&, const TowerElement&);
  friend TowerElement mul_generic(const TowerElement&, const TowerElement&);
};

// F = GF(q^3) over K = GF(q), presented by a primitive monic cubic so that
// the residue xi generates F*. Exposes the coset logarithm onto the cyclic
// group G = F*/K* of order n = q^2+q+1, with cosets indexed 0..n-1 by power
// of xi. Immutable after construction.
class CubicTower {
 public:
  // Special-form modulus xi^3 = alpha*xi + beta via find_primitive_cubic,
  // except q = 4 where none exists and the general scan is used instead.
  static CubicTower make(int64_t q) {
    auto pp = as_prime_power(q);
    if (!pp) throw NotPrimePowerError("q=" + std::to_string(q) + " is not a prime power");
    FieldSpec K = make_field(pp->p, pp->e);
    return q == 4 ? general(K) : special(K);
  }

  static CubicTower special(const FieldSpec& K) {
    auto [alpha, beta] = find_primitive_cubic(K);
    return with_modulus(K, K.zero(), alpha, beta);
  }

  static CubicTower general(const FieldSpec& K) {
    auto [a2, a1, a0] = find_any_primitive_cubic(K);
    return with_modulus(K, a2, a1, a0);
  }

  static CubicTower with_modulus(const FieldSpec& K, const FieldElement& a2,
                                 const FieldElement& a1, const FieldElement& a0) {
    if (detail::cubic_has_root(K, a2, a1, a0))
      throw InputError("tower modulus is reducible over the base field");
    if (!detail::cubic_root_is_primitive(K, a2, a1, a0))
      throw InputError("tower modulus is irreducible but its root is not primitive");
    auto impl = std::make_shared<detail::TowerImpl>();
    impl->K = K;
    impl->a2 = a2;
    impl->a1 = a1;
    impl->a0 = a0;
    impl->special = a2.is_zero() && !a1.is_zero() && !a0.is_zero();
    int64_t q = K.order();
    impl->n = q * q + q + 1;

    detail::CubicRing R = impl->ring();
    auto xi = R.xi();
    impl->powers.reserve(impl->n);
    impl->log_index.reserve(impl->n);
    std::array<FieldElement, 3> cur = R.one();
    for (int64_t i = 0; i < impl->n; ++i) {
      cur = impl->normalize(cur);
      impl->powers.push_back(cur);
      impl->log_index.emplace_back(impl->flatten(cur), i);
      cur = R.mul(cur, xi);
    }
    if (impl->normalize(cur) != impl->powers[0])
      throw InternalError("coset power table failed to wrap at q^2+q+1");
    std::sort(impl->log_index.begin(), impl->log_index.end());
    for (size_t i = 1; i < impl->log_index.size(); ++i)
      if (impl->log_index[i].first == impl->log_index[i - 1].first)
        throw InternalError("coset power table contains a repeated representative");
    return CubicTower(std::move(impl));
  }

  const FieldSpec& base() const { return impl_->K; }
  int64_t q() const { return impl_->K.order(); }
  int64_t group_order() const { return impl_->n; }
  bool special_form() const { return impl_->special; }

  const FieldElement& alpha() const {
    require_special();
    return impl_->a1;
  }
  const FieldElement& beta() const {
    require_special();
    return impl_->a0;
  }
  const FieldElement& a2() const { return impl_->a2; }
  const FieldElement& a1() const { return impl_->a1; }
  const FieldElement& a0() const { return impl_->a0; }

  TowerElement element(const FieldElement& x0, const FieldElement& x1,
                       const FieldElement& x2) const {
    for (const FieldElement* c : {&x0, &x1, &x2})
      if (!c->valid() || c->field() != impl_->K)
        throw FieldMismatchError("tower element coordinates must come from the base field");
    return TowerElement(impl_, {x0, x1, x2});
  }
  TowerElement element(int64_t x0, int64_t x1, int64_t x2) const {
    return TowerElement(impl_, {impl_->K.scalar(x0), impl_->K.scalar(x1), impl_->K.scalar(x2)});
  }

  TowerElement zero() const { return element(0, 0, 0); }
  TowerElement one() const { return element(1, 0, 0); }
  TowerElement xi() const { return element(0, 1, 0); }

  // Normalized representative of xi^i K*.
  TowerElement coset_power(int64_t i) const {
    if (i < 0 || i >= impl_->n) throw IndexOutOfRangeError("coset index out of range");
    return TowerElement(impl_, impl_->powers[static_cast<size_t>(i)]);
  }

  // The unique i in [0, n) with x in xi^i K*.
  int64_t coset_log(const TowerElement& x) const {
    if (!x.valid() || !x.impl_->same_as(*impl_))
      throw TowerMismatchError("coset_log argument belongs to a different tower");
    if (x.is_zero()) throw ZeroElementError("coset_log of the zero element");
    int64_t key = impl_->flatten(impl_->normalize(x.c_));
    auto it = std::lower_bound(impl_->log_index.begin(), impl_->log_index.end(),
                               std::make_pair(key, int64_t{-1}));
    if (it == impl_->log_index.end() || it->first != key)
      throw InternalError("nonzero element missing from the coset table");
    return it->second;
  }

  TowerElement normalized(const TowerElement& x) const {
    if (!x.valid() || !x.impl_->same_as(*impl_))
      throw TowerMismatchError("normalized argument belongs to a different tower");
    return TowerElement(impl_, impl_->normalize(x.c_));
  }

  bool operator==(const CubicTower& o) const { return impl_->same_as(*o.impl_); }
  bool operator!=(const CubicTower& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const detail::TowerImpl> impl_;
  explicit CubicTower(std::shared_ptr<const detail::TowerImpl> im) : impl_(std::move(im)) {}

  void require_special() const {
    if (!impl_->special)
      throw NoSpecialCubicError("tower modulus is not of the form xi^3 = alpha*xi + beta");
  }
};

// Product by polynomial multiplication and reduction modulo the cubic.
inline TowerElement mul_generic(const TowerElement& x, const TowerElement& y) {
  TowerElement::check_same(x, y);
  return TowerElement(x.impl_, x.impl_->ring().mul(x.c_, y.c_));
}

// Product of tower elements. With a special-form modulus this uses the
// closed-form coordinates
//   z0 = x0*y0 + (x1*y2 + x2*y1)*beta
//   z1 = x0*y1 + x1*y0 + (x1*y2 + x2*y1)*alpha + x2*y2*beta
//   z2 = x0*y2 + x1*y1 + x2*y0 + alpha*x2*y2
// which agree with the generic reduction; otherwise it reduces generically.
inline TowerElement ext_mul(const TowerElement& x, const TowerElement& y) {
  TowerElement::check_same(x, y);
  const auto& im = *x.impl_;
  if (!im.special) return mul_generic(x, y);
  const FieldElement& alpha = im.a1;
  const FieldElement& beta = im.a0;
  const FieldElement &x0 = x.c_[0], &x1 = x.c_[1], &x2 = x.c_[2];
  const FieldElement &y0 = y.c_[0], &y1 = y.c_[1], &y2 = y.c_[2];
  FieldElement cross = x1 * y2 + x2 * y1;
  FieldElement z0 = x0 * y0 + cross * beta;
  FieldElement z1 = x0 * y1 + x1 * y0 + cross * alpha + x2 * y2 * beta;
  FieldElement z2 = x0 * y2 + x1 * y1 + x2 * y0 + alpha * x2 * y2;
  return TowerElement(x.impl_, {std::move(z0), std::move(z1), std::move(z2)});
}

inline TowerElement operator*(const TowerElement& x, const TowerElement& y) {
  return ext_mul(x, y);
}

}  // namespace moore2
