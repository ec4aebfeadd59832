#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace moore2 {

class FieldElement;

namespace detail {

// Coefficient vectors over Z_p, index i = coefficient of x^i, not trimmed.
inline void poly_reduce_by(std::vector<int64_t>& r, const std::vector<int64_t>& modulus,
                           int64_t p) {
  int e = static_cast<int>(modulus.size()) - 1;  // modulus is monic of degree e
  for (int d = static_cast<int>(r.size()) - 1; d >= e; --d) {
    int64_t t = mod_floor(r[d], p);
    if (t != 0) {
      for (int i = 0; i < e; ++i)
        r[d - e + i] = mod_floor(r[d - e + i] - t * modulus[i], p);
    }
    r[d] = 0;
  }
  r.resize(e);
  for (auto& c : r) c = mod_floor(c, p);
}

// Remainder of a by monic b over Z_p; both trimmed coefficient vectors.
inline std::vector<int64_t> poly_rem(std::vector<int64_t> a, const std::vector<int64_t>& b,
                                     int64_t p) {
  int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    int64_t t = mod_floor(a[d], p);
    if (t != 0) {
      for (int i = 0; i <= db; ++i) a[d - db + i] = mod_floor(a[d - db + i] - t * b[i], p);
    }
  }
  while (!a.empty() && mod_floor(a.back(), p) == 0) a.pop_back();
  for (auto& c : a) c = mod_floor(c, p);
  return a;
}

}  // namespace detail

// GF(p^e) presented as Z_p[x] modulo a monic irreducible polynomial.
// Elements are coefficient vectors (c0, ..., c_{e-1}), constant term first.
// The canonical total order on elements is lexicographic on that vector,
// c0 compared first; it drives every deterministic scan in the library.
class FieldSpec {
 public:
  FieldSpec() = default;

  bool valid() const { return impl_ != nullptr; }
  int64_t characteristic() const { return impl_->p; }
  int degree() const { return impl_->e; }
  int64_t order() const { return impl_->q; }
  // Length degree()+1, monic: modulus()[degree()] == 1.
  const std::vector<int64_t>& modulus() const { return impl_->mod; }

  FieldElement zero() const;
  FieldElement one() const;
  // Residue class of x. A generator of the vector-space basis, not
  // necessarily of the multiplicative group.
  FieldElement gen() const;
  FieldElement scalar(int64_t v) const;
  FieldElement element(std::vector<int64_t> coeffs) const;

  // Canonical enumeration: from_index(i) is the i-th element in canonical
  // order, i in [0, order()).
  FieldElement from_index(int64_t idx) const;
  int64_t index_of(const FieldElement& a) const;

  bool operator==(const FieldSpec& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    return impl_->p == o.impl_->p && impl_->mod == o.impl_->mod;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  struct Impl {
    int64_t p = 0;
    int e = 0;
    int64_t q = 0;
    std::vector<int64_t> mod;
  };
  std::shared_ptr<const Impl> impl_;

  explicit FieldSpec(std::shared_ptr<const Impl> im) : impl_(std::move(im)) {}
  friend FieldSpec make_field(int64_t p, int e);
  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement() = default;

  bool valid() const { return spec_.valid(); }
  const FieldSpec& field() const { return spec_; }
  const std::vector<int64_t>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int64_t v) { return v == 0; });
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    std::vector<int64_t> r(a.c_.size());
    int64_t p = a.spec_.characteristic();
    for (size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(a.c_[i] + b.c_[i], p);
    return FieldElement(a.spec_, std::move(r));
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    std::vector<int64_t> r(a.c_.size());
    int64_t p = a.spec_.characteristic();
    for (size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(a.c_[i] - b.c_[i], p);
    return FieldElement(a.spec_, std::move(r));
  }

  friend FieldElement operator-(const FieldElement& a) {
    std::vector<int64_t> r(a.c_.size());
    int64_t p = a.spec_.characteristic();
    for (size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(-a.c_[i], p);
    return FieldElement(a.spec_, std::move(r));
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    int64_t p = a.spec_.characteristic();
    int e = a.spec_.degree();
    if (e == 1) return FieldElement(a.spec_, {mod_floor(a.c_[0] * b.c_[0], p)});
    std::vector<int64_t> conv(2 * e - 1, 0);
    for (int i = 0; i < e; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < e; ++j)
        conv[i + j] = mod_floor(conv[i + j] + a.c_[i] * b.c_[j], p);
    }
    detail::poly_reduce_by(conv, a.spec_.modulus(), p);
    return FieldElement(a.spec_, std::move(conv));
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  bool operator==(const FieldElement& o) const { return spec_ == o.spec_ && c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldSpec spec_;
  std::vector<int64_t> c_;

  FieldElement(FieldSpec s, std::vector<int64_t> c) : spec_(std::move(s)), c_(std::move(c)) {}

  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.spec_.valid() || !b.spec_.valid())
      throw FieldMismatchError("operation on an uninitialized field element");
    if (a.spec_ != b.spec_)
      throw FieldMismatchError("operands belong to different fields");
  }

  friend class FieldSpec;
};

// Canonical order: lexicographic on (c0, ..., c_{e-1}), c0 first.
inline bool canonical_less(const FieldElement& a, const FieldElement& b) {
  return a.coeffs() < b.coeffs();
}

inline FieldElement FieldSpec::zero() const { return FieldElement(*this, std::vector<int64_t>(impl_->e, 0)); }

inline FieldElement FieldSpec::one() const {
  std::vector<int64_t> c(impl_->e, 0);
  c[0] = impl_->p > 1 ? 1 : 0;
  return FieldElement(*this, std::move(c));
}

inline FieldElement FieldSpec::gen() const { return element({0, 1}); }

inline FieldElement FieldSpec::scalar(int64_t v) const {
  std::vector<int64_t> c(impl_->e, 0);
  c[0] = mod_floor(v, impl_->p);
  return FieldElement(*this, std::move(c));
}

inline FieldElement FieldSpec::element(std::vector<int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > impl_->e) {
    detail::poly_reduce_by(coeffs, impl_->mod, impl_->p);
  }
  coeffs.resize(impl_->e, 0);
  for (auto& c : coeffs) c = mod_floor(c, impl_->p);
  return FieldElement(*this, std::move(coeffs));
}

inline FieldElement FieldSpec::from_index(int64_t idx) const {
  if (idx < 0 || idx >= impl_->q) throw IndexOutOfRangeError("element index out of range");
  std::vector<int64_t> c(impl_->e);
  for (int i = impl_->e - 1; i >= 0; --i) {
    c[i] = idx % impl_->p;
    idx /= impl_->p;
  }
  return FieldElement(*this, std::move(c));
}

inline int64_t FieldSpec::index_of(const FieldElement& a) const {
  int64_t idx = 0;
  for (int i = 0; i < impl_->e; ++i) idx = idx * impl_->p + a.coeffs()[i];
  return idx;
}

namespace detail {

// Irreducibility over Z_p by trial division against every monic polynomial
// of degree 1..deg/2. Exhaustive but cheap at the supported field sizes.
inline bool poly_irreducible(const std::vector<int64_t>& f, int64_t p) {
  int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t k = 0; k < count; ++k) {
      std::vector<int64_t> g(d + 1, 0);
      g[d] = 1;
      int64_t v = k;
      for (int i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

// Constructs GF(p^e) with the lexicographically first monic irreducible
// modulus of degree e (for e = 1 the modulus is x). Deterministic.
inline FieldSpec make_field(int64_t p, int e) {
  if (!is_prime(p)) throw NotPrimeError("p=" + std::to_string(p) + " is not prime");
  if (e < 1) throw DegreeOutOfRangeError("extension degree must be >= 1");
  if (e == 1) {
    if (p > (int64_t{1} << 20))
      throw DegreeOutOfRangeError("prime field order exceeds the desk-scale cap 2^20");
    auto impl = std::make_shared<FieldSpec::Impl>();
    impl->p = p;
    impl->e = 1;
    impl->q = p;
    impl->mod = {0, 1};
    return FieldSpec(std::move(impl));
  }
  int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 512) throw DegreeOutOfRangeError("extension field order exceeds the desk-scale cap 512");
  }
  // Scan coefficient tuples (c0, ..., c_{e-1}) in lexicographic order,
  // c0 most significant, and keep the first irreducible hit.
  for (int64_t idx = 0; idx < q; ++idx) {
    std::vector<int64_t> f(e + 1, 0);
    f[e] = 1;
    int64_t v = idx;
    for (int i = e - 1; i >= 0; --i) {
      f[i] = v % p;
      v /= p;
    }
    if (detail::poly_irreducible(f, p)) {
      auto impl = std::make_shared<FieldSpec::Impl>();
      impl->p = p;
      impl->e = e;
      impl->q = q;
      impl->mod = std::move(f);
      return FieldSpec(std::move(impl));
    }
  }
  throw InternalError("no irreducible modulus found");  // cannot happen
}

inline FieldElement inv(const FieldElement& a);

inline FieldElement pow(const FieldElement& a, int64_t n) {
  if (!a.valid()) throw FieldMismatchError("pow of an uninitialized field element");
  if (n < 0) return pow(inv(a), -n);
  FieldElement r = a.field().one();
  FieldElement b = a;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

inline FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZeroError("inverse of zero");
  return pow(a, a.field().order() - 2);
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * inv(b);
}

// Square root in characteristic 2, where squaring is a bijection:
// the unique root of a is a^(q/2).
inline FieldElement sqrt_char2(const FieldElement& a) {
  if (a.field().characteristic() != 2)
    throw WrongCharacteristicError("square root routine requires characteristic 2");
  return pow(a, a.field().order() / 2);
}

// Smallest (c, d) in canonical order with c^2 + d^2 = b. A solution always
// exists in every finite field.
inline std::pair<FieldElement, FieldElement> two_squares(const FieldElement& b) {
  const FieldSpec& K = b.field();
  int64_t q = K.order();
  // smallest root of each square, scanned in canonical order
  std::vector<int64_t> root_of(q, -1);
  for (int64_t i = 0; i < q; ++i) {
    FieldElement d = K.from_index(i);
    int64_t s = K.index_of(d * d);
    if (root_of[s] < 0) root_of[s] = i;
  }
  for (int64_t i = 0; i < q; ++i) {
    FieldElement c = K.from_index(i);
    int64_t want = K.index_of(b - c * c);
    if (root_of[want] >= 0) return {c, K.from_index(root_of[want])};
  }
  throw InternalError("two-squares scan exhausted");  // cannot happen
}

inline std::string to_string(const FieldElement& a) {
  const auto& c = a.coeffs();
  if (c.size() == 1) return std::to_string(c[0]);
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += (i == 1) ? "z" : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// Parses the to_string format: integer-coefficient polynomials in z, e.g.
// "2", "z+1", "2*z^3+z". Unreduced powers such as "z^2" over GF(4) are
// accepted and reduced by the field modulus.
inline FieldElement parse_element(const FieldSpec& K, const std::string& text) {
  std::vector<int64_t> coeffs;
  auto bump = [&](int deg, int64_t coef) {
    if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, 0);
    coeffs[deg] += coef;
  };
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  skip_ws();
  if (i >= text.size()) throw InputError("empty field element");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int64_t sign = 1;
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw InputError("malformed field element: " + text);
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    int64_t coef = -1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        coef = coef * 10 + (text[i++] - '0');
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int deg = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      deg = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw InputError("malformed field element: " + text);
        deg = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          deg = deg * 10 + (text[i++] - '0');
      }
      if (coef < 0) coef = 1;
    } else if (coef < 0) {
      throw InputError("malformed field element: " + text);
    }
    bump(deg, sign * coef);
    skip_ws();
  }
  if (coeffs.empty()) coeffs.push_back(0);
  return K.element(std::move(coeffs));
}

}  // namespace moore2
