#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"
#include "report.hpp"
#include "tower.hpp"

namespace moore2 {

// A set of distinct residues mod n. Perfection (every nonzero residue a
// difference of set members in exactly one way) is a property checked by
// verify_perfect, not a constructor guarantee.
class DifferenceSet {
 public:
  DifferenceSet(int64_t n, std::vector<int64_t> elements) : n_(n) {
    if (n <= 0) throw InputError("difference set modulus must be positive");
    elems_.reserve(elements.size());
    for (int64_t e : elements) elems_.push_back(mod_floor(e, n));
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
      throw InvalidPdsError("difference set contains a repeated residue mod " +
                            std::to_string(n));
  }

  int64_t modulus() const { return n_; }
  int64_t size() const { return static_cast<int64_t>(elems_.size()); }
  const std::vector<int64_t>& elements() const { return elems_; }

  bool contains(int64_t r) const {
    return std::binary_search(elems_.begin(), elems_.end(), mod_floor(r, n_));
  }

  bool operator==(const DifferenceSet& o) const { return n_ == o.n_ && elems_ == o.elems_; }
  bool operator!=(const DifferenceSet& o) const { return !(*this == o); }

 private:
  int64_t n_;
  std::vector<int64_t> elems_;
};

// Ordered differences s - t mod n over distinct s, t; entry r counts how
// often residue r appears. Entry 0 is always 0.
inline std::vector<int64_t> difference_multiplicities(const DifferenceSet& D) {
  std::vector<int64_t> mult(D.modulus(), 0);
  const auto& e = D.elements();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = 0; j < e.size(); ++j)
      if (i != j) ++mult[mod_floor(e[i] - e[j], D.modulus())];
  return mult;
}

// Valid iff every nonzero residue mod n appears exactly once as a
// difference of distinct set members.
inline VerificationReport verify_perfect(const DifferenceSet& D) {
  VerificationReport rep;
  rep.multiplicities = difference_multiplicities(D);
  for (int64_t r = 1; r < D.modulus(); ++r) {
    if (rep.multiplicities[r] != 1)
      rep.failures.push_back("residue " + std::to_string(r) + " has multiplicity " +
                             std::to_string(rep.multiplicities[r]) + ", expected 1");
  }
  rep.valid = rep.failures.empty();
  return rep;
}

inline DifferenceSet translate(const DifferenceSet& D, int64_t m) {
  std::vector<int64_t> out;
  out.reserve(D.elements().size());
  for (int64_t e : D.elements()) out.push_back(mod_floor(e + m, D.modulus()));
  return DifferenceSet(D.modulus(), std::move(out));
}

inline DifferenceSet dilate(const DifferenceSet& D, int64_t r) {
  if (std::gcd(mod_floor(r, D.modulus()), D.modulus()) != 1)
    throw NotCoprimeError("dilation factor " + std::to_string(r) + " shares a factor with " +
                          std::to_string(D.modulus()));
  std::vector<int64_t> out;
  out.reserve(D.elements().size());
  for (int64_t e : D.elements()) out.push_back(mod_floor(e * mod_floor(r, D.modulus()),
                                                          D.modulus()));
  return DifferenceSet(D.modulus(), std::move(out));
}

// First (r, m) with gcd(r, n) = 1 and D2 = r*D1 + m, scanning translations
// in the outer loop and dilations inside, so pure dilations are reported
// with m = 0 rather than as some translate of a different dilation.
inline std::optional<std::pair<int64_t, int64_t>> find_equivalence(const DifferenceSet& D1,
                                                                   const DifferenceSet& D2) {
  if (D1.modulus() != D2.modulus())
    throw ModulusMismatchError("difference sets live over different moduli");
  if (D1.size() != D2.size()) return std::nullopt;
  int64_t n = D1.modulus();
  for (int64_t m = 0; m < n; ++m) {
    for (int64_t r = 1; r < n; ++r) {
      if (std::gcd(r, n) != 1) continue;
      std::vector<int64_t> image;
      image.reserve(D1.elements().size());
      for (int64_t e : D1.elements()) image.push_back(mod_floor(r * e + m, n));
      std::sort(image.begin(), image.end());
      if (image == D2.elements()) return std::make_pair(r, m);
    }
  }
  return std::nullopt;
}

// The q+1 coset logarithms {log xi} u {log(1 + t*xi) : t in K}, a perfect
// difference set mod q^2+q+1.
inline DifferenceSet singer_set(const CubicTower& T) {
  const FieldSpec& K = T.base();
  std::vector<int64_t> elems;
  elems.reserve(K.order() + 1);
  elems.push_back(T.coset_log(T.xi()));
  for (int64_t t = 0; t < K.order(); ++t)
    elems.push_back(T.coset_log(T.element(K.one(), K.from_index(t), K.zero())));
  return DifferenceSet(T.group_order(), std::move(elems));
}

inline DifferenceSet singer_set(int64_t q) { return singer_set(CubicTower::make(q)); }

// A list of distinct pairs over Z_p x Z_p, measured against the forbidden
// subgroup N = {(0, a)}. Parameters (m, n, k, lambda) = (p, p, size, lambda).
class RelativeDifferenceSet {
 public:
  RelativeDifferenceSet(int64_t p, std::vector<std::pair<int64_t, int64_t>> elements,
                        int64_t lambda = 1)
      : p_(p), lambda_(lambda) {
    if (p <= 1) throw InputError("group order parameter must exceed 1");
    if (lambda < 1) throw InputError("lambda must be positive");
    elems_.reserve(elements.size());
    for (auto& [a, b] : elements) elems_.emplace_back(mod_floor(a, p), mod_floor(b, p));
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
      throw InvalidPdsError("relative difference set contains a repeated pair");
  }

  int64_t p() const { return p_; }
  int64_t lambda() const { return lambda_; }
  int64_t size() const { return static_cast<int64_t>(elems_.size()); }
  const std::vector<std::pair<int64_t, int64_t>>& elements() const { return elems_; }

  bool contains(int64_t a, int64_t b) const {
    return std::binary_search(elems_.begin(), elems_.end(),
                              std::make_pair(mod_floor(a, p_), mod_floor(b, p_)));
  }

 private:
  int64_t p_;
  int64_t lambda_;
  std::vector<std::pair<int64_t, int64_t>> elems_;
};

// R = {(a, a^2) : a in Z_p}, a (p, p, p, 1) relative difference set in
// Z_p x Z_p for odd prime p.
inline RelativeDifferenceSet quadratic_rds(int64_t p) {
  if (!is_prime(p) || p == 2)
    throw NotOddPrimeError("p=" + std::to_string(p) + " is not an odd prime");
  std::vector<std::pair<int64_t, int64_t>> elems;
  elems.reserve(p);
  for (int64_t a = 0; a < p; ++a) elems.emplace_back(a, mod_floor(a * a, p));
  return RelativeDifferenceSet(p, std::move(elems), 1);
}

// Ordered differences of distinct pairs, indexed by a*p + b.
inline std::vector<int64_t> rds_difference_multiplicities(const RelativeDifferenceSet& R) {
  int64_t p = R.p();
  std::vector<int64_t> mult(p * p, 0);
  const auto& e = R.elements();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      int64_t a = mod_floor(e[i].first - e[j].first, p);
      int64_t b = mod_floor(e[i].second - e[j].second, p);
      ++mult[a * p + b];
    }
  return mult;
}

// Valid iff every pair outside the forbidden subgroup N = {(0, a)} occurs
// exactly lambda times as a difference of distinct members, and no pair of
// N except the identity occurs at all.
inline VerificationReport verify_rds(const RelativeDifferenceSet& R) {
  VerificationReport rep;
  rep.multiplicities = rds_difference_multiplicities(R);
  int64_t p = R.p();
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b) {
      int64_t got = rep.multiplicities[a * p + b];
      if (a == 0) {
        if (b != 0 && got != 0)
          rep.failures.push_back("forbidden pair (0," + std::to_string(b) +
                                 ") has multiplicity " + std::to_string(got) + ", expected 0");
      } else if (got != R.lambda()) {
        rep.failures.push_back("pair (" + std::to_string(a) + "," + std::to_string(b) +
                               ") has multiplicity " + std::to_string(got) + ", expected " +
                               std::to_string(R.lambda()));
      }
    }
  rep.valid = rep.failures.empty();
  return rep;
}

}  // namespace moore2
