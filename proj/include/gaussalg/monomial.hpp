#pragma once

#include "gaussalg/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <unordered_set>
#include <vector>

namespace gaussalg {

/// A monomial in a fixed number of variables, stored as its exponent vector.
/// Variables are indexed 0..d-1 internally; the I/O layer prints them 1-based
/// (x1, x2, ...). Value type, immutable in spirit: operations return copies.
class Monomial {
public:
  Monomial() = default;

  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw input_error("monomial exponents must be non-negative");
  }

  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  /// Product of the given variables (repetition allowed), e.g. {0,0,2} = x1^2*x3.
  static Monomial from_vars(int ambient, const std::vector<int>& vars) {
    std::vector<int> e(static_cast<std::size_t>(ambient), 0);
    for (int v : vars) {
      if (v < 0 || v >= ambient) throw input_error("variable index out of range");
      ++e[static_cast<std::size_t>(v)];
    }
    return Monomial(std::move(e));
  }

  static Monomial one(int ambient) { return Monomial(std::vector<int>(static_cast<std::size_t>(ambient), 0)); }

  int ambient() const { return static_cast<int>(exps_.size()); }

  int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }

  const std::vector<int>& exponents() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < ambient(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    return s;
  }

  int support_size() const {
    int n = 0;
    for (int e : exps_) n += (e > 0);
    return n;
  }

  bool divides(const Monomial& other) const {
    GAUSSALG_CHECK(ambient() == other.ambient());
    for (int i = 0; i < ambient(); ++i)
      if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    GAUSSALG_CHECK(a.ambient() == b.ambient());
    std::vector<int> e(a.exps_);
    for (int i = 0; i < b.ambient(); ++i) e[static_cast<std::size_t>(i)] += b.exps_[static_cast<std::size_t>(i)];
    return Monomial(std::move(e));
  }

  /// Exact quotient; the divisor must divide.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    GAUSSALG_CHECK(a.ambient() == b.ambient());
    std::vector<int> e(a.exps_);
    for (int i = 0; i < b.ambient(); ++i) {
      e[static_cast<std::size_t>(i)] -= b.exps_[static_cast<std::size_t>(i)];
      GAUSSALG_CHECK(e[static_cast<std::size_t>(i)] >= 0);
    }
    return Monomial(std::move(e));
  }

  /// x_to * (m / x_from); the strongly stable move when to < from.
  Monomial replace_var(int from, int to) const {
    GAUSSALG_CHECK(exps_[static_cast<std::size_t>(from)] > 0);
    std::vector<int> e(exps_);
    --e[static_cast<std::size_t>(from)];
    ++e[static_cast<std::size_t>(to)];
    return Monomial(std::move(e));
  }

  /// Index expansion x_{i_1}...x_{i_r} with i_1 <= ... <= i_r (0-based).
  std::vector<int> sorted_var_indices() const {
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(degree()));
    for (int i = 0; i < ambient(); ++i)
      for (int k = 0; k < exps_[static_cast<std::size_t>(i)]; ++k) idx.push_back(i);
    return idx;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = static_cast<std::size_t>(m.ambient()) * 0x9e3779b97f4a7c15ULL;
    for (int e : m.exponents()) h = h * 1099511628211ULL + static_cast<std::size_t>(e) + 0x100;
    return h;
  }
};

using MonomialSet = std::vector<Monomial>;
using MonomialHashSet = std::unordered_set<Monomial, MonomialHash>;

/// Canonical order on monomials of one ambient dimension: lexicographically
/// larger exponent vector first. This lists x1-heavy monomials first, the way
/// Borel sets are conventionally written, and fixes the output order of every
/// set this library produces.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  GAUSSALG_CHECK(a.ambient() == b.ambient());
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

/// Sort into canonical order and drop duplicates.
inline MonomialSet canonicalized(MonomialSet set) {
  std::sort(set.begin(), set.end(), CanonicalLess{});
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline bool is_equigenerated(const MonomialSet& set) {
  if (set.empty()) return true;
  const int d = set.front().ambient();
  const int r = set.front().degree();
  for (const Monomial& m : set)
    if (m.ambient() != d || m.degree() != r) return false;
  return true;
}

/// The Borel partial order on monomials of equal degree: u <= v iff, writing
/// both as weakly increasing variable products x_{i_1}...x_{i_r} and
/// x_{j_1}...x_{j_r}, i_k <= j_k for every k.
inline bool borel_leq(const Monomial& u, const Monomial& v) {
  if (u.ambient() != v.ambient()) throw input_error("borel_leq: ambient dimension mismatch");
  if (u.degree() != v.degree()) throw input_error("borel_leq: degree mismatch");
  const std::vector<int> iu = u.sorted_var_indices();
  const std::vector<int> iv = v.sorted_var_indices();
  for (std::size_t k = 0; k < iu.size(); ++k)
    if (iu[k] > iv[k]) return false;
  return true;
}

} // namespace gaussalg
