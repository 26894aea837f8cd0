#pragma once

#include "gaussalg/errors.hpp"
#include "gaussalg/monomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaussalg {

namespace detail {

/// All degree-r monomials in d variables, emitted in canonical
/// (descending lexicographic) order.
inline void emit_degree_monomials(int d, int r, std::vector<int>& acc, int pos, MonomialSet& out) {
  if (pos == d - 1) {
    acc[static_cast<std::size_t>(pos)] = r;
    out.emplace_back(acc);
    return;
  }
  for (int e = r; e >= 0; --e) {
    acc[static_cast<std::size_t>(pos)] = e;
    emit_degree_monomials(d, r - e, acc, pos + 1, out);
  }
}

} // namespace detail

inline MonomialSet all_degree_monomials(int d, int r) {
  if (d < 1) throw input_error("need at least one variable");
  if (r < 0) throw input_error("degree must be non-negative");
  MonomialSet out;
  std::vector<int> acc(static_cast<std::size_t>(d), 0);
  detail::emit_degree_monomials(d, r, acc, 0, out);
  return out;
}

/// The squarefree r-Veronese family: all C(d, r) squarefree degree-r
/// monomials in d variables, canonical order.
inline MonomialSet squarefree_veronese(int r, int d) {
  if (r < 1) throw input_error("squarefree Veronese degree must be >= 1");
  if (r > d)
    throw input_error("squarefree degree " + std::to_string(r) + " exceeds variable count " + std::to_string(d));
  MonomialSet out;
  std::vector<int> pick;
  // lexicographic subsets of variables; exponent vectors then happen to come
  // out in canonical order already, but we normalize anyway
  auto rec = [&](auto&& self, int next, int left) -> void {
    if (left == 0) {
      out.push_back(Monomial::from_vars(d, pick));
      return;
    }
    for (int v = next; v <= d - left; ++v) {
      pick.push_back(v);
      self(self, v + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, r);
  return canonicalized(std::move(out));
}

/// Mon_S(t, r) in d variables: degree-r monomials with support of size >= t.
inline MonomialSet mon_min_support(int t, int r, int d) {
  if (t > d) throw input_error("support bound exceeds variable count");
  MonomialSet out;
  for (Monomial& m : all_degree_monomials(d, r))
    if (m.support_size() >= t) out.push_back(std::move(m));
  return out;
}

/// A violation of the polymatroid exchange property: deg_i(u) > deg_i(v) and
/// no j with deg_j(u) < deg_j(v) puts x_j * u / x_i back into the set.
struct ExchangeWitness {
  Monomial u;
  Monomial v;
  int var; // the index i that cannot be exchanged
};

/// Exhaustive exchange check, O(|G|^2 * d). The first violation found is
/// returned, scanning u canonically, v in reverse canonical order and i
/// ascending, which makes the reported witness deterministic (and
/// parallel-merge friendly: the scan order is a fixed total order on triples).
inline std::optional<ExchangeWitness> polymatroid_exchange_check(const MonomialSet& g) {
  if (!is_equigenerated(g)) throw input_error("exchange check: generators must share one degree");
  const MonomialSet set = canonicalized(g);
  if (set.empty()) return std::nullopt;
  const int d = set.front().ambient();
  MonomialHashSet members(set.begin(), set.end());
  for (const Monomial& u : set) {
    for (std::size_t rv = set.size(); rv-- > 0;) {
      const Monomial& v = set[rv];
      for (int i = 0; i < d; ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        bool exchangeable = false;
        for (int j = 0; j < d && !exchangeable; ++j)
          if (u.exponent(j) < v.exponent(j) && members.count(u.replace_var(i, j))) exchangeable = true;
        if (!exchangeable) return ExchangeWitness{u, v, i};
      }
    }
  }
  return std::nullopt;
}

/// Predicted Gauss generating set of the squarefree 2-Veronese:
/// Mon_S(3,4) minus x1x2x3x4 for d = 4, Mon_S(3,d) for d >= 5.
inline MonomialSet expected_gauss_squarefree2(int d) {
  if (d < 4)
    throw input_error("the structure theorem covers d >= 4; the Gauss algebra is a polynomial ring below that");
  MonomialSet out = mon_min_support(3, d, d);
  if (d == 4) {
    const Monomial full({1, 1, 1, 1});
    MonomialSet kept;
    for (Monomial& m : out)
      if (m != full) kept.push_back(std::move(m));
    out = std::move(kept);
  }
  return out;
}

} // namespace gaussalg
