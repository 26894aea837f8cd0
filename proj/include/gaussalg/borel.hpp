#pragma once

#include "gaussalg/errors.hpp"
#include "gaussalg/monomial.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace gaussalg {

/// True iff the equigenerated set is closed under every strongly stable move
/// x_i * (u / x_j), i < j, x_j | u.
inline bool is_strongly_stable(const MonomialSet& g) {
  if (!is_equigenerated(g)) throw input_error("is_strongly_stable: generators must share one degree");
  MonomialHashSet members(g.begin(), g.end());
  for (const Monomial& u : g)
    for (int j : u.support())
      for (int i = 0; i < j; ++i)
        if (!members.count(u.replace_var(j, i))) return false;
  return true;
}

/// A Borel (strongly stable) set of monomials of one degree, canonically
/// ordered. Instances are only created through paths that establish closure.
class BorelSet {
public:
  /// The smallest Borel set containing the seed: least fixed point of the
  /// strongly stable moves, computed by a worklist over a hash set.
  static BorelSet closure(const MonomialSet& seed) {
    if (seed.empty()) throw input_error("borel closure of an empty set");
    if (!is_equigenerated(seed)) throw input_error("borel closure: seed monomials must share one degree");
    MonomialHashSet members(seed.begin(), seed.end());
    std::deque<Monomial> work(members.begin(), members.end());
    while (!work.empty()) {
      const Monomial u = std::move(work.front());
      work.pop_front();
      for (int j : u.support())
        for (int i = 0; i < j; ++i) {
          Monomial v = u.replace_var(j, i);
          if (members.insert(v).second) work.push_back(std::move(v));
        }
    }
    BorelSet b;
    b.d_ = seed.front().ambient();
    b.degree_ = seed.front().degree();
    b.members_.assign(members.begin(), members.end());
    b.members_ = canonicalized(std::move(b.members_));
    return b;
  }

  /// Wrap an already strongly stable set; rejects anything else.
  static BorelSet from_stable(MonomialSet members) {
    if (members.empty()) throw input_error("a Borel set cannot be empty");
    if (!is_strongly_stable(members)) throw input_error("input set is not strongly stable");
    BorelSet b;
    b.d_ = members.front().ambient();
    b.degree_ = members.front().degree();
    b.members_ = canonicalized(std::move(members));
    return b;
  }

  int ambient() const { return d_; }
  int degree() const { return degree_; }
  const MonomialSet& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

private:
  BorelSet() = default;
  int d_ = 0;
  int degree_ = 0;
  MonomialSet members_;
};

/// The Borel generators: elements maximal with respect to the Borel partial
/// order. Their closure is re-checked against the input before returning.
inline MonomialSet borel_generators(const BorelSet& g) {
  const MonomialSet& members = g.members();
  std::vector<std::vector<int>> tuples;
  tuples.reserve(members.size());
  for (const Monomial& m : members) tuples.push_back(m.sorted_var_indices());

  auto tuple_leq = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  };

  MonomialSet maximal;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool dominated = false;
    // Scan dominator candidates from the x_d-heavy end of the canonical
    // order; in a principal set the unique maximum sits there.
    for (std::size_t rj = members.size(); rj-- > 0;) {
      if (rj == i) continue;
      if (tuple_leq(tuples[i], tuples[rj])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(members[i]);
  }
  GAUSSALG_CHECK(!maximal.empty());
  GAUSSALG_CHECK(BorelSet::closure(maximal).members() == members);
  return maximal;
}

inline bool is_principal(const BorelSet& g) { return borel_generators(g).size() == 1; }

/// Closed-form Borel generator of the Gauss algebra of a principal Borel
/// algebra: for m with support i_1 < ... < i_r (1-based) and i_r = d,
///   m' = m^d / (x_{i_1}^{i_1 - 1} x_{i_2}^{i_2 - i_1} ... x_{i_r}^{i_r - i_{r-1} + 1}).
/// For one-variable support the denominator is read telescopically as x_d^d,
/// the unique reading under which the Veronese case comes out right.
inline Monomial principal_gauss_generator(const Monomial& m, int ambient) {
  if (m.ambient() != ambient)
    throw input_error("principal_gauss_generator: monomial has " + std::to_string(m.ambient()) +
                      " variables, expected " + std::to_string(ambient));
  const std::vector<int> supp = m.support();
  if (supp.empty()) throw input_error("principal_gauss_generator: constant monomial");
  if (supp.back() != ambient - 1)
    throw input_error("algebra dimension deficient: x_" + std::to_string(ambient) +
                      " does not divide the Borel generator");
  const int r = static_cast<int>(supp.size());
  std::vector<int> exps(static_cast<std::size_t>(ambient), 0);
  for (int k = 0; k < r; ++k) {
    const int pos = supp[static_cast<std::size_t>(k)] + 1; // 1-based i_k
    int denom;
    if (r == 1)
      denom = pos; // telescoping total: the whole denominator degree is i_r
    else if (k == 0)
      denom = pos - 1;
    else if (k == r - 1)
      denom = pos - (supp[static_cast<std::size_t>(k - 1)] + 1) + 1;
    else
      denom = pos - (supp[static_cast<std::size_t>(k - 1)] + 1);
    const int e = ambient * m.exponent(supp[static_cast<std::size_t>(k)]) - denom;
    GAUSSALG_CHECK(e >= 0);
    exps[static_cast<std::size_t>(supp[static_cast<std::size_t>(k)])] = e;
  }
  Monomial out(std::move(exps));
  GAUSSALG_CHECK(out.degree() == (m.degree() - 1) * ambient);
  return out;
}

} // namespace gaussalg
