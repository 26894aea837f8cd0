#pragma once

#include "gaussalg/algebra.hpp"
#include "gaussalg/errors.hpp"
#include "gaussalg/int_matrix.hpp"
#include "gaussalg/monomial.hpp"
#include "gaussalg/subset_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace gaussalg {

struct EnumLimits {
  std::uint64_t subset_budget = 10'000'000;
  int threads = 1;
};

/// Generating set of the Gauss algebra of a monomial algebra: one monomial
/// (g_{i_1}...g_{i_d})/(x_1...x_d) per d-subset of generators with
/// non-singular log-matrix, deduplicated and canonically ordered.
struct GaussResult {
  MonomialSet gens;
  int source_degree = 0;
  int ambient = 0;
  std::uint64_t subsets_examined = 0;
};

/// dim A = rank of the log-matrix.
inline int algebra_dimension(const MonomialAlgebra& a) { return rank_of_columns(a.log_matrix()); }

namespace detail {

inline Monomial gauss_monomial(const MonomialSet& gens, const std::vector<int>& subset, int d) {
  std::vector<int> e(static_cast<std::size_t>(d), -1); // the division by x_1...x_d
  for (int j : subset)
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] += gens[static_cast<std::size_t>(j)].exponent(i);
  // det != 0 forbids a zero row, so every variable occurs in the product
  for (int x : e) GAUSSALG_CHECK(x >= 0);
  return Monomial(std::move(e));
}

} // namespace detail

inline GaussResult gauss_generators(const MonomialAlgebra& a, const EnumLimits& limits = {}) {
  const int d = a.ambient();
  const IntMatrix logm = a.log_matrix();
  const int rk = rank_of_columns(logm);
  if (rk < d)
    throw input_error("algebra has dimension " + std::to_string(rk) + " < " + std::to_string(d) +
                      "; the Gauss algebra needs full dimension");

  ScanBudget budget;
  budget.limit = limits.subset_budget;

  MonomialHashSet harvest;
  const int threads = std::max(1, limits.threads);
  if (threads == 1) {
    scan_independent_subsets(logm, d, budget, [&](const std::vector<int>& subset) {
      harvest.insert(detail::gauss_monomial(a.generators(), subset, d));
      return true;
    });
  } else {
    // Workers split the root level of the colex DFS; each collects into a
    // private set and the union is order-independent.
    std::vector<MonomialHashSet> local(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    std::mutex err_mutex;
    std::exception_ptr first_error;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          scan_independent_subsets(
              logm, d, budget,
              [&](const std::vector<int>& subset) {
                local[static_cast<std::size_t>(w)].insert(detail::gauss_monomial(a.generators(), subset, d));
                return true;
              },
              threads, w);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          budget.cancelled.store(true, std::memory_order_relaxed);
        }
      });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    for (auto& set : local)
      for (const Monomial& m : set) harvest.insert(m);
  }

  GaussResult result;
  result.source_degree = a.degree();
  result.ambient = d;
  result.subsets_examined = budget.used.load();
  result.gens.assign(harvest.begin(), harvest.end());
  result.gens = canonicalized(std::move(result.gens));
  const int want = (a.degree() - 1) * d;
  for (const Monomial& m : result.gens) GAUSSALG_CHECK(m.degree() == want);
  return result;
}

/// Relation data of an equigenerated sequence: dimension, embedding
/// dimension, rank of the relation lattice, and — exactly when that rank is
/// one — the defining binomial as the HNF-normalized kernel vector over
/// generator indices (positive part minus negative part).
struct RelationReport {
  int dim = 0;
  int edim = 0;
  int kernel_rank = 0;
  std::optional<std::vector<Integer>> witness;

  std::vector<std::pair<int, Integer>> witness_positive() const {
    std::vector<std::pair<int, Integer>> out;
    if (witness)
      for (int i = 0; i < static_cast<int>(witness->size()); ++i)
        if ((*witness)[static_cast<std::size_t>(i)] > 0) out.emplace_back(i, (*witness)[static_cast<std::size_t>(i)]);
    return out;
  }
  std::vector<std::pair<int, Integer>> witness_negative() const {
    std::vector<std::pair<int, Integer>> out;
    if (witness)
      for (int i = 0; i < static_cast<int>(witness->size()); ++i)
        if ((*witness)[static_cast<std::size_t>(i)] < 0) out.emplace_back(i, -(*witness)[static_cast<std::size_t>(i)]);
    return out;
  }
};

inline RelationReport relation_report(const MonomialSet& gens) {
  if (gens.empty()) throw input_error("relation_report: empty generating set");
  if (!is_equigenerated(gens)) throw input_error("relation_report: generators must share one degree");
  {
    MonomialHashSet seen(gens.begin(), gens.end());
    if (seen.size() != gens.size()) throw input_error("relation_report: duplicate generators");
  }
  const IntMatrix logm = log_matrix_of(gens);
  RelationReport rep;
  rep.edim = static_cast<int>(gens.size());
  rep.dim = rank_of_columns(logm);
  const LatticeBasis kernel = kernel_lattice(logm);
  rep.kernel_rank = kernel.rank();
  GAUSSALG_CHECK(rep.edim - rep.dim == rep.kernel_rank);
  if (rep.kernel_rank == 1) {
    rep.witness = kernel.basis().row(0);
    // the binomial really vanishes on the monomials
    Integer check = 0;
    for (int i = 0; i < logm.rows(); ++i) {
      Integer s = 0;
      for (int j = 0; j < logm.cols(); ++j) s += logm(i, j) * (*rep.witness)[static_cast<std::size_t>(j)];
      check += abs(s);
    }
    GAUSSALG_CHECK(check == 0);
  }
  return rep;
}

/// Quotient lattice of an equigenerated family: the subgroup of Z^d generated
/// by all pairwise differences of exponent vectors.
inline LatticeBasis quotient_lattice(const MonomialSet& gens) {
  if (gens.empty()) throw input_error("quotient lattice of an empty family");
  const int d = gens.front().ambient();
  IntMatrix rows(static_cast<int>(gens.size()) - 1, d);
  for (int i = 1; i < static_cast<int>(gens.size()); ++i)
    for (int j = 0; j < d; ++j)
      rows(i - 1, j) = gens[static_cast<std::size_t>(i)].exponent(j) - gens.front().exponent(j);
  return LatticeBasis::from_rows(d, rows);
}

/// The Gauss map is birational exactly when the two quotient lattices agree:
/// the function field of a monomial projective variety is the fraction field
/// of the group algebra of its quotient lattice, so products of generator
/// fractions reach g_i/g_j for all i, j iff the lattices coincide.
inline bool is_birational(const MonomialAlgebra& a, const MonomialSet& gauss_gens) {
  if (gauss_gens.empty()) throw input_error("is_birational: empty generating set");
  if (!is_equigenerated(gauss_gens)) throw input_error("is_birational: generators must share one degree");
  if (gauss_gens.front().ambient() != a.ambient())
    throw input_error("is_birational: ambient dimension mismatch");
  return lattice_equal(quotient_lattice(a.generators()), quotient_lattice(gauss_gens));
}

/// Bounded non-normality probe. For each level k <= level_bound it walks the
/// integer points of degree k*r that lie in both the lattice and the rational
/// cone spanned by the generators, in canonical order, and reports the first
/// one that is not a sum of k generators. A gap proves non-normality; a clean
/// run is evidence only, not a proof.
struct NormalityProbe {
  bool clean = true;
  int gap_level = 0;
  std::vector<int> gap_point; // exponent vector, empty when clean
};

namespace detail {

class ConeMembership {
public:
  explicit ConeMembership(const IntMatrix& cols) : cols_(cols) {
    const int q = rank_of_columns(cols);
    ScanBudget budget; // the probe targets desk-scale families; fail loudly beyond
    budget.limit = 10'000'000;
    scan_independent_subsets(cols, q, budget, [&](const std::vector<int>& subset) {
      if (simplices_.size() >= 1'000'000)
        throw budget_error("normality probe: too many simplicial subcones; the generator family is "
                           "beyond the probe's configured scale");
      Simplex s;
      s.cols = subset;
      // q independent rows of the chosen columns
      IntMatrix sub(cols.rows(), q);
      for (int j = 0; j < q; ++j)
        for (int i = 0; i < cols.rows(); ++i) sub(i, j) = cols(i, subset[static_cast<std::size_t>(j)]);
      s.pivot_rows = independent_rows(sub, q);
      IntMatrix base(q, q);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) base(i, j) = sub(s.pivot_rows[static_cast<std::size_t>(i)], j);
      s.det = det_exact(base);
      GAUSSALG_CHECK(s.det != 0);
      simplices_.push_back(std::move(s));
      return true;
    });
  }

  /// z in cone(columns) iff z sits in one of the full-rank simplicial
  /// subcones (Caratheodory), decided by exact Cramer solves.
  bool contains(const std::vector<Integer>& z) const {
    for (const auto& s : simplices_)
      if (in_simplex(s, z)) return true;
    return false;
  }

private:
  struct Simplex {
    std::vector<int> cols;
    std::vector<int> pivot_rows;
    Integer det;
  };

  static std::vector<int> independent_rows(const IntMatrix& m, int q) {
    // Row-reduce a copy, remembering which original rows supplied pivots.
    IntMatrix w = m;
    std::vector<int> origin(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) origin[static_cast<std::size_t>(i)] = i;
    std::vector<int> picked;
    int r = 0;
    Integer prev = 1;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
      int p = -1;
      for (int i = r; i < m.rows(); ++i)
        if (w(i, col) != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r) {
        w.swap_rows(p, r);
        std::swap(origin[static_cast<std::size_t>(p)], origin[static_cast<std::size_t>(r)]);
      }
      picked.push_back(origin[static_cast<std::size_t>(r)]);
      for (int i = r + 1; i < m.rows(); ++i) {
        for (int j = col + 1; j < m.cols(); ++j) w(i, j) = (w(r, col) * w(i, j) - w(i, col) * w(r, j)) / prev;
        w(i, col) = 0;
      }
      prev = w(r, col);
      ++r;
    }
    GAUSSALG_CHECK(static_cast<int>(picked.size()) == q);
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  bool in_simplex(const Simplex& s, const std::vector<Integer>& z) const {
    const int q = static_cast<int>(s.cols.size());
    IntMatrix base(q, q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        base(i, j) = cols_(s.pivot_rows[static_cast<std::size_t>(i)], s.cols[static_cast<std::size_t>(j)]);
    // Cramer numerators for S*lambda = z restricted to the pivot rows.
    std::vector<Integer> num(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
      IntMatrix b = base;
      for (int i = 0; i < q; ++i) b(i, j) = z[static_cast<std::size_t>(s.pivot_rows[static_cast<std::size_t>(i)])];
      num[static_cast<std::size_t>(j)] = det_exact(b);
      // lambda_j = num_j / det must be non-negative
      if (s.det > 0 ? num[static_cast<std::size_t>(j)] < 0 : num[static_cast<std::size_t>(j)] > 0) return false;
    }
    // Verify every ambient row: sum_j S[r][j]*num_j == det * z[r].
    for (int r = 0; r < cols_.rows(); ++r) {
      Integer lhs = 0;
      for (int j = 0; j < q; ++j) lhs += cols_(r, s.cols[static_cast<std::size_t>(j)]) * num[static_cast<std::size_t>(j)];
      if (lhs != s.det * z[static_cast<std::size_t>(r)]) return false;
    }
    return true;
  }

  IntMatrix cols_;
  std::vector<Simplex> simplices_;
};

inline bool sum_of_k_generators(const MonomialSet& gens, std::vector<int>& target, int k, std::size_t min_idx) {
  if (k == 0) {
    for (int t : target)
      if (t != 0) return false;
    return true;
  }
  for (std::size_t i = min_idx; i < gens.size(); ++i) {
    const auto& e = gens[i].exponents();
    bool fits = true;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > target[j]) {
        fits = false;
        break;
      }
    if (!fits) continue;
    for (std::size_t j = 0; j < e.size(); ++j) target[j] -= e[j];
    const bool ok = sum_of_k_generators(gens, target, k - 1, i);
    for (std::size_t j = 0; j < e.size(); ++j) target[j] += e[j];
    if (ok) return true;
  }
  return false;
}

/// Walk compositions of `total` into d parts in canonical (descending
/// lexicographic) order.
template <typename Fn>
bool for_each_composition(int d, int total, std::vector<int>& acc, int pos, Fn&& fn) {
  if (pos == d - 1) {
    acc[static_cast<std::size_t>(pos)] = total;
    return fn(acc);
  }
  for (int e = total; e >= 0; --e) {
    acc[static_cast<std::size_t>(pos)] = e;
    if (!for_each_composition(d, total - e, acc, pos + 1, fn)) return false;
  }
  return true;
}

} // namespace detail

inline NormalityProbe normality_probe(const MonomialAlgebra& a, int level_bound) {
  if (level_bound < 1) throw input_error("normality probe needs level bound >= 1");
  const int d = a.ambient();
  const int r = a.degree();
  const IntMatrix logm = a.log_matrix();
  const LatticeBasis lattice = LatticeBasis::from_rows(d, logm.transposed());
  const detail::ConeMembership cone(logm);

  NormalityProbe probe;
  for (int level = 1; level <= level_bound && probe.clean; ++level) {
    std::vector<int> point(static_cast<std::size_t>(d), 0);
    detail::for_each_composition(d, level * r, point, 0, [&](const std::vector<int>& z) {
      std::vector<Integer> zi(z.begin(), z.end());
      if (!lattice.contains(zi)) return true;
      if (!cone.contains(zi)) return true;
      std::vector<int> target = z;
      if (detail::sum_of_k_generators(a.generators(), target, level, 0)) return true;
      probe.clean = false;
      probe.gap_level = level;
      probe.gap_point = z;
      return false;
    });
  }
  return probe;
}

} // namespace gaussalg
