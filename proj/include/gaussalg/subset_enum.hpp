#pragma once

#include "gaussalg/errors.hpp"
#include "gaussalg/int_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gaussalg {

/// Shared progress/budget state for one enumeration, possibly spanning
/// several worker threads.
struct ScanBudget {
  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit = 10'000'000;
  std::atomic<bool> cancelled{false};

  void charge() {
    if (used.fetch_add(1, std::memory_order_relaxed) + 1 > limit) {
      cancelled.store(true, std::memory_order_relaxed);
      throw budget_error("subset budget exceeded: limit " + std::to_string(limit) +
                         " partial subsets examined (raise the subset limit to override)");
    }
    if (cancelled.load(std::memory_order_relaxed)) throw budget_error("enumeration cancelled");
  }
};

namespace detail {

/// DFS over column subsets in colexicographic order: the subset's largest
/// column index is chosen first, ascending, then the remainder is enumerated
/// recursively among the smaller indices. A one-step fraction-free (Bareiss)
/// elimination is carried down the tree, so a partial subset whose columns
/// have become dependent is abandoned together with its whole subtree.
///
/// Emit receives the ascending index tuple and returns false to stop the scan.
template <typename S, typename Emit>
class SubsetScan {
public:
  SubsetScan(const IntMatrix& columns, int subset_size, ScanBudget& budget, Emit& emit)
      : d_(columns.rows()), size_(subset_size), budget_(budget), emit_(emit),
        row_used_(static_cast<std::size_t>(columns.rows()), 0) {
    roots_.reserve(static_cast<std::size_t>(columns.cols()));
    for (int j = 0; j < columns.cols(); ++j) {
      Cand c;
      c.idx = j;
      c.col.resize(static_cast<std::size_t>(d_));
      for (int i = 0; i < d_; ++i) c.col[static_cast<std::size_t>(i)] = static_cast<S>(columns(i, j));
      roots_.push_back(std::move(c));
    }
    chosen_.reserve(static_cast<std::size_t>(subset_size));
  }

  /// Restrict the outermost choice to positions congruent to `offset` mod
  /// `stride`; workers split the root level this way and the merged result is
  /// independent of the split.
  void run(int stride = 1, int offset = 0) {
    if (size_ == 0) {
      std::vector<int> empty;
      emit_(empty);
      return;
    }
    recurse(roots_, size_, S(1), stride, offset);
  }

private:
  struct Cand {
    int idx;
    std::vector<S> col; // reduced against the pivots chosen so far
  };

  bool recurse(std::vector<Cand>& cands, int need, const S& prev_pivot, int stride, int offset) {
    for (int pos = need - 1; pos < static_cast<int>(cands.size()); ++pos) {
      if (stride > 1 && (pos - (need - 1)) % stride != offset) continue;
      budget_.charge();
      Cand& c = cands[static_cast<std::size_t>(pos)];
      int p = -1;
      for (int i = 0; i < d_; ++i)
        if (!row_used_[static_cast<std::size_t>(i)] && c.col[static_cast<std::size_t>(i)] != 0) {
          p = i;
          break;
        }
      if (p < 0) continue; // dependent on the current prefix: prune subtree
      chosen_.push_back(c.idx);
      if (need == 1) {
        std::vector<int> subset(chosen_.rbegin(), chosen_.rend());
        const bool keep_going = emit_(subset);
        chosen_.pop_back();
        if (!keep_going) return false;
        continue;
      }
      row_used_[static_cast<std::size_t>(p)] = 1;
      const S& pv = c.col[static_cast<std::size_t>(p)];
      std::vector<Cand> child;
      child.reserve(static_cast<std::size_t>(pos));
      for (int t = 0; t < pos; ++t) {
        const Cand& v = cands[static_cast<std::size_t>(t)];
        Cand nc;
        nc.idx = v.idx;
        nc.col.resize(static_cast<std::size_t>(d_));
        const S& vp = v.col[static_cast<std::size_t>(p)];
        for (int i = 0; i < d_; ++i) {
          if (row_used_[static_cast<std::size_t>(i)]) continue; // dead rows stay zero
          nc.col[static_cast<std::size_t>(i)] =
              (pv * v.col[static_cast<std::size_t>(i)] - c.col[static_cast<std::size_t>(i)] * vp) / prev_pivot;
        }
        child.push_back(std::move(nc));
      }
      const bool keep_going = recurse(child, need - 1, pv, 1, 0);
      row_used_[static_cast<std::size_t>(p)] = 0;
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  int d_;
  int size_;
  ScanBudget& budget_;
  Emit& emit_;
  std::vector<Cand> roots_;
  std::vector<int> chosen_; // descending column indices along the DFS path
  std::vector<char> row_used_;
};

template <typename S>
int rank_by_elimination(std::vector<std::vector<S>> m) {
  if (m.empty() || m.front().empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  int r = 0;
  S prev = S(1);
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < rows; ++i) {
      auto& ri = m[static_cast<std::size_t>(i)];
      for (int j = col + 1; j < cols; ++j)
        ri[static_cast<std::size_t>(j)] =
            (pr[static_cast<std::size_t>(col)] * ri[static_cast<std::size_t>(j)] -
             ri[static_cast<std::size_t>(col)] * pr[static_cast<std::size_t>(j)]) /
            prev;
      ri[static_cast<std::size_t>(col)] = S(0);
    }
    prev = pr[static_cast<std::size_t>(col)];
    ++r;
  }
  return r;
}

/// Hadamard-style bound on every minor the scan can produce: product of the
/// `size` largest squared column norms. When intermediate Bareiss products
/// provably fit in 64 bits the scan runs on int64_t; otherwise on Integer.
/// Both paths are exact.
inline bool fits_int64(const IntMatrix& columns, int size) {
  std::vector<Integer> norms;
  norms.reserve(static_cast<std::size_t>(columns.cols()));
  for (int j = 0; j < columns.cols(); ++j) {
    Integer n = 0;
    for (int i = 0; i < columns.rows(); ++i) n += columns(i, j) * columns(i, j);
    norms.push_back(n < 1 ? Integer(1) : n);
  }
  std::sort(norms.begin(), norms.end(), [](const Integer& a, const Integer& b) { return a > b; });
  Integer bound_sq = 1;
  for (int k = 0; k < size && k < static_cast<int>(norms.size()); ++k) bound_sq *= norms[static_cast<std::size_t>(k)];
  // Intermediate products within one elimination step are below 2*B^2.
  return bound_sq < (Integer(1) << 62);
}

template <typename S>
std::vector<std::vector<S>> to_scalar_rows(const IntMatrix& m) {
  std::vector<std::vector<S>> out(static_cast<std::size_t>(m.rows()),
                                  std::vector<S>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<S>(m(i, j));
  return out;
}

} // namespace detail

/// Calls `emit(subset)` for every `subset_size`-subset of the columns of
/// `columns` whose columns are linearly independent, in colexicographic order
/// of the ascending index tuples. `emit` returns false to stop early. The
/// budget is charged once per partial subset examined.
template <typename Emit>
void scan_independent_subsets(const IntMatrix& columns, int subset_size, ScanBudget& budget, Emit&& emit,
                              int stride = 1, int offset = 0) {
  if (subset_size < 0 || subset_size > columns.cols()) return;
  if (detail::fits_int64(columns, subset_size)) {
    detail::SubsetScan<std::int64_t, Emit> scan(columns, subset_size, budget, emit);
    scan.run(stride, offset);
  } else {
    detail::SubsetScan<Integer, Emit> scan(columns, subset_size, budget, emit);
    scan.run(stride, offset);
  }
}

/// Rank of a column family, on the same certified fast path as the scan.
/// Agrees with rank() by construction; the property tests insist.
inline int rank_of_columns(const IntMatrix& columns) {
  const int max_rank = std::min(columns.rows(), columns.cols());
  if (detail::fits_int64(columns, max_rank))
    return detail::rank_by_elimination(detail::to_scalar_rows<std::int64_t>(columns));
  return detail::rank_by_elimination(detail::to_scalar_rows<Integer>(columns));
}

} // namespace gaussalg
