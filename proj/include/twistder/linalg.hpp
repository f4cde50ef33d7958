#pragma once

// Exact sparse Gaussian elimination over Q or Q(i).
//
// Rows are sparse maps column -> coefficient. Pivoting is deterministic:
// a row is always reduced on its smallest column first, so the echelon
// form depends only on the insertion order and the column numbering.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "twistder/gaussian_rational.hpp"

namespace twistder::linalg {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

template <class F>
using SparseVector = std::map<std::size_t, F>;

// target -= factor * source, dropping cancelled entries.
template <class F>
void axpy(SparseVector<F>& target, const F& factor, const SparseVector<F>& source) {
  for (const auto& [col, value] : source) {
    auto [it, inserted] = target.try_emplace(col, F(0));
    it->second -= factor * value;
    if (is_zero(it->second)) target.erase(it);
  }
}

template <class F>
void scale_in_place(SparseVector<F>& row, const F& factor) {
  for (auto& [col, value] : row) value *= factor;
}

/// Incrementally built row echelon form; every pivot row has leading 1.
template <class F>
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t nullity() const { return columns_ - pivots_.size(); }

  // Reduces `row` against the current pivots. Returns true when the row was
  // independent and became a new pivot row.
  bool insert(SparseVector<F> row) {
    reduce(row);
    if (row.empty()) return false;
    auto lead = row.begin()->first;
    F inv = F(1) / row.begin()->second;
    scale_in_place(row, inv);
    pivots_.emplace(lead, std::move(row));
    reduced_ = false;
    return true;
  }

  // Leading-column reduction; leaves `row` with no entry on a pivot column
  // smaller than its own leading column.
  void reduce(SparseVector<F>& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) {
        ++it;
        continue;
      }
      std::size_t col = it->first;
      F factor = it->second;
      axpy(row, factor, pivot->second);
      it = row.upper_bound(col);
    }
  }

  bool has_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

  // Back substitution to reduced row echelon form.
  void make_reduced() {
    if (reduced_) return;
    for (auto p = pivots_.rbegin(); p != pivots_.rend(); ++p) {
      const std::size_t col = p->first;
      const auto& pivot_row = p->second;
      for (auto& [other_col, other_row] : pivots_) {
        if (other_col >= col) break;
        auto hit = other_row.find(col);
        if (hit == other_row.end()) continue;
        F factor = hit->second;
        axpy(other_row, factor, pivot_row);
      }
    }
    reduced_ = true;
  }

  const std::map<std::size_t, SparseVector<F>>& pivot_rows() const { return pivots_; }

  // Kernel basis of the inserted rows, one vector per free column, in
  // increasing free-column order.
  std::vector<SparseVector<F>> nullspace() {
    make_reduced();
    std::vector<SparseVector<F>> basis;
    for (std::size_t free = 0; free < columns_; ++free) {
      if (pivots_.count(free)) continue;
      SparseVector<F> v;
      v.emplace(free, F(1));
      for (const auto& [col, row] : pivots_) {
        auto hit = row.find(free);
        if (hit != row.end()) v.emplace(col, -hit->second);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t columns_;
  std::map<std::size_t, SparseVector<F>> pivots_;
  bool reduced_ = true;
};

/// Reduced row echelon basis of the span of `rows` (zero rows dropped).
template <class F>
std::vector<SparseVector<F>> reduced_basis(const std::vector<SparseVector<F>>& rows,
                                           std::size_t columns) {
  RowEchelon<F> ech(columns);
  for (const auto& r : rows) ech.insert(r);
  ech.make_reduced();
  std::vector<SparseVector<F>> out;
  out.reserve(ech.rank());
  for (const auto& [col, row] : ech.pivot_rows()) out.push_back(row);
  return out;
}

/// Solution of a linear system A x = b given row by row.
template <class F>
struct LinearSolution {
  SparseVector<F> particular;  // free variables set to zero
  std::size_t kernel_dimension = 0;
};

// Builds the system incrementally; the right-hand side lives in column
// `unknowns` of the augmented matrix.
template <class F>
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns), ech_(unknowns + 1) {}

  void add_equation(SparseVector<F> lhs, const F& rhs) {
    if (!is_zero(rhs)) lhs.emplace(unknowns_, rhs);
    if (ech_.insert(std::move(lhs)) && ech_.has_pivot(unknowns_)) inconsistent_ = true;
  }

  bool consistent() const { return !inconsistent_; }

  std::optional<LinearSolution<F>> solve() {
    if (inconsistent_) return std::nullopt;
    ech_.make_reduced();
    LinearSolution<F> sol;
    sol.kernel_dimension = unknowns_ - ech_.rank();
    for (const auto& [col, row] : ech_.pivot_rows()) {
      auto rhs = row.find(unknowns_);
      if (rhs != row.end()) sol.particular.emplace(col, rhs->second);
    }
    return sol;
  }

 private:
  std::size_t unknowns_;
  RowEchelon<F> ech_;
  bool inconsistent_ = false;
};

}  // namespace twistder::linalg
