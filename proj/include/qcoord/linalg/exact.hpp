#pragma once

// Exact linear algebra over a field scalar (Cyclotomic, Rational, ...).
// Eigen supplies the containers and the arithmetic expressions; elimination is done
// here because Eigen's decompositions pick pivots by magnitude.

#include <Eigen/Core>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcoord/coeff/cyclotomic.hpp"

namespace qcoord::linalg {

using Eigen::Index;

template <class F>
using MatX = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;

template <class F>
bool is_zero_matrix(const MatX<F>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class F>
bool equal(const MatX<F>& a, const MatX<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Product skipping zero entries; Eigen's generic kernel does not know that most
// entries of our matrices vanish.
template <class F>
MatX<F> mul(const MatX<F>& a, const MatX<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("linalg::mul: shape mismatch");
  MatX<F> r = MatX<F>::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k)
    for (Index j = 0; j < b.cols(); ++j) {
      const F& bkj = b(k, j);
      if (is_zero(bkj)) continue;
      for (Index i = 0; i < a.rows(); ++i) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        r(i, j) += aik * bkj;
      }
    }
  return r;
}

// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<Index> rref_in_place(MatX<F>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const F inv = F(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
Index rank(MatX<F> m) {
  return static_cast<Index>(rref_in_place(m).size());
}

// Columns form a basis of {x : m x = 0}.
template <class F>
MatX<F> kernel(MatX<F> m) {
  const Index n = m.cols();
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (Index p : pivots) is_pivot[p] = true;
  MatX<F> k = MatX<F>::Zero(n, n - static_cast<Index>(pivots.size()));
  Index c = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, c) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!is_zero(m(r, f))) k(pivots[r], c) = -m(r, f);
    ++c;
  }
  return k;
}

// Indices of a maximal independent subset of the columns (greedy, left to right).
template <class F>
std::vector<Index> independent_columns(MatX<F> m) {
  auto piv = rref_in_place(m);
  return {piv.begin(), piv.end()};
}

// A basis (as columns) of the column space, made of original columns.
template <class F>
MatX<F> column_basis(const MatX<F>& m) {
  auto idx = independent_columns(m);
  MatX<F> out(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out.col(j) = m.col(idx[j]);
  return out;
}

// X with a X = b, or nullopt.
template <class F>
std::optional<MatX<F>> solve(const MatX<F>& a, const MatX<F>& b) {
  MatX<F> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  auto pivots = rref_in_place(aug);
  MatX<F> x = MatX<F>::Zero(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;
    for (Index j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

template <class F>
std::optional<MatX<F>> inverse(const MatX<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  MatX<F> id = MatX<F>::Identity(m.rows(), m.rows());
  auto x = solve(m, id);
  if (!x) return std::nullopt;
  if (!equal<F>(mul<F>(m, *x), id)) return std::nullopt;
  return x;
}

// L with L b = I for b of full column rank.
template <class F>
MatX<F> left_inverse(const MatX<F>& b) {
  MatX<F> bt = b.transpose();
  MatX<F> id = MatX<F>::Identity(b.cols(), b.cols());
  auto x = solve<F>(bt, id);  // b^T x = I  =>  x^T b = I
  if (!x) throw std::invalid_argument("left_inverse: columns are dependent");
  return x->transpose();
}

// Basis of the intersection of two column spaces (given by bases).
template <class F>
MatX<F> intersect(const MatX<F>& a, const MatX<F>& b) {
  MatX<F> stacked(a.rows(), a.cols() + b.cols());
  stacked << a, -b;
  MatX<F> k = kernel<F>(stacked);
  return column_basis<F>(mul<F>(a, MatX<F>(k.topRows(a.cols()))));
}

// Incremental sparse Gaussian elimination: rows are kept in (non-reduced) echelon
// form keyed by their leading column.  Suitable for large, very sparse systems.
template <class F>
class SparseEliminator {
 public:
  using Row = std::vector<std::pair<Index, F>>;  // sorted by column, no zeros

  explicit SparseEliminator(Index ncols) : ncols_(ncols) {}

  Index cols() const { return ncols_; }
  Index rank() const { return static_cast<Index>(pivots_.size()); }

  // Reduces `row` against the stored rows; returns true if it was independent.
  bool add_row(Row row) {
    Row reduced = reduce(std::move(row));
    if (reduced.empty()) return false;
    const F inv = F(1) / reduced.front().second;
    for (auto& [c, x] : reduced) x = x * inv;
    const Index lead = reduced.front().first;
    pivots_.emplace(lead, std::move(reduced));
    return true;
  }

  // Row with all stored leading columns eliminated from its front.
  Row reduce(Row row) const {
    Row cur = std::move(row);
    std::size_t pos = 0;
    while (pos < cur.size()) {
      auto it = pivots_.find(cur[pos].first);
      if (it == pivots_.end()) {
        // first non-pivot leading entry: the remaining prefix is zero
        break;
      }
      const F factor = cur[pos].second;
      cur = axpy(cur, pos, it->second, factor);
    }
    return cur;
  }

  bool in_span(Row row) const { return reduce(std::move(row)).empty(); }

  // Columns form a basis of the null space of the accumulated rows.
  MatX<F> kernel() const {
    std::vector<Index> free_cols;
    for (Index c = 0; c < ncols_; ++c)
      if (!pivots_.count(c)) free_cols.push_back(c);
    MatX<F> k = MatX<F>::Zero(ncols_, static_cast<Index>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      std::vector<F> x(ncols_);
      x[free_cols[j]] = F(1);
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        F s(0);
        const auto& r = it->second;
        for (std::size_t t = 1; t < r.size(); ++t)
          if (!is_zero(x[r[t].first])) s += r[t].second * x[r[t].first];
        x[it->first] = -s;
      }
      for (Index c = 0; c < ncols_; ++c)
        if (!is_zero(x[c])) k(c, static_cast<Index>(j)) = x[c];
    }
    return k;
  }

 private:
  // Returns cur - factor * prow, where prow leads at cur[pos].first; entries before pos are dropped
  // (they are zero by construction of the scan).
  static Row axpy(const Row& cur, std::size_t pos, const Row& prow, const F& factor) {
    Row out;
    out.reserve(cur.size() - pos + prow.size());
    std::size_t i = pos, j = 0;
    while (i < cur.size() || j < prow.size()) {
      if (j == prow.size() || (i < cur.size() && cur[i].first < prow[j].first)) {
        out.push_back(cur[i++]);
      } else if (i == cur.size() || prow[j].first < cur[i].first) {
        out.emplace_back(prow[j].first, -(factor * prow[j].second));
        ++j;
      } else {
        F x = cur[i].second - factor * prow[j].second;
        if (!is_zero(x)) out.emplace_back(cur[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Index ncols_;
  std::map<Index, Row> pivots_;
};

}  // namespace qcoord::linalg
