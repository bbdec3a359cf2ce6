#include "qcoord/linalg/graded.hpp"

#include <set>
#include <stdexcept>

#include "qcoord/coeff/gauss.hpp"
#include "qcoord/linalg/exact.hpp"

namespace qcoord::graded {

namespace {

using Row = linalg::SparseEliminator<Cyclotomic>::Row;

Mat local_rows(const Mat& m, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  Mat out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

std::vector<Index> all_columns(Index n) {
  std::vector<Index> c(n);
  for (Index i = 0; i < n; ++i) c[i] = i;
  return c;
}

// Columns of `vectors` grouped by grade (each column must be homogeneous and nonzero).
std::map<Grade, std::vector<Index>> columns_by_grade(const Layout& layout, const Mat& vectors) {
  std::map<Grade, std::vector<Index>> out;
  for (Index c = 0; c < vectors.cols(); ++c) {
    std::optional<Grade> g;
    for (Index i = 0; i < vectors.rows(); ++i) {
      if (vectors(i, c).is_zero()) continue;
      if (g && *g != layout.grade(i)) throw std::logic_error("graded: column is not homogeneous");
      g = layout.grade(i);
    }
    if (g) out[*g].push_back(c);
  }
  return out;
}

Subspace assemble(Index ambient, const std::vector<std::pair<Grade, Mat>>& pieces) {
  Subspace s;
  Index k = 0;
  for (const auto& [g, m] : pieces) k += m.cols();
  s.basis = Mat::Zero(ambient, k);
  Index c = 0;
  for (const auto& [g, m] : pieces)
    for (Index j = 0; j < m.cols(); ++j) {
      s.basis.col(c++) = m.col(j);
      s.grades.push_back(g);
    }
  return s;
}

Mat embed(Index ambient, const std::vector<Index>& rows, const Mat& local) {
  Mat out = Mat::Zero(ambient, local.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Index j = 0; j < local.cols(); ++j) out(rows[i], j) = local(i, j);
  return out;
}

// The columns of `sub` with the given grade, restricted to the block rows.
Mat local_part(const Layout& layout, const Subspace& sub, const Grade& g) {
  std::vector<Index> cols;
  for (Index j = 0; j < sub.dim(); ++j)
    if (sub.grades[j] == g) cols.push_back(j);
  return local_rows(sub.basis, layout.block(g), cols);
}

}  // namespace

Layout::Layout(std::vector<Grade> grades) : grades_(std::move(grades)), position_(grades_.size()) {
  for (Index i = 0; i < dim(); ++i) {
    auto& b = blocks_[grades_[i]];
    position_[i] = static_cast<Index>(b.size());
    b.push_back(i);
  }
}

const std::vector<Index>& Layout::block(const Grade& g) const {
  static const std::vector<Index> empty;
  auto it = blocks_.find(g);
  return it == blocks_.end() ? empty : it->second;
}

Mat mul(const Mat& a, const Mat& b) { return linalg::mul<Cyclotomic>(a, b); }
bool is_zero(const Mat& m) { return linalg::is_zero_matrix<Cyclotomic>(m); }
bool equal(const Mat& a, const Mat& b) { return linalg::equal<Cyclotomic>(a, b); }

Subspace zero_subspace(const Layout& ambient) { return Subspace{Mat::Zero(ambient.dim(), 0), {}}; }

Subspace whole_space(const Layout& ambient) {
  std::vector<std::pair<Grade, Mat>> pieces;
  for (const auto& [g, idx] : ambient.blocks()) {
    Mat m = Mat::Zero(ambient.dim(), static_cast<Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) m(idx[j], j) = Cyclotomic(1);
    pieces.emplace_back(g, m);
  }
  return assemble(ambient.dim(), pieces);
}

Mat homogeneous_parts(const Layout& layout, const Mat& vectors) {
  std::vector<Vec> parts;
  for (Index c = 0; c < vectors.cols(); ++c) {
    std::map<Grade, Vec> split;
    for (Index i = 0; i < vectors.rows(); ++i) {
      if (vectors(i, c).is_zero()) continue;
      auto [it, inserted] = split.try_emplace(layout.grade(i));
      if (inserted) it->second = Vec::Zero(vectors.rows());
      it->second(i) = vectors(i, c);
    }
    for (auto& [g, v] : split) parts.push_back(std::move(v));
  }
  Mat out(vectors.rows(), static_cast<Index>(parts.size()));
  for (std::size_t j = 0; j < parts.size(); ++j) out.col(j) = parts[j];
  return out;
}

Subspace span(const Layout& layout, const Mat& vectors) {
  Mat parts = homogeneous_parts(layout, vectors);
  std::vector<std::pair<Grade, Mat>> pieces;
  for (const auto& [g, cols] : columns_by_grade(layout, parts)) {
    Mat local = local_rows(parts, layout.block(g), cols);
    Mat basis = linalg::column_basis<Cyclotomic>(local);
    pieces.emplace_back(g, embed(layout.dim(), layout.block(g), basis));
  }
  return assemble(layout.dim(), pieces);
}

Subspace sum(const Layout& layout, const Subspace& a, const Subspace& b) {
  Mat both(layout.dim(), a.dim() + b.dim());
  both << a.basis, b.basis;
  return span(layout, both);
}

Subspace intersect(const Layout& layout, const Subspace& a, const Subspace& b) {
  std::set<Grade> grades(a.grades.begin(), a.grades.end());
  std::vector<std::pair<Grade, Mat>> pieces;
  for (const auto& g : grades) {
    Mat la = local_part(layout, a, g), lb = local_part(layout, b, g);
    if (lb.cols() == 0) continue;
    Mat inter = linalg::intersect<Cyclotomic>(la, lb);
    if (inter.cols()) pieces.emplace_back(g, embed(layout.dim(), layout.block(g), inter));
  }
  return assemble(layout.dim(), pieces);
}

bool contains(const Layout& layout, const Subspace& big, const Subspace& small) {
  std::set<Grade> grades(small.grades.begin(), small.grades.end());
  for (const auto& g : grades) {
    Mat lb = local_part(layout, big, g), ls = local_part(layout, small, g);
    Mat both(lb.rows(), lb.cols() + ls.cols());
    both << lb, ls;
    if (linalg::rank<Cyclotomic>(both) != lb.cols()) return false;
  }
  return true;
}

Subspace kernel(const Layout& src, const Layout& dst, const Mat& f) {
  std::vector<std::pair<Grade, Mat>> pieces;
  for (const auto& [g, cols] : src.blocks()) {
    const auto& rows = dst.block(g);
    Mat local = local_rows(f, rows, cols);
    Mat k = rows.empty() ? Mat(Mat::Identity(static_cast<Index>(cols.size()), static_cast<Index>(cols.size())))
                         : linalg::kernel<Cyclotomic>(local);
    if (k.cols()) pieces.emplace_back(g, embed(src.dim(), cols, k));
  }
  return assemble(src.dim(), pieces);
}

Subspace image(const Layout& src, const Layout& dst, const Mat& f) {
  std::vector<std::pair<Grade, Mat>> pieces;
  for (const auto& [g, cols] : src.blocks()) {
    const auto& rows = dst.block(g);
    if (rows.empty()) continue;
    Mat basis = linalg::column_basis<Cyclotomic>(local_rows(f, rows, cols));
    if (basis.cols()) pieces.emplace_back(g, embed(dst.dim(), rows, basis));
  }
  return assemble(dst.dim(), pieces);
}

Subspace closure(const Layout& layout, const std::vector<const Mat*>& ops, const Mat& vectors) {
  struct Block {
    linalg::SparseEliminator<Cyclotomic> elim;
    std::vector<Vec> basis;
  };
  std::map<Grade, Block> blocks;
  std::vector<std::pair<Grade, Vec>> queue;
  auto try_add = [&](const Vec& v) {
    std::optional<Grade> g;
    for (Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) {
        g = layout.grade(i);
        break;
      }
    if (!g) return;
    const auto& idx = layout.block(*g);
    auto it = blocks.find(*g);
    if (it == blocks.end())
      it = blocks.emplace(*g, Block{linalg::SparseEliminator<Cyclotomic>(static_cast<Index>(idx.size())), {}}).first;
    Row row;
    for (std::size_t p = 0; p < idx.size(); ++p)
      if (!v(idx[p]).is_zero()) row.emplace_back(static_cast<Index>(p), v(idx[p]));
    if (it->second.elim.add_row(row)) {
      it->second.basis.push_back(v);
      queue.emplace_back(*g, v);
    }
  };
  Mat parts = homogeneous_parts(layout, vectors);
  for (Index c = 0; c < parts.cols(); ++c) try_add(parts.col(c));
  while (!queue.empty()) {
    auto [g, v] = queue.back();
    queue.pop_back();
    const auto& idx = layout.block(g);
    for (const Mat* op : ops) {
      Vec y = Vec::Zero(layout.dim());
      bool nonzero = false;
      for (Index i : idx) {
        if (v(i).is_zero()) continue;
        for (Index r = 0; r < op->rows(); ++r) {
          const Cyclotomic& a = (*op)(r, i);
          if (a.is_zero()) continue;
          y(r) += a * v(i);
          nonzero = true;
        }
      }
      if (nonzero) try_add(y);
    }
  }
  std::vector<std::pair<Grade, Mat>> pieces;
  for (auto& [g, b] : blocks) {
    Mat m(layout.dim(), static_cast<Index>(b.basis.size()));
    for (std::size_t j = 0; j < b.basis.size(); ++j) m.col(j) = b.basis[j];
    pieces.emplace_back(g, m);
  }
  return assemble(layout.dim(), pieces);
}

Mat coordinate_map(const Layout& layout, const Subspace& sub) {
  Mat l = Mat::Zero(sub.dim(), layout.dim());
  std::map<Grade, std::vector<Index>> cols;
  for (Index j = 0; j < sub.dim(); ++j) cols[sub.grades[j]].push_back(j);
  for (const auto& [g, cs] : cols) {
    const auto& rows = layout.block(g);
    Mat local = local_rows(sub.basis, rows, cs);
    Mat li = linalg::left_inverse<Cyclotomic>(local);
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = 0; b < rows.size(); ++b) l(cs[a], rows[b]) = li(a, b);
  }
  return l;
}

Mat restrict_operator(const Subspace& sub, const Mat& coords, const Mat& op) {
  const Index k = sub.dim(), n = sub.basis.rows();
  Mat out = Mat::Zero(k, k);
  for (Index c = 0; c < k; ++c) {
    Vec y = Vec::Zero(n);
    for (Index i = 0; i < n; ++i) {
      const Cyclotomic& bi = sub.basis(i, c);
      if (bi.is_zero()) continue;
      for (Index r = 0; r < n; ++r)
        if (!op(r, i).is_zero()) y(r) += op(r, i) * bi;
    }
    Vec x = Vec::Zero(k);
    for (Index r = 0; r < n; ++r) {
      if (y(r).is_zero()) continue;
      for (Index a = 0; a < k; ++a)
        if (!coords(a, r).is_zero()) x(a) += coords(a, r) * y(r);
    }
    Vec back = Vec::Zero(n);
    for (Index a = 0; a < k; ++a) {
      if (x(a).is_zero()) continue;
      for (Index r = 0; r < n; ++r)
        if (!sub.basis(r, a).is_zero()) back(r) += sub.basis(r, a) * x(a);
    }
    for (Index r = 0; r < n; ++r)
      if (!(back(r) == y(r))) throw std::logic_error("restrict_operator: subspace is not invariant");
    out.col(c) = x;
  }
  return out;
}

Quotient quotient(const Layout& layout, const Subspace& sub) {
  Quotient q;
  std::vector<std::pair<Index, Grade>> section_cols;  // ambient index of each representative
  std::vector<std::pair<std::vector<Index>, Mat>> projection_blocks;
  for (const auto& [g, rows] : layout.blocks()) {
    Mat n = local_part(layout, sub, g);
    const Index b = static_cast<Index>(rows.size());
    std::vector<bool> covered(b, false);
    if (n.cols()) {
      Mat nt = n.transpose();
      for (Index p : linalg::rref_in_place<Cyclotomic>(nt)) covered[p] = true;
    }
    Mat full(b, b);
    full.leftCols(n.cols()) = n;
    Index c = n.cols();
    std::vector<Index> reps;
    for (Index i = 0; i < b; ++i)
      if (!covered[i]) {
        full.col(c) = Vec::Zero(b);
        full(i, c++) = Cyclotomic(1);
        reps.push_back(i);
      }
    if (reps.empty()) continue;
    auto inv = linalg::inverse<Cyclotomic>(full);
    if (!inv) throw std::logic_error("quotient: complement construction failed");
    projection_blocks.emplace_back(rows, Mat(inv->bottomRows(static_cast<Index>(reps.size()))));
    for (Index i : reps) section_cols.emplace_back(rows[i], g);
  }
  const Index k = static_cast<Index>(section_cols.size());
  q.section = Mat::Zero(layout.dim(), k);
  q.projection = Mat::Zero(k, layout.dim());
  Index r = 0;
  for (std::size_t j = 0; j < section_cols.size(); ++j) {
    q.section(section_cols[j].first, j) = Cyclotomic(1);
    q.grades.push_back(section_cols[j].second);
  }
  for (const auto& [rows, p] : projection_blocks) {
    for (Index a = 0; a < p.rows(); ++a, ++r)
      for (std::size_t b = 0; b < rows.size(); ++b) q.projection(r, rows[b]) = p(a, b);
  }
  return q;
}

void check_separation(int ell, const Layout& a, const Layout& b) {
  for (int comp = 0; comp < 2; ++comp) {
    std::set<int> ws;
    for (const auto* l : {&a, &b})
      for (const auto& g : l->grades()) ws.insert(g[comp]);
    std::vector<std::pair<int, Cyclotomic>> seen;
    for (int w : ws) {
      const int k = ((w % ell) + ell) % ell;
      Cyclotomic beta = q_binom(w, ell, ell);
      for (const auto& [k2, b2] : seen)
        if (k2 == k && b2 == beta)
          throw std::domain_error("hom_space: weights are not separated by K and [K; 0, l]");
      seen.emplace_back(k, beta);
    }
  }
}

std::vector<Mat> hom_space(const Layout& a, const Layout& b,
                           const std::vector<std::pair<const Mat*, const Mat*>>& ops) {
  // unknown X(r, k) for grade(r) == grade(k), r in b, k in a
  std::map<Grade, Index> offset;
  Index n_unknowns = 0;
  for (const auto& [g, idx_a] : a.blocks()) {
    const auto& idx_b = b.block(g);
    if (idx_b.empty()) continue;
    offset[g] = n_unknowns;
    n_unknowns += static_cast<Index>(idx_a.size() * idx_b.size());
  }
  if (n_unknowns == 0) return {};
  auto unknown = [&](Index r, Index k) -> Index {
    const Grade& g = a.grade(k);
    return offset.at(g) + b.position(r) * static_cast<Index>(a.block(g).size()) + a.position(k);
  };
  linalg::SparseEliminator<Cyclotomic> elim(n_unknowns);
  for (const auto& [pa, pb] : ops) {
    // equation (r, c):  sum_k X(r,k) PA(k,c) - sum_k PB(r,k) X(k,c) = 0
    std::map<std::pair<Index, Index>, std::map<Index, Cyclotomic>> rows;
    for (Index c = 0; c < pa->cols(); ++c)
      for (Index k = 0; k < pa->rows(); ++k) {
        const Cyclotomic& val = (*pa)(k, c);
        if (val.is_zero()) continue;
        if (!offset.count(a.grade(k))) continue;
        for (Index r : b.block(a.grade(k))) rows[{r, c}][unknown(r, k)] += val;
      }
    for (Index k = 0; k < pb->cols(); ++k)
      for (Index r = 0; r < pb->rows(); ++r) {
        const Cyclotomic& val = (*pb)(r, k);
        if (val.is_zero()) continue;
        if (!offset.count(b.grade(k))) continue;
        for (Index c : a.block(b.grade(k))) rows[{r, c}][unknown(k, c)] -= val;
      }
    for (auto& [key, entries] : rows) {
      Row row;
      for (auto& [idx, val] : entries)
        if (!val.is_zero()) row.emplace_back(idx, std::move(val));
      if (!row.empty()) elim.add_row(std::move(row));
    }
  }
  Mat k = elim.kernel();
  std::vector<Mat> out;
  for (Index s = 0; s < k.cols(); ++s) {
    Mat x = Mat::Zero(b.dim(), a.dim());
    for (const auto& [g, idx_a] : a.blocks()) {
      if (!offset.count(g)) continue;
      for (Index r : b.block(g))
        for (Index kk : idx_a) x(r, kk) = k(unknown(r, kk), s);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace qcoord::graded
