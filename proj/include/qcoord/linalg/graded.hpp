#pragma once

// Linear algebra on graded vector spaces whose basis vectors are homogeneous.
// Every module in this library is graded by weight (U_q) or bi-weight (U_q x U_q),
// and every map we solve for preserves the grading, so all elimination is done
// block by block.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qcoord/coeff/cyclotomic.hpp"

namespace qcoord::graded {

using Eigen::Index;
using Grade = std::array<int, 2>;

class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<Grade> grades);

  Index dim() const { return static_cast<Index>(grades_.size()); }
  const Grade& grade(Index i) const { return grades_[i]; }
  const std::vector<Grade>& grades() const { return grades_; }
  const std::map<Grade, std::vector<Index>>& blocks() const { return blocks_; }
  const std::vector<Index>& block(const Grade& g) const;
  Index position(Index i) const { return position_[i]; }  // index inside its block

 private:
  std::vector<Grade> grades_;
  std::map<Grade, std::vector<Index>> blocks_;
  std::vector<Index> position_;
};

// A graded subspace spanned by homogeneous, linearly independent columns.
struct Subspace {
  Mat basis;                 // ambient dim x k
  std::vector<Grade> grades;  // grade of each column
  Index dim() const { return basis.cols(); }
  Layout layout() const { return Layout(grades); }
};

Subspace zero_subspace(const Layout& ambient);
Subspace whole_space(const Layout& ambient);

// Homogeneous components of the columns, zeros dropped.
Mat homogeneous_parts(const Layout& layout, const Mat& vectors);
Subspace span(const Layout& layout, const Mat& vectors);
Subspace sum(const Layout& layout, const Subspace& a, const Subspace& b);
Subspace intersect(const Layout& layout, const Subspace& a, const Subspace& b);
bool contains(const Layout& layout, const Subspace& big, const Subspace& small);

// f : src -> dst grade preserving (dst.dim() x src.dim()).
Subspace kernel(const Layout& src, const Layout& dst, const Mat& f);
Subspace image(const Layout& src, const Layout& dst, const Mat& f);

// Smallest subspace containing `vectors` and stable under every operator.
Subspace closure(const Layout& layout, const std::vector<const Mat*>& ops, const Mat& vectors);

// L (k x dim) with L * basis = I; L y gives coordinates of y in the subspace.
Mat coordinate_map(const Layout& layout, const Subspace& sub);
// Matrix of op restricted to an invariant subspace; throws std::logic_error if not invariant.
Mat restrict_operator(const Subspace& sub, const Mat& coords, const Mat& op);

struct Quotient {
  Mat section;     // ambient dim x k, homogeneous representatives
  Mat projection;  // k x ambient dim, kills the subspace, projection * section = I
  std::vector<Grade> grades;
};
Quotient quotient(const Layout& layout, const Subspace& sub);

// Product skipping zeros.
Mat mul(const Mat& a, const Mat& b);
bool is_zero(const Mat& m);
bool equal(const Mat& a, const Mat& b);

// Throws std::domain_error unless w -> (q^w, [w; l]_q) separates every grade component present.
void check_separation(int ell, const Layout& a, const Layout& b);

// Basis of {X : X opA = opB X for every pair}, X grade preserving (b.dim() x a.dim()).
std::vector<Mat> hom_space(const Layout& a, const Layout& b,
                           const std::vector<std::pair<const Mat*, const Mat*>>& ops);

}  // namespace qcoord::graded
