#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcoord/coeff/cyclotomic.hpp"
#include "qcoord/linalg/graded.hpp"
#include "qcoord/uq/generator.hpp"

namespace qcoord::uq {

using Eigen::Index;

// How a module sits inside tensor products of the natural module.  Each step
// records enough linear algebra to transport matrix coefficients:
//   Trivial           the 1-dimensional module
//   Natural           V_1 in the basis x_1 (weight 1), x_2 (weight -1)
//   Tensor            parent (x) parent2
//   Sub/Quotient/Summand   inclusion (parent_dim x dim), projection (dim x parent_dim)
//                     with projection * inclusion = I; inclusion is a module map for Sub,
//                     projection for Quotient, both for Summand
//   Dual              the dual of parent in the dual basis
struct RealizationStep {
  enum class Kind { Trivial, Natural, Tensor, Sub, Quotient, Summand, Dual };
  Kind kind = Kind::Trivial;
  std::shared_ptr<const RealizationStep> parent;
  std::shared_ptr<const RealizationStep> parent2;
  Mat inclusion;
  Mat projection;
  Index dim = 1;

  int degree() const;  // number of natural factors below this step
};
using RealizationPtr = std::shared_ptr<const RealizationStep>;

std::string to_string(RealizationStep::Kind k);

// A finite-dimensional weight module for U_q(sl2) at an odd root of unity.
// Divided powers E(j), F(j) are stored for every j at which they can act nontrivially;
// K, Kinv and KBinom act through the weights.
class Rep {
 public:
  Rep() = default;
  // e[j-1] = E(j), f[j-1] = F(j) for j = 1..e.size(); missing higher powers act by zero
  Rep(int ell, std::vector<int> weights, std::vector<Mat> e, std::vector<Mat> f, std::string label = "");

  int ell() const { return ell_; }
  Index dim() const { return static_cast<Index>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const Mat& e(int j) const;
  const Mat& f(int j) const;
  int stored_powers() const { return static_cast<int>(e_.size()); }
  Mat action(const GeneratorSymbol& g) const;
  Mat act(const AlgebraElement& u) const;
  Mat k_power(int a) const;  // diag(q^{a w})

  graded::Layout layout() const;
  std::map<int, int> weight_multiplicities() const;

  const RealizationPtr& realization() const { return realization_; }
  void set_realization(RealizationPtr r) { realization_ = std::move(r); }

 private:
  int ell_ = 3;
  std::vector<int> weights_;
  std::vector<Mat> e_, f_;
  Mat zero_;
  std::string label_;
  RealizationPtr realization_;
};

// Operators entering the intertwiner equations: E(1), F(1), E(l), F(l).
std::vector<const Mat*> hom_operators(const Rep& m);
// Every stored divided power (used for closures).
std::vector<const Mat*> all_operators(const Rep& m);

}  // namespace qcoord::uq
