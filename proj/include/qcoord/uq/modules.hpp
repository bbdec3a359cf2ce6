#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcoord/coeff/laurent.hpp"
#include "qcoord/uq/rep.hpp"

namespace qcoord::uq {

Rep trivial_module(int ell);
Rep natural_module(int ell);
// Explicit bases, no realization attached.
Rep weyl_formula(int n, int ell);
Rep dual_weyl_formula(int n, int ell);

Rep tensor(const Rep& a, const Rep& b);
Rep dual(const Rep& m);

using HomBasis = std::vector<Mat>;
HomBasis hom_space(const Rep& a, const Rep& b);
bool is_module_map(const Rep& a, const Rep& b, const Mat& f);  // checks every stored E(j), F(j)
std::optional<Mat> find_isomorphism(const Rep& a, const Rep& b);
bool isomorphic(const Rep& a, const Rep& b);

// Sub/quotient modules from graded subspaces (realization steps are recorded).
Rep sub_rep(const Rep& m, const graded::Subspace& s, const std::string& label = "");
Rep quotient_rep(const Rep& m, const graded::Subspace& s, const std::string& label = "");
graded::Quotient quotient_data(const Rep& m, const graded::Subspace& s);

graded::Subspace generated_subspace(const Rep& m, const Mat& vectors);
Rep submodule_generated(const Rep& m, const Mat& vectors);

graded::Subspace socle_subspace(const Rep& m);
graded::Subspace radical_subspace(const Rep& m);
Rep socle(const Rep& m);
Rep radical(const Rep& m);
Rep head(const Rep& m);

// Multiplicities of simple L_a in a semisimple module.
std::map<int, int> semisimple_composition(const Rep& m);

struct Layer {
  Index dim = 0;
  std::map<int, int> composition;  // a -> multiplicity of L_a
};

struct LoewySeries {
  std::vector<Layer> radical_layers;  // top to bottom
  std::vector<Layer> socle_layers;    // top to bottom
  std::vector<graded::Subspace> radical_series;  // R_0 = M > R_1 > ... > 0
  std::vector<graded::Subspace> socle_series;    // 0 = S_0 < S_1 < ... < M
  bool rigid = false;
};
LoewySeries loewy_series(const Rep& m);

struct PeelResult {
  bool found = false;
  Rep complement;
  Mat summand_inclusion;   // t -> m
  Mat summand_projection;  // m -> t
};
PeelResult peel_summand(const Rep& m, const Rep& t);

// sum_i z^{w_i}
LaurentPoly character(const Rep& m);
LaurentPoly weyl_character(int n);

// Modules of the category at a fixed root of unity, with memo tables.  Built modules
// are immutable; construction is single threaded (guarded by a mutex).
class Category {
 public:
  explicit Category(int ell, int jmax = 0);

  int ell() const { return ell_; }
  int jmax() const { return jmax_; }

  const Rep& trivial();
  const Rep& natural();
  const Rep& weyl(int n);
  const Rep& dual_weyl(int n);
  const Rep& simple(int n);
  const Rep& tilting(int n);

 private:
  const Rep* cached(std::map<int, std::unique_ptr<Rep>>& table, int n);
  const Rep& store(std::map<int, std::unique_ptr<Rep>>& table, int n, Rep r);
  Rep build_weyl(int n);
  Rep build_dual_weyl(int n);
  Rep build_simple(int n);
  Rep build_tilting(int n);

  int ell_;
  int jmax_;
  std::recursive_mutex mutex_;
  std::unique_ptr<Rep> trivial_, natural_;
  std::map<int, std::unique_ptr<Rep>> weyl_, dual_weyl_, simple_, tilting_;
};

// Process-wide category per ell.
Category& category(int ell);

const Rep& weyl_module(int n, int ell);
const Rep& dual_weyl_module(int n, int ell);
const Rep& simple_module(int n, int ell);
const Rep& tilting_module(int n, int ell);

}  // namespace qcoord::uq
