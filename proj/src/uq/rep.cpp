#include "qcoord/uq/rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcoord/coeff/gauss.hpp"

namespace qcoord::uq {

int RealizationStep::degree() const {
  switch (kind) {
    case Kind::Trivial: return 0;
    case Kind::Natural: return 1;
    case Kind::Tensor: return parent->degree() + parent2->degree();
    default: return parent->degree();
  }
}

std::string to_string(RealizationStep::Kind k) {
  using K = RealizationStep::Kind;
  switch (k) {
    case K::Trivial: return "trivial";
    case K::Natural: return "natural";
    case K::Tensor: return "tensor";
    case K::Sub: return "sub";
    case K::Quotient: return "quotient";
    case K::Summand: return "summand";
    case K::Dual: return "dual";
  }
  return "?";
}

Rep::Rep(int ell, std::vector<int> weights, std::vector<Mat> e, std::vector<Mat> f, std::string label)
    : ell_(ell), weights_(std::move(weights)), e_(std::move(e)), f_(std::move(f)), label_(std::move(label)) {
  const Index n = dim();
  zero_ = Mat::Zero(n, n);
  int span = 0;
  if (!weights_.empty()) {
    auto [lo, hi] = std::minmax_element(weights_.begin(), weights_.end());
    span = (*hi - *lo) / 2;
  }
  for (auto* list : {&e_, &f_}) {
    for (std::size_t j = 0; j < list->size(); ++j) {
      if ((*list)[j].rows() != n || (*list)[j].cols() != n) throw std::invalid_argument("Rep: matrix shape mismatch");
      if (static_cast<int>(j) >= span && !graded::is_zero((*list)[j]))
        throw std::invalid_argument("Rep: divided power beyond the weight span acts nontrivially");
    }
    if (static_cast<int>(list->size()) > span) list->resize(span);
  }
  while (e_.size() < f_.size()) e_.push_back(zero_);
  while (f_.size() < e_.size()) f_.push_back(zero_);
}

const Mat& Rep::e(int j) const {
  if (j < 1) throw std::invalid_argument("E(j) needs j >= 1");
  return j <= stored_powers() ? e_[j - 1] : zero_;
}

const Mat& Rep::f(int j) const {
  if (j < 1) throw std::invalid_argument("F(j) needs j >= 1");
  return j <= stored_powers() ? f_[j - 1] : zero_;
}

Mat Rep::k_power(int a) const {
  Mat k = Mat::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) k(i, i) = Cyclotomic::q_pow(ell_, static_cast<long>(a) * weights_[i]);
  return k;
}

Mat Rep::action(const GeneratorSymbol& g) const {
  using K = GeneratorSymbol::Kind;
  switch (g.kind) {
    case K::E: return e(g.j);
    case K::F: return f(g.j);
    case K::K: return k_power(1);
    case K::Kinv: return k_power(-1);
    case K::KBinom: {
      Mat k = Mat::Zero(dim(), dim());
      for (Index i = 0; i < dim(); ++i) k(i, i) = q_binom(weights_[i] + g.c, g.j, ell_);
      return k;
    }
  }
  throw std::logic_error("unknown generator");
}

Mat Rep::act(const AlgebraElement& u) const {
  Mat total = Mat::Zero(dim(), dim());
  for (const auto& [c, word] : u.terms) {
    Mat m = Mat::Identity(dim(), dim());
    for (const auto& g : word) m = graded::mul(m, action(g));
    total += c * m;
  }
  return total;
}

graded::Layout Rep::layout() const {
  std::vector<graded::Grade> g;
  for (int w : weights_) g.push_back({w, 0});
  return graded::Layout(std::move(g));
}

std::map<int, int> Rep::weight_multiplicities() const {
  std::map<int, int> m;
  for (int w : weights_) ++m[w];
  return m;
}

std::vector<const Mat*> hom_operators(const Rep& m) {
  return {&m.e(1), &m.f(1), &m.e(m.ell()), &m.f(m.ell())};
}

std::vector<const Mat*> all_operators(const Rep& m) {
  std::vector<const Mat*> ops;
  for (int j = 1; j <= m.stored_powers(); ++j) {
    ops.push_back(&m.e(j));
    ops.push_back(&m.f(j));
  }
  return ops;
}

}  // namespace qcoord::uq
