#include "qcoord/uq/modules.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qcoord/coeff/gauss.hpp"
#include "qcoord/linalg/exact.hpp"
#include "qcoord/uq/hopf.hpp"
#include "qcoord/weights.hpp"

namespace qcoord::uq {

namespace {

int weight_span(const std::vector<int>& w) {
  if (w.empty()) return 0;
  auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  return (*hi - *lo) / 2;
}

RealizationPtr make_step(RealizationStep::Kind kind, RealizationPtr parent, Index dim, Mat inclusion = {},
                         Mat projection = {}, RealizationPtr parent2 = nullptr) {
  auto s = std::make_shared<RealizationStep>();
  s->kind = kind;
  s->parent = std::move(parent);
  s->parent2 = std::move(parent2);
  s->inclusion = std::move(inclusion);
  s->projection = std::move(projection);
  s->dim = dim;
  return s;
}

// Kronecker product, index (i, k) -> i * b.rows() + k.
Mat kron(const Mat& a, const Mat& b) {
  Mat r = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return r;
}

Mat scale_columns(const Mat& m, const std::vector<int>& weights, long power, int ell) {
  Mat r = m;
  if (power == 0) return r;
  for (Index j = 0; j < m.cols(); ++j) {
    const Cyclotomic s = Cyclotomic::q_pow(ell, power * weights[j]);
    for (Index i = 0; i < m.rows(); ++i)
      if (!r(i, j).is_zero()) r(i, j) *= s;
  }
  return r;
}

Mat scale_rows(const Mat& m, const std::vector<int>& weights, long power, int ell) {
  Mat r = m;
  if (power == 0) return r;
  for (Index i = 0; i < m.rows(); ++i) {
    const Cyclotomic s = Cyclotomic::q_pow(ell, power * weights[i]);
    for (Index j = 0; j < m.cols(); ++j)
      if (!r(i, j).is_zero()) r(i, j) *= s;
  }
  return r;
}

Mat power_or_identity(const Rep& m, bool raise, int j) {
  if (j == 0) return Mat::Identity(m.dim(), m.dim());
  return raise ? m.e(j) : m.f(j);
}

// Inverse of a grade-preserving map src -> dst, block by block.
std::optional<Mat> graded_inverse(const graded::Layout& src, const graded::Layout& dst, const Mat& m) {
  if (src.dim() != dst.dim()) return std::nullopt;
  Mat inv = Mat::Zero(m.cols(), m.rows());
  for (const auto& [g, cols] : src.blocks()) {
    if (!dst.blocks().count(g)) return std::nullopt;
    const auto& rows = dst.block(g);
    const Index k = static_cast<Index>(cols.size());
    if (static_cast<Index>(rows.size()) != k) return std::nullopt;
    Mat block(k, k);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) block(a, b) = m(rows[a], cols[b]);
    auto bi = linalg::inverse(block);
    if (!bi) return std::nullopt;
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) inv(cols[a], rows[b]) = (*bi)(a, b);
  }
  return inv;
}

std::set<int> dominant_weights(const Rep& m) {
  std::set<int> s;
  for (int w : m.weights())
    if (w >= 0) s.insert(w);
  return s;
}

// Vectors of weight a killed by E(1) and E(l): necessary for Hom(L_a, m) != 0.
bool has_primitive(const Rep& m, int a) {
  const auto layout = m.layout();
  const graded::Grade g{a, 0};
  if (!layout.blocks().count(g)) return false;
  const auto& idx = layout.block(g);
  std::vector<Index> rows;
  for (Index i = 0; i < m.dim(); ++i) {
    const int w = m.weights()[i];
    if (w == a + 2 || w == a + 2 * m.ell()) rows.push_back(i);
  }
  Mat stacked = Mat::Zero(2 * static_cast<Index>(rows.size()), static_cast<Index>(idx.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      stacked(2 * r, c) = m.e(1)(rows[r], idx[c]);
      stacked(2 * r + 1, c) = m.e(m.ell())(rows[r], idx[c]);
    }
  return linalg::rank(stacked) < static_cast<Index>(idx.size());
}

// Weight-a vectors outside the image of F(1), F(l): necessary for Hom(m, L_a) != 0.
bool has_coprimitive(const Rep& m, int a) {
  const auto layout = m.layout();
  const graded::Grade g{a, 0};
  if (!layout.blocks().count(g)) return false;
  const auto& idx = layout.block(g);
  std::vector<Index> cols;
  for (Index i = 0; i < m.dim(); ++i) {
    const int w = m.weights()[i];
    if (w == a + 2 || w == a + 2 * m.ell()) cols.push_back(i);
  }
  Mat stacked = Mat::Zero(static_cast<Index>(idx.size()), 2 * static_cast<Index>(cols.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      stacked(r, 2 * c) = m.f(1)(idx[r], cols[c]);
      stacked(r, 2 * c + 1) = m.f(m.ell())(idx[r], cols[c]);
    }
  return linalg::rank(stacked) < static_cast<Index>(idx.size());
}

Layer make_layer(const Rep& layer) {
  Layer l;
  l.dim = layer.dim();
  l.composition = semisimple_composition(layer);
  return l;
}

graded::Subspace compose(const graded::Subspace& outer, const graded::Subspace& inner) {
  return {graded::mul(outer.basis, inner.basis), inner.grades};
}

}  // namespace

Rep trivial_module(int ell) {
  Rep r(ell, {0}, {}, {}, "L_0");
  r.set_realization(make_step(RealizationStep::Kind::Trivial, nullptr, 1));
  return r;
}

Rep natural_module(int ell) {
  Mat e = Mat::Zero(2, 2), f = Mat::Zero(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  Rep r(ell, {1, -1}, {e}, {f}, "V_1");
  r.set_realization(make_step(RealizationStep::Kind::Natural, nullptr, 2));
  return r;
}

Rep weyl_formula(int n, int ell) {
  if (n < 0) throw std::invalid_argument("weyl module needs n >= 0");
  std::vector<int> w;
  for (int i = 0; i <= n; ++i) w.push_back(-n + 2 * i);
  std::vector<Mat> e, f;
  for (int j = 1; j <= n; ++j) {
    Mat ej = Mat::Zero(n + 1, n + 1), fj = Mat::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
      if (i + j <= n) ej(i + j, i) = q_binom(i + j, j, ell);
      if (i - j >= 0) fj(i - j, i) = q_binom(n - i + j, j, ell);
    }
    e.push_back(ej);
    f.push_back(fj);
  }
  return Rep(ell, w, e, f, "V_" + std::to_string(n));
}

Rep dual_weyl_formula(int n, int ell) {
  if (n < 0) throw std::invalid_argument("dual weyl module needs n >= 0");
  std::vector<int> w;
  for (int i = 0; i <= n; ++i) w.push_back(n - 2 * i);
  std::vector<Mat> e, f;
  for (int j = 1; j <= n; ++j) {
    Mat ej = Mat::Zero(n + 1, n + 1), fj = Mat::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
      if (i - j >= 0) ej(i - j, i) = q_binom(i, j, ell);
      if (i + j <= n) fj(i + j, i) = q_binom(n - i, j, ell);
    }
    e.push_back(ej);
    f.push_back(fj);
  }
  return Rep(ell, w, e, f, "H0_" + std::to_string(n));
}

Rep tensor(const Rep& a, const Rep& b) {
  if (a.ell() != b.ell()) throw std::invalid_argument("tensor: modules at different roots of unity");
  const int ell = a.ell();
  std::vector<int> w;
  for (int x : a.weights())
    for (int y : b.weights()) w.push_back(x + y);
  const int span = weight_span(w);
  std::vector<Mat> e, f;
  const Index n = static_cast<Index>(w.size());
  for (int r = 1; r <= span; ++r) {
    Mat er = Mat::Zero(n, n), fr = Mat::Zero(n, n);
    const auto& alpha = coproduct_e(r);
    const auto& beta = coproduct_f(r);
    for (int t = 0; t <= r; ++t) {
      if (r - t <= a.stored_powers() && t <= b.stored_powers()) {
        const Cyclotomic ca = specialize(alpha[t], ell);
        if (!ca.is_zero()) {
          Mat left = scale_columns(power_or_identity(a, true, r - t), a.weights(), t, ell);
          er += ca * kron(left, power_or_identity(b, true, t));
        }
        const Cyclotomic cb = specialize(beta[t], ell);
        if (!cb.is_zero()) {
          Mat right = scale_rows(power_or_identity(b, false, t), b.weights(), -(r - t), ell);
          fr += cb * kron(power_or_identity(a, false, r - t), right);
        }
      }
    }
    e.push_back(er);
    f.push_back(fr);
  }
  Rep out(ell, w, e, f, a.label() + "(x)" + b.label());
  if (a.realization() && b.realization())
    out.set_realization(make_step(RealizationStep::Kind::Tensor, a.realization(), n, {}, {}, b.realization()));
  return out;
}

Rep dual(const Rep& m) {
  const int ell = m.ell();
  std::vector<int> w;
  for (int x : m.weights()) w.push_back(-x);
  std::vector<Mat> e, f;
  for (int r = 1; r <= m.stored_powers(); ++r) {
    for (bool raise : {true, false}) {
      const CartanForm s = raise ? antipode_e(r) : antipode_f(r);
      Mat x = scale_rows(raise ? m.e(r) : m.f(r), m.weights(), s.k_left, ell);
      x = scale_columns(x, m.weights(), s.k_right, ell);
      x = Mat((specialize(s.coeff, ell) * x).transpose());
      (raise ? e : f).push_back(x);
    }
  }
  Rep out(ell, w, e, f, m.label() + "*");
  if (m.realization()) out.set_realization(make_step(RealizationStep::Kind::Dual, m.realization(), m.dim()));
  return out;
}

HomBasis hom_space(const Rep& a, const Rep& b) {
  if (a.ell() != b.ell()) throw std::invalid_argument("hom_space: modules at different roots of unity");
  const auto la = a.layout(), lb = b.layout();
  graded::check_separation(a.ell(), la, lb);
  const auto oa = hom_operators(a), ob = hom_operators(b);
  std::vector<std::pair<const Mat*, const Mat*>> ops;
  for (std::size_t i = 0; i < oa.size(); ++i) ops.emplace_back(oa[i], ob[i]);
  return graded::hom_space(la, lb, ops);
}

bool is_module_map(const Rep& a, const Rep& b, const Mat& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) return false;
  for (Index i = 0; i < f.rows(); ++i)
    for (Index j = 0; j < f.cols(); ++j)
      if (!f(i, j).is_zero() && b.weights()[i] != a.weights()[j]) return false;
  const int top = std::max(a.stored_powers(), b.stored_powers());
  for (int j = 1; j <= top; ++j) {
    if (!graded::equal(graded::mul(f, a.e(j)), graded::mul(b.e(j), f))) return false;
    if (!graded::equal(graded::mul(f, a.f(j)), graded::mul(b.f(j), f))) return false;
  }
  return true;
}

std::optional<Mat> find_isomorphism(const Rep& a, const Rep& b) {
  if (a.dim() != b.dim() || a.weight_multiplicities() != b.weight_multiplicities()) return std::nullopt;
  const auto homs = hom_space(a, b);
  if (homs.empty()) return a.dim() == 0 ? std::optional<Mat>(Mat(0, 0)) : std::nullopt;
  const auto la = a.layout(), lb = b.layout();
  // A single basis element, then a few integer combinations.
  for (const auto& h : homs)
    if (graded_inverse(la, lb, h)) return h;
  for (int trial = 1; trial <= 8; ++trial) {
    Mat c = Mat::Zero(b.dim(), a.dim());
    long coef = 1;
    for (std::size_t k = 0; k < homs.size(); ++k) {
      coef = (coef * (trial + 1) + static_cast<long>(k)) % 97 + 1;
      c += Cyclotomic(coef) * homs[k];
    }
    if (graded_inverse(la, lb, c)) return c;
  }
  return std::nullopt;
}

bool isomorphic(const Rep& a, const Rep& b) { return find_isomorphism(a, b).has_value(); }

Rep sub_rep(const Rep& m, const graded::Subspace& s, const std::string& label) {
  const Mat coords = graded::coordinate_map(m.layout(), s);
  std::vector<Mat> e, f;
  for (int j = 1; j <= m.stored_powers(); ++j) {
    e.push_back(graded::restrict_operator(s, coords, m.e(j)));
    f.push_back(graded::restrict_operator(s, coords, m.f(j)));
  }
  std::vector<int> w;
  for (const auto& g : s.grades) w.push_back(g[0]);
  Rep out(m.ell(), w, e, f, label);
  if (m.realization())
    out.set_realization(make_step(RealizationStep::Kind::Sub, m.realization(), s.dim(), s.basis, coords));
  return out;
}

graded::Quotient quotient_data(const Rep& m, const graded::Subspace& s) { return graded::quotient(m.layout(), s); }

Rep quotient_rep(const Rep& m, const graded::Subspace& s, const std::string& label) {
  const auto q = quotient_data(m, s);
  std::vector<Mat> e, f;
  for (int j = 1; j <= m.stored_powers(); ++j) {
    e.push_back(graded::mul(q.projection, graded::mul(m.e(j), q.section)));
    f.push_back(graded::mul(q.projection, graded::mul(m.f(j), q.section)));
  }
  std::vector<int> w;
  for (const auto& g : q.grades) w.push_back(g[0]);
  Rep out(m.ell(), w, e, f, label);
  if (m.realization())
    out.set_realization(make_step(RealizationStep::Kind::Quotient, m.realization(), static_cast<Index>(w.size()),
                                  q.section, q.projection));
  return out;
}

graded::Subspace generated_subspace(const Rep& m, const Mat& vectors) {
  return graded::closure(m.layout(), all_operators(m), vectors);
}

Rep submodule_generated(const Rep& m, const Mat& vectors) { return sub_rep(m, generated_subspace(m, vectors)); }

graded::Subspace socle_subspace(const Rep& m) {
  const auto layout = m.layout();
  auto soc = graded::zero_subspace(layout);
  for (int a : dominant_weights(m)) {
    if (!has_primitive(m, a)) continue;
    const Rep& l = simple_module(a, m.ell());
    for (const auto& h : hom_space(l, m)) soc = graded::sum(layout, soc, graded::image(l.layout(), layout, h));
  }
  return soc;
}

graded::Subspace radical_subspace(const Rep& m) {
  const auto layout = m.layout();
  auto rad = graded::whole_space(layout);
  for (int a : dominant_weights(m)) {
    if (!has_coprimitive(m, a)) continue;
    const Rep& l = simple_module(a, m.ell());
    const auto homs = hom_space(m, l);
    if (homs.empty()) continue;
    Mat stacked(l.dim() * static_cast<Index>(homs.size()), m.dim());
    for (std::size_t k = 0; k < homs.size(); ++k) stacked.middleRows(static_cast<Index>(k) * l.dim(), l.dim()) = homs[k];
    std::vector<graded::Grade> g;
    for (std::size_t k = 0; k < homs.size(); ++k)
      for (int w : l.weights()) g.push_back({w, 0});
    rad = graded::intersect(layout, rad, graded::kernel(layout, graded::Layout(g), stacked));
  }
  return rad;
}

Rep socle(const Rep& m) { return sub_rep(m, socle_subspace(m), "soc(" + m.label() + ")"); }
Rep radical(const Rep& m) { return sub_rep(m, radical_subspace(m), "rad(" + m.label() + ")"); }
Rep head(const Rep& m) { return quotient_rep(m, radical_subspace(m), "hd(" + m.label() + ")"); }

std::map<int, int> semisimple_composition(const Rep& m) {
  std::map<int, int> out;
  Index total = 0;
  for (int a : dominant_weights(m)) {
    if (!has_primitive(m, a)) continue;
    const Rep& l = simple_module(a, m.ell());
    const int k = static_cast<int>(hom_space(l, m).size());
    if (k > 0) {
      out[a] = k;
      total += k * l.dim();
    }
  }
  if (total != m.dim()) throw std::logic_error("semisimple_composition: module is not semisimple");
  return out;
}

LoewySeries loewy_series(const Rep& m) {
  LoewySeries s;
  const auto layout = m.layout();
  // radical series
  graded::Subspace cur = graded::whole_space(layout);
  s.radical_series.push_back(cur);
  while (cur.dim() > 0) {
    const Rep sub = sub_rep(m, cur);
    const auto rad = radical_subspace(sub);
    if (rad.dim() == cur.dim()) throw std::logic_error("loewy_series: radical did not shrink");
    s.radical_layers.push_back(make_layer(quotient_rep(sub, rad)));
    cur = compose(cur, rad);
    s.radical_series.push_back(cur);
  }
  // socle series
  cur = graded::zero_subspace(layout);
  s.socle_series.push_back(cur);
  std::vector<Layer> bottom_up;
  while (cur.dim() < m.dim()) {
    const auto q = quotient_data(m, cur);
    const Rep qm = quotient_rep(m, cur);
    const auto soc = socle_subspace(qm);
    if (soc.dim() == 0) throw std::logic_error("loewy_series: socle of a nonzero module is zero");
    bottom_up.push_back(make_layer(sub_rep(qm, soc)));
    const Mat lifted = graded::mul(q.section, soc.basis);
    cur = graded::sum(layout, cur, graded::Subspace{lifted, soc.grades});
    s.socle_series.push_back(cur);
  }
  s.socle_layers.assign(bottom_up.rbegin(), bottom_up.rend());
  const std::size_t len = s.radical_layers.size();
  s.rigid = len == s.socle_layers.size();
  for (std::size_t k = 0; s.rigid && k <= len; ++k) {
    const auto& r = s.radical_series[k];
    const auto& so = s.socle_series[len - k];
    s.rigid = r.dim() == so.dim() && graded::contains(layout, r, so);
  }
  return s;
}

PeelResult peel_summand(const Rep& m, const Rep& t) {
  PeelResult res;
  const auto into = hom_space(t, m);
  if (into.empty()) return res;
  const auto out = hom_space(m, t);
  const auto tl = t.layout();
  for (const auto& f : into)
    for (const auto& g : out) {
      auto inv = graded_inverse(tl, tl, graded::mul(g, f));
      if (!inv) continue;
      const Mat g2 = graded::mul(*inv, g);  // g2 f = id
      const Mat e = graded::mul(f, g2);
      const auto layout = m.layout();
      const auto ker = graded::kernel(layout, layout, e);
      Rep comp = sub_rep(m, ker);
      if (m.realization()) {
        const Mat coords = graded::coordinate_map(layout, ker);
        const Mat proj = graded::mul(coords, Mat(Mat::Identity(m.dim(), m.dim()) - e));
        comp.set_realization(
            make_step(RealizationStep::Kind::Summand, m.realization(), ker.dim(), ker.basis, proj));
      }
      res.found = true;
      res.complement = std::move(comp);
      res.summand_inclusion = f;
      res.summand_projection = g2;
      return res;
    }
  return res;
}

LaurentPoly character(const Rep& m) {
  LaurentPoly c;
  for (int w : m.weights()) c.add_term(w, 1);
  return c;
}

LaurentPoly weyl_character(int n) {
  LaurentPoly c;
  for (int i = 0; i <= n; ++i) c.add_term(n - 2 * i, 1);
  return c;
}

Category::Category(int ell, int jmax) : ell_(ell), jmax_(jmax > 0 ? jmax : 2 * ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and at least 3");
}

const Rep* Category::cached(std::map<int, std::unique_ptr<Rep>>& table, int n) {
  auto it = table.find(n);
  return it == table.end() ? nullptr : it->second.get();
}

const Rep& Category::store(std::map<int, std::unique_ptr<Rep>>& table, int n, Rep r) {
  auto& slot = table[n];
  slot = std::make_unique<Rep>(std::move(r));
  return *slot;
}

const Rep& Category::trivial() {
  std::lock_guard lock(mutex_);
  if (!trivial_) trivial_ = std::make_unique<Rep>(trivial_module(ell_));
  return *trivial_;
}

const Rep& Category::natural() {
  std::lock_guard lock(mutex_);
  if (!natural_) natural_ = std::make_unique<Rep>(natural_module(ell_));
  return *natural_;
}

#define QCOORD_CACHED(name, table, builder)                           \
  const Rep& Category::name(int n) {                                   \
    if (n < 0) throw std::invalid_argument(#name ": negative weight"); \
    std::lock_guard lock(mutex_);                                      \
    if (const Rep* r = cached(table, n)) return *r;                    \
    return store(table, n, builder(n));                                \
  }
QCOORD_CACHED(weyl, weyl_, build_weyl)
QCOORD_CACHED(dual_weyl, dual_weyl_, build_dual_weyl)
QCOORD_CACHED(simple, simple_, build_simple)
QCOORD_CACHED(tilting, tilting_, build_tilting)
#undef QCOORD_CACHED

Rep Category::build_weyl(int n) {
  if (n == 0) {
    Rep out = trivial();
    out.set_label("V_0");
    return out;
  }
  const Rep big = tensor(weyl(n - 1), natural());
  const Rep v = weyl_formula(n, ell_);
  const auto homs = hom_space(v, big);
  if (homs.size() != 1) throw std::logic_error("weyl: expected a one-dimensional space of embeddings");
  graded::Subspace s{homs[0], {}};
  for (int w : v.weights()) s.grades.push_back({w, 0});
  if (linalg::rank(homs[0]) != v.dim()) throw std::logic_error("weyl: embedding is not injective");
  const Mat coords = graded::coordinate_map(big.layout(), s);
  Rep out = v;
  out.set_realization(make_step(RealizationStep::Kind::Sub, big.realization(), v.dim(), homs[0], coords));
  return out;
}

Rep Category::build_dual_weyl(int n) {
  const Rep d = dual(weyl(n));
  const Rep v = dual_weyl_formula(n, ell_);
  auto iso = find_isomorphism(v, d);
  if (!iso) throw std::logic_error("dual weyl: no isomorphism with the dual of the weyl module");
  auto inv = graded_inverse(v.layout(), d.layout(), *iso);
  Rep out = v;
  out.set_realization(make_step(RealizationStep::Kind::Sub, d.realization(), v.dim(), *iso, *inv));
  return out;
}

Rep Category::build_simple(int n) {
  const Rep& w = weyl(n);
  const Rep& h = dual_weyl(n);
  const auto homs = hom_space(w, h);
  if (homs.size() != 1) throw std::logic_error("simple: expected a one-dimensional hom space");
  const auto img = graded::image(w.layout(), h.layout(), homs[0]);
  return sub_rep(h, img, "L_" + std::to_string(n));
}

Rep Category::build_tilting(int n) {
  const auto prime = weights::sl2_prime(n, ell_);
  if (!prime) {
    Rep out = weyl(n);
    out.set_label("T_" + std::to_string(n));
    return out;
  }
  Rep cur = tensor(tilting(n - 1), natural());
  const LaurentPoly target = weyl_character(n) + weyl_character(*prime);
  LaurentPoly rest = character(cur) - target;
  while (!rest.is_zero()) {
    const int top = rest.max_degree();
    const Rational mult = rest.coeff(top);
    if (mult <= 0 || mult.get_den() != 1) throw std::logic_error("tilting: character remainder is not effective");
    const Rep& t = tilting(top);
    for (long k = 0; k < mult.get_num().get_si(); ++k) {
      auto peeled = peel_summand(cur, t);
      if (!peeled.found) throw std::logic_error("tilting: expected summand T_" + std::to_string(top) + " not found");
      cur = std::move(peeled.complement);
    }
    rest -= LaurentPoly(mult) * character(t);
  }
  if (!(character(cur) == target)) throw std::logic_error("tilting: wrong character after peeling");
  cur.set_label("T_" + std::to_string(n));
  return cur;
}

Category& category(int ell) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Category>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[ell];
  if (!slot) slot = std::make_unique<Category>(ell);
  return *slot;
}

const Rep& weyl_module(int n, int ell) { return category(ell).weyl(n); }
const Rep& dual_weyl_module(int n, int ell) { return category(ell).dual_weyl(n); }
const Rep& simple_module(int n, int ell) { return category(ell).simple(n); }
const Rep& tilting_module(int n, int ell) { return category(ell).tilting(n); }

}  // namespace qcoord::uq
