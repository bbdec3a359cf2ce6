#include "qcoord/oq/oq.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qcoord/coeff/text.hpp"
#include "qcoord/linalg/exact.hpp"
#include "qcoord/uq/hopf.hpp"
#include "qcoord/uq/modules.hpp"

namespace qcoord::oq {

namespace {

Cyclotomic qp(int ell, long e) { return Cyclotomic::q_pow(ell, e); }

Monomial mono(int a, int b, int c, int d) { return Monomial{a, b, c, d}; }

// (row, column) of a letter as a matrix coefficient, 0-based
std::pair<int, int> letter_index(int letter) { return {letter / 2, letter % 2}; }

}  // namespace

std::vector<int> Monomial::word() const {
  std::vector<int> w;
  w.insert(w.end(), a, 0);
  w.insert(w.end(), b, 1);
  w.insert(w.end(), c, 2);
  w.insert(w.end(), d, 3);
  return w;
}

Element::Element(const Cyclotomic& c) { add_term(Monomial{}, c); }

Element::Element(const Monomial& m, const Cyclotomic& c) {
  if (m.a > 0 && m.d > 0) throw std::invalid_argument("monomial containing both a and d is not in normal form");
  add_term(m, c);
}

Element Element::generator(char letter) {
  switch (letter) {
    case 'a': return Element(mono(1, 0, 0, 0), 1);
    case 'b': return Element(mono(0, 1, 0, 0), 1);
    case 'c': return Element(mono(0, 0, 1, 0), 1);
    case 'd': return Element(mono(0, 0, 0, 1), 1);
  }
  throw std::invalid_argument(std::string("unknown generator ") + letter);
}

int Element::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Cyclotomic Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void Element::add_term(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element operator*(const Cyclotomic& s, const Element& x) {
  Element r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, s * c);
  return r;
}

Element multiply_letter(const Element& x, int letter, int ell) {
  Element r;
  for (const auto& [m, c] : x.terms()) {
    if (!m.d_side()) {
      const int k = m.b, h = m.c;
      switch (letter) {
        case 0: r.add_term(mono(m.a + 1, k, h, 0), c * qp(ell, -(k + h))); break;
        case 1: r.add_term(mono(m.a, k + 1, h, 0), c); break;
        case 2: r.add_term(mono(m.a, k, h + 1, 0), c); break;
        case 3:
          if (m.a == 0) {
            r.add_term(mono(0, k, h, 1), c);
          } else {
            r.add_term(mono(m.a - 1, k, h, 0), c * qp(ell, k + h));
            r.add_term(mono(m.a - 1, k + 1, h + 1, 0), c * qp(ell, k + h + 1));
          }
          break;
      }
    } else {
      const int k = m.b, h = m.c, l = m.d;
      switch (letter) {
        case 0:
          r.add_term(mono(0, k, h, l - 1), c);
          r.add_term(mono(0, k + 1, h + 1, l - 1), c * qp(ell, -1 - 2 * (l - 1)));
          break;
        case 1: r.add_term(mono(0, k + 1, h, l), c * qp(ell, -l)); break;
        case 2: r.add_term(mono(0, k, h + 1, l), c * qp(ell, -l)); break;
        case 3: r.add_term(mono(0, k, h, l + 1), c); break;
      }
    }
  }
  return r;
}

Element word_normal_form(const std::vector<int>& letters, int ell) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::vector<int>>, Element> cache;
  const auto key = std::pair{ell, letters};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Element r = Element::one();
  for (int l : letters) r = multiply_letter(r, l, ell);
  std::lock_guard lock(mutex);
  return cache.emplace(key, r).first->second;
}

Element multiply(const Element& x, const Element& y, int ell) {
  Element r;
  for (const auto& [m, c] : y.terms()) {
    Element part = x;
    for (int l : m.word()) part = multiply_letter(part, l, ell);
    r += c * part;
  }
  return r;
}

Element power(const Element& x, int n, int ell) {
  Element r = Element::one();
  for (int i = 0; i < n; ++i) r = multiply(r, x, ell);
  return r;
}

namespace {

TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y, int ell) {
  std::map<std::pair<Monomial, Monomial>, Cyclotomic> out;
  for (const auto& [p, c] : x)
    for (const auto& [p2, c2] : y) {
      const Element left = multiply(Element(p.first, 1), Element(p2.first, 1), ell);
      const Element right = multiply(Element(p.second, 1), Element(p2.second, 1), ell);
      const Cyclotomic s = c * c2;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) {
          auto& slot = out[{ml, mr}];
          slot += s * cl * cr;
        }
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

TensorElement letter_coproduct(int letter) {
  // Delta(X_ij) = sum_k X_ik (x) X_kj
  const auto [i, j] = letter_index(letter);
  TensorElement t;
  for (int k = 0; k < 2; ++k) {
    Monomial l, r;
    const int li = 2 * i + k, ri = 2 * k + j;
    (li == 0 ? l.a : li == 1 ? l.b : li == 2 ? l.c : l.d) = 1;
    (ri == 0 ? r.a : ri == 1 ? r.b : ri == 2 ? r.c : r.d) = 1;
    t[{l, r}] = Cyclotomic(1);
  }
  return t;
}

}  // namespace

TensorElement comultiply(const Element& x, int ell) {
  TensorElement out;
  for (const auto& [m, c] : x.terms()) {
    TensorElement t{{{Monomial{}, Monomial{}}, Cyclotomic(1)}};
    for (int l : m.word()) t = tensor_multiply(t, letter_coproduct(l), ell);
    for (const auto& [p, v] : t) out[p] += c * v;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Cyclotomic counit(const Element& x) {
  Cyclotomic s(0);
  for (const auto& [m, c] : x.terms())
    if (m.b == 0 && m.c == 0) s += c;
  return s;
}

Element antipode(const Element& x, int ell) {
  // S(a) = d, S(d) = a, S(b) = -q^-1 b, S(c) = -q c; anti-multiplicative
  const Element images[4] = {Element::generator('d'), Cyclotomic(-1) * qp(ell, -1) * Element::generator('b'),
                             Cyclotomic(-1) * qp(ell, 1) * Element::generator('c'), Element::generator('a')};
  Element out;
  for (const auto& [m, c] : x.terms()) {
    const auto w = m.word();
    Element t = Element::one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = multiply(t, images[*it], ell);
    out += c * t;
  }
  return out;
}

namespace {

const uq::Rep& tensor_power_rep(int n, int ell) {
  static std::recursive_mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<uq::Rep>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{ell, n}];
  if (!slot) {
    if (n == 0)
      slot = std::make_unique<uq::Rep>(uq::trivial_module(ell));
    else
      slot = std::make_unique<uq::Rep>(uq::tensor(tensor_power_rep(n - 1, ell), uq::natural_module(ell)));
  }
  return *slot;
}

const Mat& action_on_power(const uq::AlgebraElement& u, int n, int ell) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::string>, Mat> cache;
  const auto key = std::tuple{ell, n, uq::to_string(u)};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Mat m = tensor_power_rep(n, ell).act(u);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(m)).first->second;
}

// Row and column multi-indices of a word as a matrix coefficient of V_1^{(x) n}.
std::pair<Index, Index> word_indices(const std::vector<int>& w) {
  Index row = 0, col = 0;
  for (int l : w) {
    const auto [i, j] = letter_index(l);
    row = 2 * row + i;
    col = 2 * col + j;
  }
  return {row, col};
}

std::vector<int> word_from_indices(Index row, Index col, int n) {
  std::vector<int> w(n);
  for (int k = n - 1; k >= 0; --k) {
    w[k] = static_cast<int>(2 * (row % 2) + col % 2);
    row /= 2;
    col /= 2;
  }
  return w;
}

}  // namespace

Cyclotomic evaluate(const Element& x, const uq::AlgebraElement& u, int ell) {
  Cyclotomic s(0);
  for (const auto& [m, c] : x.terms()) {
    const auto w = m.word();
    const auto [row, col] = word_indices(w);
    s += c * action_on_power(u, static_cast<int>(w.size()), ell)(row, col);
  }
  return s;
}

Element rho1(const uq::AlgebraElement& u, const Element& x, int ell) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    const auto w = m.word();
    const int n = static_cast<int>(w.size());
    const auto [row, col] = word_indices(w);
    const Mat& rho = action_on_power(u, n, ell);
    for (Index j = 0; j < rho.rows(); ++j)
      if (!rho(j, col).is_zero()) out += (c * rho(j, col)) * word_normal_form(word_from_indices(row, j, n), ell);
  }
  return out;
}

Element rho2(const uq::AlgebraElement& u, const Element& x, int ell) {
  const uq::AlgebraElement su = uq::antipode(u, ell);
  Element out;
  for (const auto& [m, c] : x.terms()) {
    const auto w = m.word();
    const int n = static_cast<int>(w.size());
    const auto [row, col] = word_indices(w);
    const Mat& rho = action_on_power(su, n, ell);
    for (Index i = 0; i < rho.cols(); ++i)
      if (!rho(row, i).is_zero()) out += (c * rho(row, i)) * word_normal_form(word_from_indices(i, col, n), ell);
  }
  return out;
}

std::vector<Monomial> monomials_up_to(int degree) {
  std::vector<Monomial> out;
  for (int n = 0; n <= degree; ++n) {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) out.push_back(mono(a, b, n - a - b, 0));
    for (int d = 1; d <= n; ++d)
      for (int b = 0; b + d <= n; ++b) out.push_back(mono(0, b, n - b - d, d));
  }
  std::stable_sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    return x.degree() != y.degree() ? x.degree() < y.degree() : x < y;
  });
  return out;
}

namespace {

CoeffTable transport(const CoeffTable& c, const Mat& projection, const Mat& inclusion) {
  const Index rows = static_cast<Index>(c.size());
  // t = C * inclusion
  std::vector<std::vector<Element>> t(rows, std::vector<Element>(inclusion.cols()));
  for (Index p = 0; p < rows; ++p)
    for (Index q = 0; q < inclusion.rows(); ++q) {
      if (c[p][q].is_zero()) continue;
      for (Index j = 0; j < inclusion.cols(); ++j)
        if (!inclusion(q, j).is_zero()) t[p][j] += inclusion(q, j) * c[p][q];
    }
  CoeffTable out(projection.rows(), std::vector<Element>(inclusion.cols()));
  for (Index i = 0; i < projection.rows(); ++i)
    for (Index p = 0; p < projection.cols(); ++p) {
      if (projection(i, p).is_zero()) continue;
      for (Index j = 0; j < inclusion.cols(); ++j)
        if (!t[p][j].is_zero()) out[i][j] += projection(i, p) * t[p][j];
    }
  return out;
}

const CoeffTable& table_for(const uq::RealizationPtr& step, int ell);

CoeffTable build_table(const uq::RealizationStep& s, int ell) {
  using K = uq::RealizationStep::Kind;
  switch (s.kind) {
    case K::Trivial: return {{Element::one()}};
    case K::Natural:
      return {{Element::generator('a'), Element::generator('b')}, {Element::generator('c'), Element::generator('d')}};
    case K::Tensor: {
      const CoeffTable& x = table_for(s.parent, ell);
      const CoeffTable& y = table_for(s.parent2, ell);
      const Index nx = static_cast<Index>(x.size()), ny = static_cast<Index>(y.size());
      CoeffTable out(nx * ny, std::vector<Element>(nx * ny));
      for (Index i = 0; i < nx; ++i)
        for (Index j = 0; j < nx; ++j) {
          if (x[i][j].is_zero()) continue;
          for (Index k = 0; k < ny; ++k)
            for (Index l = 0; l < ny; ++l)
              if (!y[k][l].is_zero()) out[i * ny + k][j * ny + l] = multiply(x[i][j], y[k][l], ell);
        }
      return out;
    }
    case K::Sub:
    case K::Quotient:
    case K::Summand: return transport(table_for(s.parent, ell), s.projection, s.inclusion);
    case K::Dual: {
      const CoeffTable& x = table_for(s.parent, ell);
      const Index n = static_cast<Index>(x.size());
      CoeffTable out(n, std::vector<Element>(n));
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out[i][j] = antipode(x[j][i], ell);
      return out;
    }
  }
  throw std::logic_error("unknown realization step");
}

const CoeffTable& table_for(const uq::RealizationPtr& step, int ell) {
  static std::recursive_mutex mutex;
  // the step pointer is kept alive by the cache key
  static std::map<std::pair<int, uq::RealizationPtr>, CoeffTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({ell, step});
  if (it != cache.end()) return it->second;
  CoeffTable t = build_table(*step, ell);
  return cache.emplace(std::pair{ell, step}, std::move(t)).first->second;
}

}  // namespace

const CoeffTable& coefficient_table(const uq::Rep& m) {
  if (!m.realization()) throw std::invalid_argument("matrix coefficients need a realization of " + m.label());
  const CoeffTable& t = table_for(m.realization(), m.ell());
  if (static_cast<Index>(t.size()) != m.dim()) throw std::logic_error("realization dimension mismatch");
  return t;
}

Coordinates::Coordinates(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  std::vector<graded::Grade> g;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i], static_cast<Index>(i)).second) throw std::invalid_argument("duplicate monomial");
    g.push_back(basis_[i].bigrade());
  }
  layout_ = graded::Layout(std::move(g));
}

Coordinates Coordinates::covering(const std::vector<Element>& elements) {
  std::set<Monomial> s;
  for (const auto& x : elements)
    for (const auto& [m, c] : x.terms()) s.insert(m);
  return Coordinates(std::vector<Monomial>(s.begin(), s.end()));
}

Index Coordinates::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("monomial " + to_string(m) + " outside the coordinate window");
  return it->second;
}

Vec Coordinates::vector(const Element& x) const {
  Vec v = Vec::Zero(dim());
  for (const auto& [m, c] : x.terms()) v(index(m)) = c;
  return v;
}

Mat Coordinates::matrix(const std::vector<Element>& xs) const {
  Mat m = Mat::Zero(dim(), static_cast<Index>(xs.size()));
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (const auto& [mono, c] : xs[j].terms()) m(index(mono), static_cast<Index>(j)) = c;
  return m;
}

Element Coordinates::element(const Vec& v) const {
  Element x;
  for (Index i = 0; i < dim(); ++i)
    if (!v(i).is_zero()) x.add_term(basis_[i], v(i));
  return x;
}

namespace {

std::vector<Element> columns_as_elements(const Coordinates& co, const Mat& m) {
  std::vector<Element> out;
  for (Index j = 0; j < m.cols(); ++j) out.push_back(co.element(m.col(j)));
  return out;
}

}  // namespace

namespace {

bool homogeneous(const Element& x) {
  if (x.is_zero()) return true;
  const auto g = x.terms().begin()->first.bigrade();
  for (const auto& [m, c] : x.terms())
    if (m.bigrade() != g) return false;
  return true;
}

bool all_homogeneous(const std::vector<Element>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Element& x) { return homogeneous(x); });
}

}  // namespace

MCSubspace span_of(const std::vector<Element>& xs, std::string source) {
  const auto co = Coordinates::covering(xs);
  const Mat m = co.matrix(xs);
  if (all_homogeneous(xs)) return {columns_as_elements(co, graded::span(co.layout(), m).basis), std::move(source)};
  return {columns_as_elements(co, linalg::column_basis(m)), std::move(source)};
}

MCSubspace matrix_coeffs(const uq::Rep& m) {
  std::vector<Element> all;
  for (const auto& row : coefficient_table(m))
    for (const auto& x : row)
      if (!x.is_zero()) all.push_back(x);
  return span_of(all, "M(" + m.label() + ")");
}

MCSubspace sum(const MCSubspace& x, const MCSubspace& y) {
  std::vector<Element> all = x.basis;
  all.insert(all.end(), y.basis.begin(), y.basis.end());
  return span_of(all, x.source + " + " + y.source);
}

namespace {

graded::Subspace as_subspace(const Coordinates& co, const MCSubspace& x) {
  graded::Subspace s;
  s.basis = co.matrix(x.basis);
  for (const auto& e : x.basis) s.grades.push_back(e.terms().begin()->first.bigrade());
  return s;
}

}  // namespace

MCSubspace intersect(const MCSubspace& x, const MCSubspace& y) {
  std::vector<Element> all = x.basis;
  all.insert(all.end(), y.basis.begin(), y.basis.end());
  const auto co = Coordinates::covering(all);
  if (all_homogeneous(all)) {
    const auto s = graded::intersect(co.layout(), as_subspace(co, x), as_subspace(co, y));
    return {columns_as_elements(co, s.basis), x.source + " & " + y.source};
  }
  return {columns_as_elements(co, linalg::intersect(co.matrix(x.basis), co.matrix(y.basis))),
          x.source + " & " + y.source};
}

bool contains(const MCSubspace& big, const MCSubspace& small) {
  std::vector<Element> all = big.basis;
  all.insert(all.end(), small.basis.begin(), small.basis.end());
  const auto co = Coordinates::covering(all);
  if (all_homogeneous(all)) return graded::contains(co.layout(), as_subspace(co, big), as_subspace(co, small));
  return linalg::rank(co.matrix(all)) == linalg::rank(co.matrix(big.basis));
}

bool same_span(const MCSubspace& x, const MCSubspace& y) {
  return x.dim() == y.dim() && contains(x, y);
}

Element trace(const uq::Rep& m) {
  const auto& t = coefficient_table(m);
  Element s;
  for (std::size_t i = 0; i < t.size(); ++i) s += t[i][i];
  return s;
}

std::vector<Element> cocommutative_basis(int degree, int ell) {
  using uq::GeneratorSymbol;
  const auto all = monomials_up_to(degree);
  // K-equation: q^left = q^-right
  std::vector<Monomial> cand;
  for (const auto& m : all) {
    const auto g = m.bigrade();
    if (((g[0] + g[1]) % ell + ell) % ell == 0) cand.push_back(m);
  }
  const Coordinates co(all);
  const std::vector<uq::AlgebraElement> gens = {GeneratorSymbol::E(1), GeneratorSymbol::F(1),
                                                GeneratorSymbol::E(ell), GeneratorSymbol::F(ell),
                                                GeneratorSymbol::KBinom(0, ell)};
  std::vector<Vec> cols;
  Mat eq = Mat::Zero(co.dim() * static_cast<Index>(gens.size()), static_cast<Index>(cand.size()));
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto sinv = uq::inverse_antipode(gens[gi], ell);
    for (std::size_t j = 0; j < cand.size(); ++j) {
      const Element x(cand[j], 1);
      const Element r = rho1(gens[gi], x, ell) - rho2(sinv, x, ell);
      for (const auto& [m, c] : r.terms()) eq(static_cast<Index>(gi) * co.dim() + co.index(m), static_cast<Index>(j)) = c;
    }
  }
  // drop zero rows before elimination
  std::vector<Index> rows;
  for (Index i = 0; i < eq.rows(); ++i)
    for (Index j = 0; j < eq.cols(); ++j)
      if (!eq(i, j).is_zero()) {
        rows.push_back(i);
        break;
      }
  Mat reduced(static_cast<Index>(rows.size()), eq.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) reduced.row(static_cast<Index>(r)) = eq.row(rows[r]);
  const Mat k = linalg::kernel(reduced);
  std::vector<Element> out;
  for (Index j = 0; j < k.cols(); ++j) {
    Element x;
    for (std::size_t i = 0; i < cand.size(); ++i) x.add_term(cand[i], k(static_cast<Index>(i), j));
    out.push_back(x);
  }
  return out;
}

std::string to_string(const Monomial& m) {
  std::vector<std::string> parts;
  auto add = [&](char l, int e) {
    if (e == 1) parts.push_back(std::string(1, l));
    if (e > 1) parts.push_back(std::string(1, l) + "^" + std::to_string(e));
  };
  add('a', m.a);
  add('b', m.b);
  add('c', m.c);
  add('d', m.d);
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

std::string to_string(const Element& x, int ell) {
  (void)ell;
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool unit = m == Monomial{};
    std::string body;
    bool negative = false;
    if (c.is_one() && !unit) {
      body = to_string(m);
    } else if ((-c).is_one() && !unit) {
      body = to_string(m);
      negative = true;
    } else {
      const std::string cs = to_string(c);
      const bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
      if (!compound && cs[0] == '-') {
        negative = true;
        body = cs.substr(1);
      } else {
        body = compound ? "(" + cs + ")" : cs;
      }
      if (!unit) body += "*" + to_string(m);
    }
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

Element parse_element(std::string_view text, int ell) {
  GeneratorMatcher match = [](std::string_view rest) -> std::optional<std::size_t> {
    if (!rest.empty() && rest[0] >= 'a' && rest[0] <= 'd') return 1;
    return std::nullopt;
  };
  Element out;
  for (const auto& t : parse_terms(text, 'q', match)) {
    std::vector<int> w;
    for (const auto& g : t.generators) w.push_back(g[0] - 'a');
    out += specialize(t.coeff, ell) * word_normal_form(w, ell);
  }
  return out;
}

nlohmann::json to_json(const Element& x, int ell) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) {
    nlohmann::json t;
    t["kind"] = m.d_side() ? "D" : "A";
    t["exponents"] = m.d_side() ? nlohmann::json{m.d, m.b, m.c} : nlohmann::json{m.a, m.b, m.c};
    t["coeff"] = qcoord::to_json(c, ell);
    j.push_back(t);
  }
  return j;
}

Element element_from_json(const nlohmann::json& j, int ell) {
  Element out;
  for (const auto& t : j) {
    const auto& e = t.at("exponents");
    const std::string kind = t.at("kind");
    Monomial m;
    if (kind == "D") {
      m = mono(0, e.at(1), e.at(2), e.at(0));
      if (m.d < 1) throw std::invalid_argument("D-side monomial needs a positive d exponent");
    } else if (kind == "A") {
      m = mono(e.at(0), e.at(1), e.at(2), 0);
    } else {
      throw std::invalid_argument("unknown monomial kind " + kind);
    }
    out.add_term(m, cyclotomic_from_json(t.at("coeff"), ell));
  }
  return out;
}

}  // namespace qcoord::oq
