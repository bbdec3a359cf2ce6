#include "qcoord/qmatrix/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcoord/coeff/text.hpp"

namespace qcoord::qmatrix {

namespace {

constexpr long kStepBudget = 50'000'000;

using Combination = std::map<QMonomial, LaurentPoly>;

void accumulate(Combination& acc, const Combination& x, const LaurentPoly& s) {
  for (const auto& [m, c] : x) {
    LaurentPoly& t = acc[m];
    t += s * c;
    if (t.is_zero()) acc.erase(m);
  }
}

QMonomial from_word(int n, const Word& w) {
  QMonomial m = QMonomial::one(n);
  for (int p : w) ++m.exponents[static_cast<std::size_t>(p)];
  return m;
}

// Rewrites X_b X_a (b > a in the row-major order) as a combination of ordered pairs.
std::vector<std::pair<LaurentPoly, Word>> swap_rule(int n, int b, int a) {
  const int m = b / n, j = b % n;  // X_b = X[m, j]
  const int l = a / n, i = a % n;  // X_a = X[l, i]
  const LaurentPoly v = LaurentPoly::v(), vinv = LaurentPoly::monomial(-1);
  if (i == j) return {{vinv, {a, b}}};  // same column, l < m
  if (l == m) return {{vinv, {a, b}}};  // same row, i < j
  if (i > j) return {{LaurentPoly(1), {a, b}}};
  // l < m, i < j
  return {{LaurentPoly(1), {a, b}}, {-(v - vinv), {l * n + j, m * n + i}}};
}

class Rewriter {
 public:
  explicit Rewriter(int n) : n_(n) {}

  // Sorted form (no determinant elimination).
  const Combination& sort(const Word& w) {
    auto it = sorted_.find(w);
    if (it != sorted_.end()) return it->second;
    tick();
    Combination out;
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      out[from_word(n_, w)] = LaurentPoly(1);
    } else {
      for (const auto& [c, pair] : swap_rule(n_, w[k], w[k + 1])) {
        Word next(w.begin(), w.begin() + static_cast<long>(k));
        next.insert(next.end(), pair.begin(), pair.end());
        next.insert(next.end(), w.begin() + static_cast<long>(k) + 2, w.end());
        accumulate(out, sort(next), c);
      }
    }
    return sorted_.emplace(w, std::move(out)).first->second;
  }

  // Normal form of a sorted monomial.
  const Combination& normal(const QMonomial& m) {
    auto it = normal_.find(m);
    if (it != normal_.end()) return it->second;
    if (m.in_xi()) return normal_.emplace(m, Combination{{m, LaurentPoly(1)}}).first->second;
    if (!active_.insert(m).second) throw std::runtime_error("qmatrix reduce: rewriting revisits " + to_string(m));
    tick();
    QMonomial rest = m;
    for (int i = 1; i <= n_; ++i) --rest.at(i, i);
    const Word rest_word = rest.word();
    Word diag;
    for (int i = 0; i < n_; ++i) diag.push_back(i * n_ + i);
    Word lead = diag;
    lead.insert(lead.end(), rest_word.begin(), rest_word.end());
    Combination others = sort(lead);
    auto c_it = others.find(m);
    if (c_it == others.end() || c_it->second.terms().size() != 1)
      throw std::runtime_error("qmatrix reduce: leading coefficient is not a unit");
    const auto [e, coeff] = *c_it->second.terms().begin();
    if (coeff != 1 && coeff != -1) throw std::runtime_error("qmatrix reduce: leading coefficient is not a unit");
    const LaurentPoly inv = LaurentPoly::monomial(-e, coeff);
    others.erase(c_it);

    // X_11 ... X_nn = 1 - sum_{sigma != id} (-v)^{l(sigma)} X_{sigma(1)1} ... X_{sigma(n)n}
    Combination value;
    accumulate(value, normal_of(sort(rest_word)), LaurentPoly(1));
    std::vector<int> sigma(static_cast<std::size_t>(n_));
    std::iota(sigma.begin(), sigma.end(), 0);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      int inversions = 0;
      for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y) inversions += sigma[x] > sigma[y];
      Word w;
      for (int col = 0; col < n_; ++col) w.push_back(sigma[col] * n_ + col);
      w.insert(w.end(), rest_word.begin(), rest_word.end());
      LaurentPoly s = LaurentPoly::monomial(inversions, inversions % 2 ? -1 : 1);
      accumulate(value, normal_of(sort(w)), -s);
    }
    accumulate(value, normal_of(others), LaurentPoly(-1));
    Combination out;
    accumulate(out, value, inv);
    active_.erase(m);
    return normal_.emplace(m, std::move(out)).first->second;
  }

  Combination normal_of(const Combination& x) {
    Combination out;
    for (const auto& [m, c] : x) accumulate(out, normal(m), c);
    return out;
  }

  void reset_budget() { steps_ = 0; }

 private:
  void tick() {
    if (++steps_ > kStepBudget) throw std::runtime_error("qmatrix reduce: step budget exceeded");
  }

  int n_;
  long steps_ = 0;
  std::map<Word, Combination> sorted_;
  std::map<QMonomial, Combination> normal_;
  std::set<QMonomial> active_;
};

Rewriter& rewriter(int n) {
  thread_local std::map<int, Rewriter> table;
  return table.try_emplace(n, n).first->second;
}

QMatElement from_combination(int n, const Combination& c) {
  QMatElement out(n);
  for (const auto& [m, x] : c) out.add_term(m, x);
  return out;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("qmatrix: n must be positive");
}

}  // namespace

QMonomial QMonomial::generator(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("qmatrix: generator index out of range");
  QMonomial m = one(n);
  m.at(i, j) = 1;
  return m;
}

int QMonomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool QMonomial::in_xi() const {
  for (int i = 1; i <= n; ++i)
    if (at(i, i) == 0) return true;
  return false;
}

Word QMonomial::word() const {
  Word w;
  for (std::size_t p = 0; p < exponents.size(); ++p)
    for (int k = 0; k < exponents[p]; ++k) w.push_back(static_cast<int>(p));
  return w;
}

QMatElement::QMatElement(const QMonomial& m, const LaurentPoly& c) : n_(m.n) { add_term(m, c); }

int QMatElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void QMatElement::add_term(const QMonomial& m, const LaurentPoly& c) {
  if (m.n != n_) throw std::invalid_argument("qmatrix: mixed sizes");
  if (c.is_zero()) return;
  LaurentPoly& t = terms_[m];
  t += c;
  if (t.is_zero()) terms_.erase(m);
}

QMatElement& QMatElement::operator+=(const QMatElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QMatElement& QMatElement::operator-=(const QMatElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QMatElement operator*(const LaurentPoly& s, const QMatElement& x) {
  QMatElement out(x.n_);
  for (const auto& [m, c] : x.terms_) out.add_term(m, s * c);
  return out;
}

QMatElement reduce_word(int n, const Word& w) {
  check_n(n);
  for (int p : w)
    if (p < 0 || p >= n * n) throw std::invalid_argument("qmatrix: pair index out of range");
  Rewriter& r = rewriter(n);
  r.reset_budget();
  return from_combination(n, r.normal_of(r.sort(w)));
}

QMatElement reduce(const QMatElement& x) {
  QMatElement out(x.n());
  for (const auto& [m, c] : x.terms()) out += c * reduce_word(x.n(), m.word());
  return out;
}

QMatElement multiply(const QMatElement& x, const QMatElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("qmatrix multiply: mixed sizes");
  QMatElement out(x.n());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      Word w = mx.word();
      const Word wy = my.word();
      w.insert(w.end(), wy.begin(), wy.end());
      out += (cx * cy) * reduce_word(x.n(), w);
    }
  return out;
}

std::vector<QMonomial> xi_monomials(int n, int d) {
  check_n(n);
  std::vector<QMonomial> out;
  // exponent vectors of each total degree, by recursion on the position
  for (int total = 0; total <= d; ++total) {
    QMonomial m = QMonomial::one(n);
    const std::size_t cells = m.exponents.size();
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == cells) {
        m.exponents[pos] = left;
        if (m.in_xi()) out.push_back(m);
        return;
      }
      for (int k = left; k >= 0; --k) {
        m.exponents[pos] = k;
        self(self, pos + 1, left - k);
      }
    };
    rec(rec, 0, total);
  }
  std::stable_sort(out.begin(), out.end(), [](const QMonomial& x, const QMonomial& y) {
    return x.degree() != y.degree() ? x.degree() < y.degree() : x < y;
  });
  return out;
}

bool supported_on_xi(const QMatElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first.in_xi(); });
}

std::string to_string(const QMonomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) {
      const int e = m.at(i, j);
      if (e == 0) continue;
      if (!first) os << "*";
      first = false;
      os << "X[" << i << "," << j << "]";
      if (e > 1) os << "^" << e;
    }
  return first ? "1" : os.str();
}

std::string to_string(const QMatElement& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<QMonomial, LaurentPoly>> terms(x.terms().begin(), x.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.degree() != b.first.degree() ? a.first.degree() < b.first.degree() : a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string t;
    const bool constant = m.degree() == 0;
    const bool single = c.terms().size() == 1;
    if (constant) {
      t = single ? to_string(c) : "(" + to_string(c) + ")";
    } else if (c == LaurentPoly(1)) {
      t = to_string(m);
    } else if (c == LaurentPoly(-1)) {
      t = "-" + to_string(m);
    } else {
      t = (single ? to_string(c) : "(" + to_string(c) + ")") + " " + to_string(m);
    }
    if (first) os << t;
    else if (t[0] == '-') os << " - " << t.substr(1);
    else os << " + " << t;
    first = false;
  }
  return os.str();
}

QMatElement parse(std::string_view text, int n) {
  check_n(n);
  GeneratorMatcher match = [](std::string_view rest) -> std::optional<std::size_t> {
    if (rest.size() < 2 || rest[0] != 'X' || rest[1] != '[') return std::nullopt;
    const auto close = rest.find(']');
    if (close == std::string_view::npos) return std::nullopt;
    return close + 1;
  };
  QMatElement out(n);
  for (const auto& t : parse_terms(text, 'v', match)) {
    Word w;
    for (const auto& g : t.generators) {
      int i = 0, j = 0;
      char comma = 0;
      std::istringstream is(g.substr(2, g.size() - 3));
      if (!(is >> i >> comma >> j) || comma != ',' || i < 1 || j < 1 || i > n || j > n)
        throw ParseError("bad generator " + g + " for n = " + std::to_string(n));
      w.push_back((i - 1) * n + (j - 1));
    }
    out += t.coeff * reduce_word(n, w);
  }
  return out;
}

nlohmann::json to_json(const QMatElement& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 1; k <= m.n; ++k) row.push_back(m.at(i, k));
      rows.push_back(row);
    }
    j.push_back({{"exponents", rows}, {"coeff", qcoord::to_json(c)}});
  }
  return j;
}

QMatElement from_json(const nlohmann::json& j, int n) {
  QMatElement out(n);
  for (const auto& t : j) {
    QMonomial m = QMonomial::one(n);
    const auto& rows = t.at("exponents");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("qmatrix json: wrong matrix size");
    for (int i = 1; i <= n; ++i) {
      if (static_cast<int>(rows[i - 1].size()) != n) throw std::invalid_argument("qmatrix json: wrong matrix size");
      for (int k = 1; k <= n; ++k) m.at(i, k) = rows[i - 1][k - 1].get<int>();
    }
    out.add_term(m, laurent_from_json(t.at("coeff")));
  }
  return out;
}

}  // namespace qcoord::qmatrix
