#pragma once

// Quantum matrices O(SL_n) over Q[v, v^-1] on generators X[i,j], 1 <= i, j <= n:
//   X[i,l] X[j,l] = v X[j,l] X[i,l]                              (i < j)
//   X[l,i] X[l,j] = v X[l,j] X[l,i]                              (i < j)
//   X[l,i] X[m,j] = X[m,j] X[l,i]                                (l < m, i > j)
//   X[l,i] X[m,j] - X[m,j] X[l,i] = (v - v^-1) X[l,j] X[m,i]     (l < m, i < j)
//   sum_sigma (-v)^{l(sigma)} X[sigma(1),1] ... X[sigma(n),n] = 1
//
// Normal form: words sorted by the row-major order on index pairs, and exponent
// matrices with at least one zero diagonal entry.  A sorted monomial whose diagonal
// is everywhere positive is rewritten through the determinant relation.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcoord/coeff/laurent.hpp"

namespace qcoord::qmatrix {

// Exponent matrix, row-major, n*n entries.
struct QMonomial {
  int n = 2;
  std::vector<int> exponents;

  static QMonomial one(int n) { return {n, std::vector<int>(static_cast<std::size_t>(n * n), 0)}; }
  static QMonomial generator(int n, int i, int j);  // 1-based
  int& at(int i, int j) { return exponents[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  int at(int i, int j) const { return exponents[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  int degree() const;
  bool in_xi() const;  // some diagonal exponent is zero
  // The sorted word: pair indices p = (i-1) n + (j-1), ascending.
  std::vector<int> word() const;
  auto operator<=>(const QMonomial&) const = default;
};

class QMatElement {
 public:
  explicit QMatElement(int n = 2) : n_(n) {}
  QMatElement(const QMonomial& m, const LaurentPoly& c);
  static QMatElement one(int n) { return QMatElement(QMonomial::one(n), LaurentPoly(1)); }
  static QMatElement generator(int n, int i, int j) { return QMatElement(QMonomial::generator(n, i, j), 1); }

  int n() const { return n_; }
  const std::map<QMonomial, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  void add_term(const QMonomial& m, const LaurentPoly& c);

  QMatElement& operator+=(const QMatElement& o);
  QMatElement& operator-=(const QMatElement& o);
  friend QMatElement operator+(QMatElement x, const QMatElement& y) { return x += y; }
  friend QMatElement operator-(QMatElement x, const QMatElement& y) { return x -= y; }
  friend QMatElement operator*(const LaurentPoly& s, const QMatElement& x);
  friend bool operator==(const QMatElement& x, const QMatElement& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }

 private:
  int n_;
  std::map<QMonomial, LaurentPoly> terms_;
};

// A word in the generators, pair indices p = (i-1) n + (j-1).
using Word = std::vector<int>;

// Normal form of a product of generators.  Throws std::runtime_error when the
// rewriting exceeds its step budget or revisits a monomial (treated as a bug).
QMatElement reduce_word(int n, const Word& w);
// Normal form of an element whose monomials are read as sorted words.
QMatElement reduce(const QMatElement& x);
QMatElement multiply(const QMatElement& x, const QMatElement& y);

// Exponent matrices of total degree <= d with some zero diagonal entry, ordered by
// (degree, exponents).
std::vector<QMonomial> xi_monomials(int n, int d);

bool supported_on_xi(const QMatElement& x);

std::string to_string(const QMonomial& m);
std::string to_string(const QMatElement& x);
// Grammar of qcoord/coeff/text.hpp with generator tokens X[i,j] and coefficient variable v.
// The parsed product is reduced.
QMatElement parse(std::string_view text, int n);
nlohmann::json to_json(const QMatElement& x);
QMatElement from_json(const nlohmann::json& j, int n);

}  // namespace qcoord::qmatrix
