#pragma once

// The quantum function algebra O_q(SL_2) on generators a, b, c, d with
//   ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb,
//   ad - q bc = 1, da - q^-1 bc = 1.
// Normal form: a^m b^k c^h or b^k c^h d^l (never both a and d).
// Matrix coefficients use a = X11, b = X12, c = X21, d = X22 with X_ij(u) = <delta_i, u x_j>
// on the natural module.

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcoord/coeff/cyclotomic.hpp"
#include "qcoord/linalg/graded.hpp"
#include "qcoord/uq/generator.hpp"
#include "qcoord/uq/rep.hpp"

namespace qcoord::oq {

using Eigen::Index;

struct Monomial {
  int a = 0, b = 0, c = 0, d = 0;  // a == 0 || d == 0

  int degree() const { return a + b + c + d; }
  bool d_side() const { return d > 0; }
  // (left, right): weights under rho1(K) and rho2(K)
  graded::Grade bigrade() const { return {a - b + c - d, -a - b + c + d}; }
  // Word in the letters 0..3 (a..d) whose product is this monomial.
  std::vector<int> word() const;
  auto operator<=>(const Monomial&) const = default;
};

class Element {
 public:
  Element() = default;
  explicit Element(const Cyclotomic& c);
  Element(const Monomial& m, const Cyclotomic& c);
  static Element one() { return Element(Cyclotomic(1)); }
  static Element generator(char letter);  // 'a', 'b', 'c', 'd'

  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  Cyclotomic coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Cyclotomic& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Cyclotomic& s, const Element& x);
  friend bool operator==(const Element& x, const Element& y) { return x.terms_ == y.terms_; }

 private:
  std::map<Monomial, Cyclotomic> terms_;
};

// Products in normal form.
Element multiply_letter(const Element& x, int letter, int ell);
Element multiply(const Element& x, const Element& y, int ell);
Element word_normal_form(const std::vector<int>& letters, int ell);
Element power(const Element& x, int n, int ell);

using TensorElement = std::map<std::pair<Monomial, Monomial>, Cyclotomic>;
TensorElement comultiply(const Element& x, int ell);
Cyclotomic counit(const Element& x);
Element antipode(const Element& x, int ell);

// <x, u> via the action of u on tensor powers of the natural module.
Cyclotomic evaluate(const Element& x, const uq::AlgebraElement& u, int ell);
// rho1(u) f = sum f_(1) <u, f_(2)>,  rho2(u) f = sum <S(u), f_(1)> f_(2)
Element rho1(const uq::AlgebraElement& u, const Element& x, int ell);
Element rho2(const uq::AlgebraElement& u, const Element& x, int ell);

// Monomials of total degree <= D, ordered by (degree, monomial).
std::vector<Monomial> monomials_up_to(int degree);

// C[i][j] = c_{x_j, delta_i}, transported through the module's realization.
using CoeffTable = std::vector<std::vector<Element>>;
const CoeffTable& coefficient_table(const uq::Rep& m);

// Coordinates of elements in a finite monomial basis, graded by bigrade.
class Coordinates {
 public:
  Coordinates() = default;
  explicit Coordinates(std::vector<Monomial> basis);
  static Coordinates covering(const std::vector<Element>& elements);

  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const graded::Layout& layout() const { return layout_; }
  bool contains(const Monomial& m) const { return index_.count(m) > 0; }
  Index index(const Monomial& m) const;
  Vec vector(const Element& x) const;
  Mat matrix(const std::vector<Element>& xs) const;  // one column per element
  Element element(const Vec& v) const;

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, Index> index_;
  graded::Layout layout_;
};

// A finite-dimensional subspace of O_q given by a basis.
struct MCSubspace {
  std::vector<Element> basis;
  std::string source;
  Index dim() const { return static_cast<Index>(basis.size()); }
};

MCSubspace matrix_coeffs(const uq::Rep& m);
// Linearly independent spanning set of the span of xs (homogeneous when every x is).
MCSubspace span_of(const std::vector<Element>& xs, std::string source = "");
MCSubspace sum(const MCSubspace& x, const MCSubspace& y);
MCSubspace intersect(const MCSubspace& x, const MCSubspace& y);
bool contains(const MCSubspace& big, const MCSubspace& small);
bool same_span(const MCSubspace& x, const MCSubspace& y);

Element trace(const uq::Rep& m);

// Basis of {f : rho1(g) f = rho2(S^-1 g) f for g in the generating set}, deg f <= D.
std::vector<Element> cocommutative_basis(int degree, int ell);

std::string to_string(const Monomial& m);
std::string to_string(const Element& x, int ell);
Element parse_element(std::string_view text, int ell);
nlohmann::json to_json(const Element& x, int ell);
Element element_from_json(const nlohmann::json& j, int ell);

}  // namespace qcoord::oq
