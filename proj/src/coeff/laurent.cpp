#include "qcoord/coeff/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcoord/coeff/poly.hpp"

namespace qcoord {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (sgn(coeff) != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e >= 0 ? x : Rational(1 / x);
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    total += c * p;
  }
  return total;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1), base(*this);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

namespace {

// p = v^shift * P(v) with P(0) != 0
poly::Poly to_poly(const LaurentPoly& p, int& shift) {
  shift = p.min_degree();
  poly::Poly out(p.max_degree() - shift + 1);
  for (const auto& [e, c] : p.terms()) out[e - shift] = c;
  return out;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("Laurent division by zero");
  if (a.is_zero()) return LaurentPoly();
  int sa = 0, sb = 0;
  auto pa = to_poly(a, sa);
  auto pb = to_poly(b, sb);
  auto [quot, rem] = poly::divmod(pa, pb);
  if (!rem.empty()) return std::nullopt;
  LaurentPoly r;
  for (std::size_t i = 0; i < quot.size(); ++i) r.add_term(static_cast<int>(i) + sa - sb, quot[i]);
  return r;
}

std::string to_string(const LaurentPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int e = it->first;
    Rational c = it->second;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    const bool integral = c.get_den() == 1;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << (integral ? c.get_str() : "(" + c.get_str() + ")") << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace qcoord
