#pragma once

#include <map>
#include <optional>
#include <string>

#include "qcoord/coeff/rational.hpp"

namespace qcoord {

// Element of Q[v, v^-1], stored sparsely by exponent.  Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit constant embedding is intended
  LaurentPoly(const Rational& c);  // NOLINT

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);
  static LaurentPoly v() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  int min_degree() const;  // requires nonzero
  int max_degree() const;  // requires nonzero

  Rational evaluate(const Rational& x) const;  // x != 0 when negative exponents are present
  Rational at_one() const { return evaluate(1); }
  LaurentPoly bar() const;  // v -> v^-1
  LaurentPoly pow(unsigned k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  void add_term(int exponent, const Rational& c);

 private:
  Terms terms_;
};

// Exact quotient a / b in Q[v, v^-1], or nullopt when b does not divide a.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

std::string to_string(const LaurentPoly& p, char var = 'v');
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qcoord
