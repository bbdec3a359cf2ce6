#pragma once

#include <optional>
#include <string>

#include "qcoord/coeff/laurent.hpp"

namespace qcoord {

// Element of Q(v) as a reduced fraction of Laurent polynomials.
// Normal form: numerator and denominator coprime in Q[v], denominator a monic polynomial
// with nonzero constant term (so the v-power shift lives in the numerator).
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(const LaurentPoly& p);  // NOLINT
  RationalFn(const LaurentPoly& num, const LaurentPoly& den);  // throws std::domain_error if den == 0

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const;  // denominator is a unit of Q[v, v^-1]
  std::optional<LaurentPoly> to_laurent() const;
  RationalFn inverse() const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }
  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

std::string to_string(const RationalFn& f);

}  // namespace qcoord
