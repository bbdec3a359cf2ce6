#include "qcoord/coeff/rational_fn.hpp"

#include <stdexcept>

#include "qcoord/coeff/poly.hpp"

namespace qcoord {

namespace {

poly::Poly shifted(const LaurentPoly& p, int& shift) {
  shift = p.min_degree();
  poly::Poly out(p.max_degree() - shift + 1);
  for (const auto& [e, c] : p.terms()) out[e - shift] = c;
  return out;
}

LaurentPoly unshifted(const poly::Poly& p, int shift) {
  LaurentPoly r;
  for (std::size_t i = 0; i < p.size(); ++i) r.add_term(static_cast<int>(i) + shift, p[i]);
  return r;
}

}  // namespace

RationalFn::RationalFn(const LaurentPoly& p) : num_(p) {}

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int sn = 0, sd = 0;
  poly::Poly n = shifted(num_, sn);
  poly::Poly d = shifted(den_, sd);
  poly::Poly g = poly::gcd(n, d);
  n = poly::divmod(n, g).first;
  d = poly::divmod(d, g).first;
  const Rational lead = d.back();
  n = poly::scale(n, 1 / lead);
  d = poly::scale(d, 1 / lead);
  num_ = unshifted(n, sn - sd);
  den_ = unshifted(d, 0);
}

bool RationalFn::is_laurent() const { return den_ == LaurentPoly(1); }

std::optional<LaurentPoly> RationalFn::to_laurent() const {
  if (!is_laurent()) return std::nullopt;
  return num_;
}

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RationalFn: division by zero");
  return RationalFn(den_, num_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

std::string to_string(const RationalFn& f) {
  if (f.is_laurent()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace qcoord
