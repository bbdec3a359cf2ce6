#include "qcoord/coeff/poly.hpp"

#include <stdexcept>

namespace qcoord {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace qcoord

namespace qcoord::poly {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem(a);
  trim(rem);
  const int db = degree(b);
  if (degree(rem) < db) return {Poly{}, rem};
  Poly quot(rem.size() - b.size() + 1);
  const Rational lead_inv = 1 / b.back();
  for (int k = degree(rem); k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    Rational c = rem[k] * lead_inv;
    quot[k - db] = c;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * b[i];
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, 1 / a.back());
  return a;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // Extended Euclid keeping only the coefficient of a.
  Poly r0 = m, r1 = divmod(a, m).second;
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) throw std::domain_error("element is not invertible modulo the given polynomial");
  return divmod(scale(s0, 1 / r0[0]), m).second;
}

}  // namespace qcoord::poly
