#include "qcoord/coeff/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "qcoord/coeff/poly.hpp"

namespace qcoord {

namespace {

struct FieldData {
  int ell = 0;
  int phi = 0;
  poly::Poly modulus;              // monic, degree phi
  std::vector<poly::Poly> powers;  // powers[k] = v^k mod modulus, 0 <= k < ell
};

const FieldData& field(int ell) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[ell];
  if (!slot) {
    if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be odd and >= 3");
    auto data = std::make_unique<FieldData>();
    data->ell = ell;
    data->modulus = cyclotomic_poly(ell);
    data->phi = poly::degree(data->modulus);
    for (int k = 0; k < ell; ++k) {
      poly::Poly mono(k + 1);
      mono[k] = 1;
      data->powers.push_back(poly::divmod(mono, data->modulus).second);
    }
    slot = std::move(data);
  }
  return *slot;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_poly(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Rational>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  poly::Poly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  poly::Poly den{Rational(1)};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = poly::mul(den, cyclotomic_poly(d));
  auto [quot, rem] = poly::divmod(num, den);
  if (!rem.empty()) throw std::logic_error("cyclotomic_poly: inexact division");
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(quot)).first->second;
}

Cyclotomic::Cyclotomic(int c) : Cyclotomic(static_cast<long>(c)) {}

Cyclotomic::Cyclotomic(long c) {
  if (c != 0) c_.emplace_back(c);
}

Cyclotomic::Cyclotomic(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Cyclotomic Cyclotomic::q_pow(int ell, long e) {
  const FieldData& f = field(ell);
  long k = e % ell;
  if (k < 0) k += ell;
  Cyclotomic x;
  x.ell_ = ell;
  x.c_ = f.powers[k];
  return x;
}

Cyclotomic Cyclotomic::from_coeffs(int ell, std::vector<Rational> coeffs) {
  const FieldData& f = field(ell);
  poly::trim(coeffs);
  Cyclotomic x;
  x.ell_ = ell;
  x.c_ = poly::divmod(coeffs, f.modulus).second;
  return x;
}

std::vector<Rational> Cyclotomic::coeff_vector(int ell) const {
  if (ell_ != 0 && ell_ != ell) throw std::invalid_argument("Cyclotomic: field mismatch");
  std::vector<Rational> out(field(ell).phi);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  return out;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("Cyclotomic: not a rational constant");
  return c_.empty() ? Rational(0) : c_[0];
}

void Cyclotomic::adopt(int ell) {
  if (ell == 0 || ell == ell_) return;
  if (ell_ != 0) throw std::invalid_argument("Cyclotomic: mixing different cyclotomic fields");
  ell_ = ell;
}

void Cyclotomic::trim() { poly::trim(c_); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  adopt(o.ell_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  adopt(o.ell_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r;
  r.ell_ = a.ell_;
  r.adopt(b.ell_);
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const Cyclotomic& scalar = a.c_.size() == 1 ? a : b;
    const Cyclotomic& other = a.c_.size() == 1 ? b : a;
    const Rational& s = scalar.c_[0];
    r.c_ = other.c_;
    if (s != 1)
      for (auto& x : r.c_) x *= s;
    return r;
  }
  const FieldData& f = field(r.ell_);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      prod[i + j] += t;
    }
  }
  const int phi = f.phi;
  for (int k = static_cast<int>(prod.size()) - 1; k >= phi; --k) {
    if (sgn(prod[k]) == 0) continue;
    const Rational c = prod[k];
    for (int i = 0; i <= phi; ++i) {
      if (sgn(f.modulus[i]) == 0) continue;
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), f.modulus[i].get_mpq_t());
      prod[k - phi + i] -= t;
    }
  }
  if (static_cast<int>(prod.size()) > phi) prod.resize(phi);
  poly::trim(prod);
  r.c_ = std::move(prod);
  return r;
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }

Cyclotomic Cyclotomic::inverse() const {
  if (c_.empty()) throw std::domain_error("Cyclotomic: division by zero");
  Cyclotomic r;
  r.ell_ = ell_;
  if (c_.size() == 1) {
    r.c_ = {1 / c_[0]};
    return r;
  }
  r.c_ = poly::inverse_mod(c_, field(ell_).modulus);
  return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Cyclotomic result(1);
  result.adopt(ell_);
  while (k) {
    if (k & 1ul) result *= base;
    k >>= 1ul;
    if (k) base *= base;
  }
  return result;
}

Cyclotomic specialize(const LaurentPoly& p, int ell) {
  const FieldData& f = field(ell);
  std::vector<Rational> acc(f.phi);
  for (const auto& [e, c] : p.terms()) {
    int k = e % ell;
    if (k < 0) k += ell;
    const auto& pw = f.powers[k];
    for (std::size_t i = 0; i < pw.size(); ++i) acc[i] += c * pw[i];
  }
  return Cyclotomic::from_coeffs(ell, std::move(acc));
}

std::string to_string(const Cyclotomic& x, char var) {
  LaurentPoly p;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) p.add_term(static_cast<int>(i), x.coeffs()[i]);
  return to_string(p, var);
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << to_string(x); }

}  // namespace qcoord
