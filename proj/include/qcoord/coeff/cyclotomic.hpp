#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <vector>

#include "qcoord/coeff/laurent.hpp"
#include "qcoord/coeff/rational.hpp"

namespace qcoord {

// Element of Q(q) = Q[v]/Phi_ell(v), q the class of v.
//
// The residue is stored as a trimmed coefficient vector (ascending, length <= phi(ell)).
// ell == 0 marks a rational constant not yet tied to a field; it mixes with any ell.
// This keeps Scalar(0) and Scalar(1) meaningful inside Eigen expressions.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int c);  // NOLINT
  Cyclotomic(long c);  // NOLINT
  Cyclotomic(const Rational& c);  // NOLINT

  static Cyclotomic q(int ell) { return q_pow(ell, 1); }
  static Cyclotomic q_pow(int ell, long e);
  static Cyclotomic from_coeffs(int ell, std::vector<Rational> coeffs);

  int ell() const { return ell_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::vector<Rational> coeff_vector(int ell) const;  // padded to phi(ell)

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend Cyclotomic operator-(Cyclotomic a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  void adopt(int ell);
  void trim();

  int ell_ = 0;
  std::vector<Rational> c_;
};

// Coefficients of the ell-th cyclotomic polynomial (ascending), computed recursively.
const std::vector<Rational>& cyclotomic_poly(int ell);
int euler_phi(int n);

// Ring homomorphism Q[v, v^-1] -> Q(q), v -> q.
Cyclotomic specialize(const LaurentPoly& p, int ell);

std::string to_string(const Cyclotomic& x, char var = 'q');
std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

}  // namespace qcoord

namespace Eigen {

template <>
struct NumTraits<qcoord::Cyclotomic> : GenericNumTraits<qcoord::Cyclotomic> {
  using Real = qcoord::Cyclotomic;
  using NonInteger = qcoord::Cyclotomic;
  using Literal = qcoord::Cyclotomic;
  using Nested = qcoord::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 40,
    MulCost = 200
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace qcoord {

using Mat = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;

}  // namespace qcoord
