#pragma once

// Dense univariate polynomials over Q, ascending coefficients, no trailing zeros.
// Only used as plumbing for exact division, gcds and cyclotomic reduction.

#include <utility>
#include <vector>

#include "qcoord/coeff/rational.hpp"

namespace qcoord::poly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

// a = quot * b + rem, deg rem < deg b.  Throws std::domain_error if b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

// s with s*a = 1 mod m.  Throws std::domain_error when a and m are not coprime.
Poly inverse_mod(const Poly& a, const Poly& m);

}  // namespace qcoord::poly
