#pragma once

// Hopf structure of U_q(sl2) on divided powers, derived at generic v.
//
// Coproducts come from expanding (x + y)^r in q-commuting variables:
//   E: x = E (x) 1, y = K (x) E, y x = v^2 x y,  x^a y^b = E^a K^b (x) E^b
//   F: x = F (x) K^-1, y = 1 (x) F, y x = v^-2 x y,  x^a y^b = F^a (x) K^-a F^b
// and dividing by [r]! (exactness asserted).  Antipodes come from normal-ordering
// the words S(E)^r, S(F)^r with KE = v^2 EK, KF = v^-2 FK.

#include <vector>

#include "qcoord/coeff/laurent.hpp"
#include "qcoord/uq/generator.hpp"

namespace qcoord::uq {

// alpha[t]: Delta(E^(r)) = sum_t alpha[t] E^(r-t) K^t (x) E^(t)
const std::vector<LaurentPoly>& coproduct_e(int r);
// beta[t]: Delta(F^(r)) = sum_t beta[t] F^(r-t) (x) K^-(r-t) F^(t)
const std::vector<LaurentPoly>& coproduct_f(int r);

// coeff * K^k_left * X^(r) * K^k_right
struct CartanForm {
  LaurentPoly coeff;
  int k_left = 0;
  int k_right = 0;
};

CartanForm antipode_e(int r);          // S(E^(r))
CartanForm antipode_f(int r);          // S(F^(r))
CartanForm inverse_antipode_e(int r);  // S^-1(E^(r))
CartanForm inverse_antipode_f(int r);  // S^-1(F^(r))

// Antipode and its inverse on algebra elements (anti-multiplicative, specialized at ell).
// On the Cartan part S(K) = Kinv and S([K; c, t]) = (-1)^t [K; t-1-c, t].
AlgebraElement antipode(const AlgebraElement& u, int ell);
AlgebraElement inverse_antipode(const AlgebraElement& u, int ell);

}  // namespace qcoord::uq
