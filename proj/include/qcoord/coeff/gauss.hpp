#pragma once

#include "qcoord/coeff/cyclotomic.hpp"
#include "qcoord/coeff/laurent.hpp"

namespace qcoord {

// [n] = (v^n - v^-n) / (v - v^-1)
LaurentPoly gauss_int(int n);
// [m]! = [m][m-1]...[1]
LaurentPoly gauss_factorial(int m);
// prod_{j=1}^m (v^{n-j+1} - v^{-n+j-1}) / (v^j - v^{-j}); throws std::logic_error on inexact division.
LaurentPoly gauss_binom(int n, int m);

// Specialized values at q (memoized).
Cyclotomic q_int(int n, int ell);
Cyclotomic q_factorial(int m, int ell);
Cyclotomic q_binom(int n, int m, int ell);

}  // namespace qcoord
