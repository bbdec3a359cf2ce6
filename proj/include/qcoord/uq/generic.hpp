#pragma once

// Modules over Q[v, v^-1] with only E, F stored, used as an independent oracle
// for divided powers: E^(j) = E^j / [j]! must be an exact Laurent matrix.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qcoord/coeff/cyclotomic.hpp"
#include "qcoord/coeff/laurent.hpp"

namespace qcoord::uq::generic {

using Eigen::Index;
using Sparse = std::map<std::pair<Index, Index>, LaurentPoly>;

struct GenericRep {
  std::vector<int> weights;
  Sparse e, f;
  Index dim() const { return static_cast<Index>(weights.size()); }
};

GenericRep natural();
GenericRep weyl(int n);
// Delta(E) = E (x) 1 + K (x) E, Delta(F) = F (x) K^-1 + 1 (x) F
GenericRep tensor(const GenericRep& a, const GenericRep& b);
GenericRep tensor_power(int n);

Sparse mul(const Sparse& a, const Sparse& b);
// x^j / [j]!, or nullopt if some entry is not divisible.
std::optional<Sparse> divided_power(const Sparse& x, int j);
Mat specialize(const Sparse& x, Index dim, int ell);

}  // namespace qcoord::uq::generic
