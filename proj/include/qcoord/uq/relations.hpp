#pragma once

#include <string>
#include <vector>

#include "qcoord/uq/rep.hpp"

namespace qcoord::uq {

// Checks the defining relations of the divided-power algebra as matrix identities:
//   K Kinv = 1, K E(r) Kinv = q^{2r} E(r), K F(r) Kinv = q^{-2r} F(r),
//   E(r) E(s) = [r+s; r] E(r+s), F(r) F(s) = [r+s; r] F(r+s),
//   E F - F E = (K - Kinv)/(q - q^-1),
//   E(r) F(s) = sum_t F(s-t) [K; 2t-r-s, t] E(r-t).
// Returns a description of every failing relation (empty when all hold).
std::vector<std::string> relation_failures(const Rep& m, int jmax);

}  // namespace qcoord::uq
