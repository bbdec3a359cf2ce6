#pragma once

// Weight-lattice combinatorics for sl_n in fundamental-weight coordinates.

#include <compare>
#include <optional>
#include <vector>

namespace qcoord::weights {

struct Weight {
  std::vector<int> coords;  // <lambda, alpha_i^vee>, i = 1..n-1

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  int rank() const { return static_cast<int>(coords.size()); }

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(int k, const Weight& a);
};

// alpha_i + alpha_{i+1} + ... + alpha_j, 0-based, first <= last.
struct PositiveRoot {
  int first = 0;
  int last = 0;
  friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

struct AffineReflection {
  PositiveRoot beta;
  int m = 0;
  int ell = 3;
};

struct LinkageOrbit {
  Weight representative;
  std::vector<Weight> members;  // dominant, sorted by (height, lex)
};

std::vector<PositiveRoot> positive_roots(int rank);
PositiveRoot highest_root(int rank);
Weight root_vector(const PositiveRoot& beta, int rank);
int coroot_pairing(const Weight& w, const PositiveRoot& beta);
Weight rho(int rank);

bool is_dominant(const Weight& w);
// mu - lambda is a nonnegative integer combination of simple roots
bool dominance_leq(const Weight& lambda, const Weight& mu);
// 2 <nu, rho^vee> (an integer), strictly monotone for the dominance order
long height(const Weight& w);
// total order used to list orbit members: height, then lexicographic
bool height_lex_less(const Weight& a, const Weight& b);

Weight reflect(const PositiveRoot& beta, const Weight& w);  // s_beta(w)
Weight dot_reflect(const AffineReflection& r, const Weight& w);
bool in_fundamental_domain(const Weight& w, int ell);
// The unique point of the closed alcove linked to w.
Weight fundamental_representative(const Weight& w, int ell);

// Dominant members nu of the dot orbit of w with <nu + rho, beta^vee> <= bound for all beta.
LinkageOrbit orbit_dominant(const Weight& w, int ell, int bound);
bool linked(const Weight& a, const Weight& b, int ell);

bool is_steinberg_family(const Weight& w, int ell);

// Rank-1 helpers.
std::optional<int> sl2_prime(int n, int ell);
std::vector<int> sl2_sequence(int n, int ell, int count);
inline Weight sl2(int n) { return Weight({n}); }

}  // namespace qcoord::weights
