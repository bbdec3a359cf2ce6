#include "qcoord/weights.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace qcoord::weights {

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (int i = 0; i < a.rank(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (int i = 0; i < a.rank(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator*(int k, const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::vector<PositiveRoot> positive_roots(int rank) {
  std::vector<PositiveRoot> out;
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) out.push_back({i, j});
  return out;
}

PositiveRoot highest_root(int rank) { return {0, rank - 1}; }

Weight root_vector(const PositiveRoot& beta, int rank) {
  // alpha_k = sum_j a_{jk} omega_j with the A_{n-1} Cartan matrix
  Weight r(std::vector<int>(rank, 0));
  for (int k = beta.first; k <= beta.last; ++k) {
    r.coords[k] += 2;
    if (k > 0) r.coords[k - 1] -= 1;
    if (k + 1 < rank) r.coords[k + 1] -= 1;
  }
  return r;
}

int coroot_pairing(const Weight& w, const PositiveRoot& beta) {
  int s = 0;
  for (int k = beta.first; k <= beta.last; ++k) s += w.coords[k];
  return s;
}

Weight rho(int rank) { return Weight(std::vector<int>(rank, 1)); }

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
}

bool dominance_leq(const Weight& lambda, const Weight& mu) {
  // Solve diff = sum c_k alpha_k: for A_{n-1} the inverse Cartan matrix is
  // (A^-1)_{ij} = min(i,j) (n - max(i,j)) / n  (1-based).
  const int r = lambda.rank();
  const int n = r + 1;
  Weight diff = mu - lambda;
  for (int i = 1; i <= r; ++i) {
    long num = 0;
    for (int j = 1; j <= r; ++j) num += static_cast<long>(std::min(i, j)) * (n - std::max(i, j)) * diff.coords[j - 1];
    if (num % n != 0 || num < 0) return false;
  }
  return true;
}

long height(const Weight& w) {
  const int n = w.rank() + 1;
  long h = 0;
  for (int i = 1; i <= w.rank(); ++i) h += static_cast<long>(i) * (n - i) * w.coords[i - 1];
  return h;
}

bool height_lex_less(const Weight& a, const Weight& b) {
  const long ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a.coords < b.coords;
}

Weight reflect(const PositiveRoot& beta, const Weight& w) {
  return w - coroot_pairing(w, beta) * root_vector(beta, w.rank());
}

Weight dot_reflect(const AffineReflection& r, const Weight& w) {
  const Weight p = rho(w.rank());
  return reflect(r.beta, w + p) - p + (r.m * r.ell) * root_vector(r.beta, w.rank());
}

bool in_fundamental_domain(const Weight& w, int ell) {
  const Weight shifted = w + rho(w.rank());
  for (const auto& beta : positive_roots(w.rank())) {
    const int x = coroot_pairing(shifted, beta);
    if (x < 0 || x > ell) return false;
  }
  return true;
}

Weight fundamental_representative(const Weight& w, int ell) {
  Weight cur = w;
  const int r = w.rank();
  const Weight p = rho(r);
  for (int guard = 0; guard < 100000; ++guard) {
    bool moved = false;
    for (int i = 0; i < r; ++i) {
      if (coroot_pairing(cur + p, {i, i}) < 0) {
        cur = dot_reflect({{i, i}, 0, ell}, cur);
        moved = true;
      }
    }
    const PositiveRoot theta = highest_root(r);
    if (coroot_pairing(cur + p, theta) > ell) {
      cur = dot_reflect({theta, 1, ell}, cur);
      moved = true;
    }
    if (!moved) return cur;
  }
  throw std::logic_error("fundamental_representative: no convergence");
}

bool linked(const Weight& a, const Weight& b, int ell) {
  return fundamental_representative(a, ell) == fundamental_representative(b, ell);
}

LinkageOrbit orbit_dominant(const Weight& w, int ell, int bound) {
  const int r = w.rank();
  const Weight p = rho(r);
  const auto roots = positive_roots(r);
  const int box = bound + 2 * ell + 2;
  auto inside = [&](const Weight& x) {
    const Weight s = x + p;
    for (const auto& beta : roots)
      if (std::abs(coroot_pairing(s, beta)) > box) return false;
    return true;
  };
  const int mmax = box / ell + 2;
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const auto& beta : roots)
      for (int m = -mmax; m <= mmax; ++m) {
        Weight next = dot_reflect({beta, m, ell}, cur);
        if (!inside(next) || seen.count(next)) continue;
        seen.insert(next);
        queue.push_back(next);
      }
  }
  LinkageOrbit orbit;
  orbit.representative = w;
  for (const auto& x : seen) {
    if (!is_dominant(x)) continue;
    bool ok = true;
    for (const auto& beta : roots)
      if (coroot_pairing(x + p, beta) > bound) ok = false;
    if (ok) orbit.members.push_back(x);
  }
  std::sort(orbit.members.begin(), orbit.members.end(), height_lex_less);
  return orbit;
}

bool is_steinberg_family(const Weight& w, int ell) {
  return std::all_of(w.coords.begin(), w.coords.end(),
                     [ell](int c) { return c >= ell - 1 && (c - (ell - 1)) % ell == 0; });
}

std::optional<int> sl2_prime(int n, int ell) {
  if (n < 0) return std::nullopt;
  const int n0 = n % ell, n1 = n / ell;
  if (n1 == 0 || n0 == ell - 1) return std::nullopt;
  return (ell - 2 - n0) + ell * (n1 - 1);
}

std::vector<int> sl2_sequence(int n, int ell, int count) {
  if (n < 0 || ((n + 1) % ell) == 0) throw std::invalid_argument("sl2_sequence: n must not be -1 mod ell");
  if (n > ell - 2) throw std::invalid_argument("sl2_sequence: start must lie in 0..ell-2");
  const int bound = (count + 2) * ell;
  auto orbit = orbit_dominant(sl2(n), ell, bound + 1);
  std::vector<int> out;
  for (const auto& x : orbit.members) {
    if (static_cast<int>(out.size()) == count) break;
    const int m = x.coords[0];
    if (!out.empty() && sl2_prime(m, ell) != out.back())
      throw std::logic_error("sl2_sequence: orbit does not form a sequence");
    out.push_back(m);
  }
  return out;
}

}  // namespace qcoord::weights
