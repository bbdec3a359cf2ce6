#include "qcoord/uq/generic.hpp"

#include "qcoord/coeff/gauss.hpp"

namespace qcoord::uq::generic {

GenericRep natural() {
  GenericRep r;
  r.weights = {1, -1};
  r.e[{0, 1}] = LaurentPoly(1);
  r.f[{1, 0}] = LaurentPoly(1);
  return r;
}

GenericRep weyl(int n) {
  GenericRep r;
  for (int i = 0; i <= n; ++i) r.weights.push_back(-n + 2 * i);
  for (int i = 0; i <= n; ++i) {
    if (i + 1 <= n) r.e[{i + 1, i}] = gauss_binom(i + 1, 1);
    if (i - 1 >= 0) r.f[{i - 1, i}] = gauss_binom(n - i + 1, 1);
  }
  return r;
}

GenericRep tensor(const GenericRep& a, const GenericRep& b) {
  GenericRep r;
  const Index nb = b.dim();
  for (int x : a.weights)
    for (int y : b.weights) r.weights.push_back(x + y);
  for (const auto& [ij, c] : a.e)
    for (Index k = 0; k < nb; ++k) r.e[{ij.first * nb + k, ij.second * nb + k}] += c;
  for (Index i = 0; i < a.dim(); ++i)
    for (const auto& [kl, c] : b.e)
      r.e[{i * nb + kl.first, i * nb + kl.second}] += LaurentPoly::monomial(a.weights[i]) * c;
  for (const auto& [ij, c] : a.f)
    for (Index k = 0; k < nb; ++k)
      r.f[{ij.first * nb + k, ij.second * nb + k}] += c * LaurentPoly::monomial(-b.weights[k]);
  for (Index i = 0; i < a.dim(); ++i)
    for (const auto& [kl, c] : b.f) r.f[{i * nb + kl.first, i * nb + kl.second}] += c;
  return r;
}

GenericRep tensor_power(int n) {
  GenericRep r;
  r.weights = {0};
  for (int k = 0; k < n; ++k) r = tensor(r, natural());
  return r;
}

Sparse mul(const Sparse& a, const Sparse& b) {
  std::map<Index, std::vector<std::pair<Index, const LaurentPoly*>>> rows_b;
  for (const auto& [kl, c] : b) rows_b[kl.first].emplace_back(kl.second, &c);
  Sparse r;
  for (const auto& [ij, c] : a) {
    auto it = rows_b.find(ij.second);
    if (it == rows_b.end()) continue;
    for (const auto& [l, d] : it->second) r[{ij.first, l}] += c * *d;
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

std::optional<Sparse> divided_power(const Sparse& x, int j) {
  Sparse p;
  if (j == 0) return p;
  p = x;
  for (int k = 1; k < j; ++k) p = mul(p, x);
  const LaurentPoly d = gauss_factorial(j);
  for (auto& [ij, c] : p) {
    auto q = divide_exact(c, d);
    if (!q) return std::nullopt;
    c = *q;
  }
  return p;
}

Mat specialize(const Sparse& x, Index dim, int ell) {
  Mat m = Mat::Zero(dim, dim);
  for (const auto& [ij, c] : x) m(ij.first, ij.second) = qcoord::specialize(c, ell);
  return m;
}

}  // namespace qcoord::uq::generic
