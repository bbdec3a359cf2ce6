#include "qcoord/coeff/gauss.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qcoord {

LaurentPoly gauss_int(int n) {
  LaurentPoly r;
  const int m = std::abs(n);
  for (int k = 0; k < m; ++k) r.add_term(m - 1 - 2 * k, n > 0 ? 1 : -1);
  return r;
}

LaurentPoly gauss_factorial(int m) {
  if (m < 0) throw std::invalid_argument("gauss_factorial: negative argument");
  LaurentPoly r(1);
  for (int k = 1; k <= m; ++k) r *= gauss_int(k);
  return r;
}

LaurentPoly gauss_binom(int n, int m) {
  if (m < 0) throw std::invalid_argument("gauss_binom: negative lower index");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
  }
  LaurentPoly num(1), den(1);
  for (int j = 1; j <= m; ++j) {
    num *= LaurentPoly::monomial(n - j + 1) - LaurentPoly::monomial(-n + j - 1);
    den *= LaurentPoly::monomial(j) - LaurentPoly::monomial(-j);
  }
  auto q = divide_exact(num, den);
  if (!q) throw std::logic_error("gauss_binom: inexact division");
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{n, m}, *q).first->second;
}

namespace {

template <class F>
Cyclotomic memo(char tag, int a, int b, int ell, F compute) {
  static std::mutex mutex;
  static std::map<std::tuple<char, int, int, int>, Cyclotomic> cache;
  const auto key = std::tuple{tag, a, b, ell};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Cyclotomic value = specialize(compute(), ell);
  std::lock_guard lock(mutex);
  return cache.emplace(key, value).first->second;
}

}  // namespace

Cyclotomic q_int(int n, int ell) {
  return memo('i', n, 0, ell, [&] { return gauss_int(n); });
}

Cyclotomic q_factorial(int m, int ell) {
  return memo('f', m, 0, ell, [&] { return gauss_factorial(m); });
}

Cyclotomic q_binom(int n, int m, int ell) {
  return memo('b', n, m, ell, [&] { return gauss_binom(n, m); });
}

}  // namespace qcoord
