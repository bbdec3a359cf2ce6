#include "qcoord/uq/relations.hpp"

#include <algorithm>

#include "qcoord/coeff/gauss.hpp"

namespace qcoord::uq {

namespace {

Mat power(const Rep& m, bool raise, int j) {
  if (j == 0) return Mat::Identity(m.dim(), m.dim());
  return raise ? m.e(j) : m.f(j);
}

}  // namespace

std::vector<std::string> relation_failures(const Rep& m, int jmax) {
  std::vector<std::string> bad;
  const int ell = m.ell();
  const Index n = m.dim();
  const Mat k = m.action(GeneratorSymbol::K()), kinv = m.action(GeneratorSymbol::Kinv());
  if (!graded::equal(graded::mul(k, kinv), Mat::Identity(n, n))) bad.push_back("K Kinv = 1");
  for (int r = 1; r <= jmax; ++r) {
    const Cyclotomic up = Cyclotomic::q_pow(ell, 2 * r), down = Cyclotomic::q_pow(ell, -2 * r);
    if (!graded::equal(graded::mul(graded::mul(k, m.e(r)), kinv), up * m.e(r)))
      bad.push_back("K E(" + std::to_string(r) + ") Kinv");
    if (!graded::equal(graded::mul(graded::mul(k, m.f(r)), kinv), down * m.f(r)))
      bad.push_back("K F(" + std::to_string(r) + ") Kinv");
  }
  for (int r = 1; r <= jmax; ++r)
    for (int s = 1; r + s <= jmax; ++s) {
      const Cyclotomic b = q_binom(r + s, r, ell);
      if (!graded::equal(graded::mul(m.e(r), m.e(s)), b * m.e(r + s)))
        bad.push_back("E(" + std::to_string(r) + ")E(" + std::to_string(s) + ")");
      if (!graded::equal(graded::mul(m.f(r), m.f(s)), b * m.f(r + s)))
        bad.push_back("F(" + std::to_string(r) + ")F(" + std::to_string(s) + ")");
    }
  Mat bracket = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) bracket(i, i) = q_int(m.weights()[i], ell);
  if (!graded::equal(Mat(graded::mul(m.e(1), m.f(1)) - graded::mul(m.f(1), m.e(1))), bracket))
    bad.push_back("EF - FE");
  for (int r = 1; r <= jmax; ++r)
    for (int s = 1; s <= jmax; ++s) {
      Mat rhs = Mat::Zero(n, n);
      for (int t = 0; t <= std::min(r, s); ++t) {
        const Mat kb = m.action(GeneratorSymbol::KBinom(2 * t - r - s, t));
        rhs += graded::mul(power(m, false, s - t), graded::mul(kb, power(m, true, r - t)));
      }
      if (!graded::equal(graded::mul(m.e(r), m.f(s)), rhs))
        bad.push_back("E(" + std::to_string(r) + ")F(" + std::to_string(s) + ")");
    }
  return bad;
}

}  // namespace qcoord::uq
