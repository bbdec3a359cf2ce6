#include <gtest/gtest.h>

#include <random>

#include "qcoord/coeff/text.hpp"
#include "qcoord/oq/oq.hpp"
#include "qcoord/qmatrix/qmatrix.hpp"

using namespace qcoord;
using namespace qcoord::qmatrix;

namespace {

QMatElement X(int n, int i, int j) { return QMatElement::generator(n, i, j); }
LaurentPoly v(int e) { return LaurentPoly::monomial(e); }

QMatElement random_element(std::mt19937& rng, int n, int max_degree) {
  const auto monos = xi_monomials(n, max_degree);
  QMatElement x(n);
  const int terms = 1 + static_cast<int>(rng() % 2);
  for (int t = 0; t < terms; ++t)
    x.add_term(monos[rng() % monos.size()], LaurentPoly::monomial(static_cast<int>(rng() % 3) - 1,
                                                                   static_cast<long>(rng() % 5) - 2));
  return x;
}

oq::Element to_oq(const QMatElement& x, int ell) {
  oq::Element out;
  for (const auto& [m, c] : x.terms()) {
    oq::Monomial om{m.at(1, 1), m.at(1, 2), m.at(2, 1), m.at(2, 2)};
    out.add_term(om, specialize(c, ell));
  }
  return out;
}

bool integral(const QMatElement& x) {
  for (const auto& [m, c] : x.terms())
    for (const auto& [e, r] : c.terms())
      if (r.get_den() != 1) return false;
  return true;
}

}  // namespace

TEST(QMatrix, QuotedRelations) {
  // n = 2 determinant
  QMatElement expected = QMatElement::one(2) + v(-1) * multiply(X(2, 1, 2), X(2, 2, 1));
  EXPECT_EQ(multiply(X(2, 2, 2), X(2, 1, 1)), expected);
  EXPECT_EQ(to_string(multiply(X(2, 2, 2), X(2, 1, 1))), "1 + v^-1 X[1,2]*X[2,1]");
  for (int n : {2, 3, 4}) {
    EXPECT_EQ(multiply(X(n, 2, 1), X(n, 1, 1)), v(-1) * reduce_word(n, {0, n}));
    EXPECT_EQ(multiply(X(n, 1, 2), X(n, 1, 1)), v(-1) * reduce_word(n, {0, 1}));
  }
  // X[l,i] X[m,j] - X[m,j] X[l,i] = (v - v^-1) X[l,j] X[m,i] for l < m, i < j
  const int n = 3;
  for (int l = 1; l <= n; ++l)
    for (int m = l + 1; m <= n; ++m)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const QMatElement lhs = multiply(X(n, l, i), X(n, m, j)) - multiply(X(n, m, j), X(n, l, i));
          if (i > j) EXPECT_TRUE(lhs.is_zero());
          if (i < j) EXPECT_EQ(lhs, (v(1) - v(-1)) * multiply(X(n, l, j), X(n, m, i)));
        }
}

TEST(QMatrix, DeterminantN3) {
  const QMatElement d = parse("X[1,1]*X[2,2]*X[3,3]", 3);
  EXPECT_EQ(to_string(d),
            "1 + v X[1,1]*X[2,3]*X[3,2] + v X[1,2]*X[2,1]*X[3,3] - v^2 X[1,2]*X[2,3]*X[3,1] - v^2 "
            "X[1,3]*X[2,1]*X[3,2] + v^3 X[1,3]*X[2,2]*X[3,1]");
  // the defining relation itself reduces to 1
  QMatElement det(3);
  const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  const int lengths[6] = {0, 1, 1, 2, 2, 3};
  for (int p = 0; p < 6; ++p) {
    const QMatElement w = multiply(multiply(X(3, perms[p][0], 1), X(3, perms[p][1], 2)), X(3, perms[p][2], 3));
    det += LaurentPoly::monomial(lengths[p], lengths[p] % 2 ? -1 : 1) * w;
  }
  EXPECT_EQ(det, QMatElement::one(3));
}

TEST(QMatrix, MultiplyBasics) {
  std::mt19937 rng(3);
  for (int k = 0; k < 20; ++k) {
    const QMatElement x = random_element(rng, 3, 3);
    EXPECT_EQ(multiply(QMatElement::one(3), x), reduce(x));
    EXPECT_EQ(multiply(x, QMatElement::one(3)), reduce(x));
    if (!x.is_zero()) EXPECT_LE(multiply(x, x).degree(), 2 * x.degree());
  }
  EXPECT_EQ(multiply(X(2, 1, 2), X(2, 1, 1)), v(-1) * reduce_word(2, {0, 1}));
}

TEST(QMatrix, XiMonomials) {
  EXPECT_EQ(xi_monomials(2, 1).size(), 5u);
  // 15 monomials of degree <= 2 in four letters, minus X[1,1]*X[2,2]
  EXPECT_EQ(xi_monomials(2, 2).size(), 14u);
  const auto one = xi_monomials(3, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], QMonomial::one(3));
  for (const auto& m : xi_monomials(3, 3)) EXPECT_TRUE(m.in_xi());
  // normal forms of Xi monomials are themselves
  for (const auto& m : xi_monomials(3, 3)) EXPECT_EQ(reduce(QMatElement(m, 1)), QMatElement(m, 1));
}

TEST(QMatrix, Idempotence) {
  std::mt19937 rng(11);
  for (int n : {2, 3})
    for (int k = 0; k < 50; ++k) {
      const QMatElement x = random_element(rng, n, 3);
      const QMatElement y = random_element(rng, n, 3);
      const QMatElement p = multiply(x, y);
      EXPECT_EQ(reduce(p), p);
      EXPECT_TRUE(supported_on_xi(p));
    }
}

TEST(QMatrix, Confluence) {
  for (int n : {2, 3}) {
    std::mt19937 rng(7);
    for (int k = 0; k < 300; ++k) {
      const QMatElement x = random_element(rng, n, 3), y = random_element(rng, n, 3), z = random_element(rng, n, 3);
      const QMatElement left = multiply(multiply(x, y), z), right = multiply(x, multiply(y, z));
      ASSERT_EQ(left, right) << n << " " << to_string(x) << " | " << to_string(y) << " | " << to_string(z);
      EXPECT_TRUE(supported_on_xi(left));
    }
  }
}

TEST(QMatrix, Integrality) {
  std::mt19937 rng(5);
  for (int n : {2, 3})
    for (int k = 0; k < 100; ++k) {
      const auto monos = xi_monomials(n, 3);
      const QMatElement x(monos[rng() % monos.size()], 1), y(monos[rng() % monos.size()], 1);
      EXPECT_TRUE(integral(multiply(x, y)));
    }
}

TEST(QMatrix, AgreesWithOq) {
  std::mt19937 rng(17);
  for (int ell : {3, 5})
    for (int k = 0; k < 100; ++k) {
      const QMatElement x = random_element(rng, 2, 3), y = random_element(rng, 2, 3);
      EXPECT_EQ(to_oq(multiply(x, y), ell), oq::multiply(to_oq(x, ell), to_oq(y, ell), ell));
    }
}

TEST(QMatrix, TextAndJson) {
  const QMatElement x = parse("X[2,1]*X[1,1] - v^-1 X[1,1]*X[2,1]", 2);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(to_string(x), "0");
  std::mt19937 rng(23);
  for (int n : {2, 3})
    for (int k = 0; k < 30; ++k) {
      const QMatElement y = multiply(random_element(rng, n, 2), random_element(rng, n, 2));
      EXPECT_EQ(parse(to_string(y), n), y);
      EXPECT_EQ(from_json(to_json(y), n), y);
    }
  EXPECT_THROW(parse("X[3,1]", 2), ParseError);
  EXPECT_THROW(parse("", 2), ParseError);
}
