#include <gtest/gtest.h>

#include <random>

#include "qcoord/coeff/cyclotomic.hpp"
#include "qcoord/coeff/gauss.hpp"
#include "qcoord/coeff/laurent.hpp"
#include "qcoord/coeff/rational_fn.hpp"
#include "qcoord/coeff/text.hpp"

using namespace qcoord;

namespace {

LaurentPoly v(int e) { return LaurentPoly::monomial(e); }

long classical_binom(int n, int m) {
  long r = 1;
  for (int j = 1; j <= m; ++j) r = r * (n - j + 1) / j;
  return r;
}

LaurentPoly random_laurent(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-max_degree / 2, max_degree / 2);
  std::uniform_int_distribution<int> coef(-5, 5);
  LaurentPoly p;
  for (int i = 0; i < 6; ++i) {
    Rational c(coef(rng), 1 + std::abs(coef(rng)));
    c.canonicalize();
    p.add_term(deg(rng), c);
  }
  return p;
}

}  // namespace

TEST(Gauss, IntegerExamples) {
  EXPECT_TRUE(gauss_int(0).is_zero());
  EXPECT_EQ(gauss_int(2), v(1) + v(-1));
  EXPECT_EQ(gauss_int(5).at_one(), 5);
  for (int n = 0; n < 10; ++n) EXPECT_EQ(gauss_int(-n), -gauss_int(n));
  // [n] (v - v^-1) = v^n - v^-n
  for (int n = -6; n < 10; ++n) EXPECT_EQ(gauss_int(n) * (v(1) - v(-1)), v(n) - v(-n));
}

TEST(Gauss, FactorialExamples) {
  EXPECT_EQ(gauss_factorial(0), LaurentPoly(1));
  EXPECT_EQ(gauss_factorial(2), v(1) + v(-1));
  EXPECT_EQ(gauss_factorial(3).at_one(), 6);
}

TEST(Gauss, BinomialExamples) {
  for (int n = -3; n < 8; ++n) EXPECT_EQ(gauss_binom(n, 0), LaurentPoly(1));
  EXPECT_EQ(gauss_binom(4, 2).at_one(), 6);
  EXPECT_EQ(gauss_binom(4, 2), v(4) + v(2) + 2 + v(-2) + v(-4));
  EXPECT_TRUE(specialize(gauss_binom(5, 2), 5).is_zero());
}

TEST(Gauss, BinomialTimesFactorialIsFallingProduct) {
  for (int n = -6; n <= 12; ++n)
    for (int m = 0; m <= 7; ++m) {
      LaurentPoly falling(1);
      for (int j = 1; j <= m; ++j) falling *= gauss_int(n - j + 1);
      EXPECT_EQ(gauss_binom(n, m) * gauss_factorial(m), falling) << n << " " << m;
    }
}

TEST(Gauss, BinomialAgreesWithRationalFunctionProduct) {
  for (int n = -4; n <= 9; ++n)
    for (int m = 0; m <= 5; ++m) {
      RationalFn prod(LaurentPoly(1));
      for (int j = 1; j <= m; ++j)
        prod = prod * RationalFn(v(n - j + 1) - v(-n + j - 1), v(j) - v(-j));
      ASSERT_TRUE(prod.is_laurent());
      EXPECT_EQ(*prod.to_laurent(), gauss_binom(n, m));
    }
}

TEST(Gauss, ClassicalLimit) {
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) EXPECT_EQ(gauss_binom(n, m).at_one(), classical_binom(n, m));
}

TEST(Gauss, VanishingAtRootOfUnity) {
  for (int ell : {3, 5, 7}) {
    for (int i = 1; i < ell; ++i) EXPECT_TRUE(specialize(gauss_binom(ell, i), ell).is_zero());
    EXPECT_FALSE(specialize(gauss_binom(ell, 0), ell).is_zero());
    EXPECT_FALSE(specialize(gauss_binom(ell, ell), ell).is_zero());
    EXPECT_TRUE(specialize(gauss_int(ell), ell).is_zero());
    EXPECT_EQ(q_binom(ell, 1, ell), Cyclotomic(0));
  }
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_poly(1), (std::vector<Rational>{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(3), (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(5), (std::vector<Rational>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (std::vector<Rational>{1, -1, 1}));
  // prod_{d | n} Phi_d = v^n - 1
  for (int n = 1; n <= 30; ++n) {
    LaurentPoly prod(1);
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      LaurentPoly phi;
      const auto& c = cyclotomic_poly(d);
      for (std::size_t i = 0; i < c.size(); ++i) phi.add_term(static_cast<int>(i), c[i]);
      prod *= phi;
    }
    EXPECT_EQ(prod, v(n) - 1);
    EXPECT_EQ(static_cast<int>(cyclotomic_poly(n).size()) - 1, euler_phi(n));
  }
}

TEST(Cyclotomic, SpecializeExamples) {
  EXPECT_TRUE(specialize(v(3), 3).is_one());
  EXPECT_TRUE(specialize(gauss_int(3), 3).is_zero());
  EXPECT_EQ(specialize(LaurentPoly(7), 5), Cyclotomic(7));
  EXPECT_EQ(specialize(v(1), 7), Cyclotomic::q(7));
  for (int ell : {3, 5, 7, 9}) {
    EXPECT_TRUE(Cyclotomic::q(ell).pow(ell).is_one());
    for (int k = 1; k < ell; ++k) EXPECT_FALSE(Cyclotomic::q(ell).pow(k).is_one());
    EXPECT_EQ(static_cast<int>(Cyclotomic::q(ell).coeff_vector(ell).size()), euler_phi(ell));
  }
}

TEST(Cyclotomic, SpecializeIsRingHomomorphism) {
  std::mt19937 rng(11);
  for (int ell : {3, 5, 7}) {
    for (int trial = 0; trial < 60; ++trial) {
      LaurentPoly p = random_laurent(rng, 20), r = random_laurent(rng, 20);
      EXPECT_EQ(specialize(p * r, ell), specialize(p, ell) * specialize(r, ell));
      EXPECT_EQ(specialize(p + r, ell), specialize(p, ell) + specialize(r, ell));
    }
  }
}

TEST(Cyclotomic, Inversion) {
  for (int ell : {3, 5, 7}) {
    EXPECT_TRUE(Cyclotomic(1).inverse().is_one());
    EXPECT_EQ(Cyclotomic::q(ell).inverse(), Cyclotomic::q_pow(ell, ell - 1));
    Cyclotomic x = Cyclotomic::q(ell) - Cyclotomic(1);
    EXPECT_TRUE((x.inverse() * x).is_one());
  }
  EXPECT_THROW(Cyclotomic().inverse(), std::domain_error);
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 200) {
    const int ell = checked % 2 ? 5 : 7;
    Cyclotomic x = specialize(random_laurent(rng, 10), ell);
    if (x.is_zero()) continue;
    EXPECT_TRUE((x * x.inverse()).is_one());
    ++checked;
  }
}

TEST(Cyclotomic, FieldMixing) {
  Cyclotomic x = Cyclotomic::q(3) + Cyclotomic(2);
  EXPECT_EQ(x.ell(), 3);
  EXPECT_THROW(Cyclotomic::q(3) * Cyclotomic::q(5), std::invalid_argument);
  // 1 + q + q^2 = 0 in Q(q), q^3 = 1
  EXPECT_TRUE((Cyclotomic(1) + Cyclotomic::q(3) + Cyclotomic::q_pow(3, 2)).is_zero());
}

TEST(RationalFn, Normalization) {
  RationalFn f(v(2) - 1, v(1) - 1);
  EXPECT_TRUE(f.is_laurent());
  EXPECT_EQ(*f.to_laurent(), v(1) + 1);
  EXPECT_EQ(RationalFn(v(1), v(2)), RationalFn(v(-1)));
  EXPECT_EQ(RationalFn(2 * v(3) + 2, 4 * v(1) + 4), RationalFn(v(3) + 1, 2 * v(1) + 2));
  RationalFn g(LaurentPoly(1), v(1) + 1);
  EXPECT_FALSE(g.is_laurent());
  EXPECT_EQ(g * RationalFn(v(1) + 1), RationalFn(LaurentPoly(1)));
  EXPECT_EQ(g - g, RationalFn());
  EXPECT_THROW(RationalFn(v(1), LaurentPoly()), std::domain_error);
}

TEST(Text, LaurentRendering) {
  EXPECT_EQ(to_string(gauss_int(2)), "v + v^-1");
  EXPECT_EQ(to_string(v(4) + 2 - v(-2)), "v^4 + 2 - v^-2");
  EXPECT_EQ(to_string(LaurentPoly(Rational(3, 2)) * v(1)), "(3/2)*v");
  EXPECT_EQ(to_string(LaurentPoly()), "0");
}

TEST(Text, LaurentParsing) {
  EXPECT_EQ(parse_laurent("v^4 + 2 - v^-2"), v(4) + 2 - v(-2));
  EXPECT_EQ(parse_laurent("-(3/2)*v + 1/2"), LaurentPoly(Rational(-3, 2)) * v(1) + LaurentPoly(Rational(1, 2)));
  EXPECT_EQ(parse_laurent("3 v^2 v"), 3 * v(3));
  EXPECT_EQ(parse_laurent("(v + v^-1)^2"), v(2) + 2 + v(-2));
  EXPECT_THROW(parse_laurent(""), ParseError);
  EXPECT_THROW(parse_laurent("v +"), ParseError);
  EXPECT_THROW(parse_laurent("x"), ParseError);
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_laurent(rng, 12);
    EXPECT_EQ(parse_laurent(to_string(p)), p);
    EXPECT_EQ(laurent_from_json(to_json(p)), p);
  }
}

TEST(Text, CyclotomicJson) {
  Cyclotomic x = specialize(v(2) * Rational(3, 7) - 5, 5);
  EXPECT_EQ(cyclotomic_from_json(to_json(x, 5), 5), x);
  EXPECT_EQ(to_json(Cyclotomic(1), 5).size(), 4u);
  EXPECT_EQ(parse_cyclotomic("q^3", 3), Cyclotomic(1));
}
