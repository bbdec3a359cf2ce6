#include <gtest/gtest.h>

#include "qcoord/coeff/gauss.hpp"
#include "qcoord/uq/generic.hpp"
#include "qcoord/uq/hopf.hpp"
#include "qcoord/uq/modules.hpp"
#include "qcoord/uq/relations.hpp"
#include "qcoord/weights.hpp"

using namespace qcoord;
using namespace qcoord::uq;

namespace {

Rep tensor_power(int n, int ell) {
  Rep r = trivial_module(ell);
  for (int k = 0; k < n; ++k) r = tensor(r, natural_module(ell));
  return r;
}

LaurentPoly z(int e) { return LaurentPoly::monomial(e); }

bool mixed(int n, int ell) { return weights::sl2_prime(n, ell).has_value(); }

}  // namespace

TEST(Modules, WeylSmallCases) {
  const Rep v0 = weyl_formula(0, 3);
  EXPECT_EQ(v0.dim(), 1);
  EXPECT_TRUE(graded::is_zero(v0.e(1)));
  EXPECT_TRUE(graded::is_zero(v0.f(3)));
  const Rep v1 = weyl_formula(1, 3);
  EXPECT_EQ(v1.weights(), (std::vector<int>{-1, 1}));
  EXPECT_TRUE(v1.e(1)(1, 0).is_one());
  EXPECT_TRUE(v1.f(1)(0, 1).is_one());
  const Rep h1 = dual_weyl_formula(1, 3);
  EXPECT_EQ(h1.weights(), (std::vector<int>{1, -1}));
  EXPECT_TRUE(h1.e(1)(0, 1).is_one());
}

TEST(Modules, WeylDividedSquareMatchesFormula) {
  const Rep v = weyl_formula(4, 3);
  EXPECT_TRUE(v.e(2)(2, 0).is_one());
  const Mat sq = graded::mul(v.e(1), v.e(1));
  EXPECT_TRUE(graded::equal(sq, q_int(2, 3) * v.e(2)));
}

TEST(Modules, GenericOracleAgreesOnWeylFormulas) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 2 * ell; ++n) {
      const auto g = generic::weyl(n);
      const Rep v = weyl_formula(n, ell);
      for (int j = 1; j <= n; ++j) {
        auto e = generic::divided_power(g.e, j);
        auto f = generic::divided_power(g.f, j);
        ASSERT_TRUE(e && f);
        EXPECT_TRUE(graded::equal(generic::specialize(*e, g.dim(), ell), v.e(j))) << n << " " << j;
        EXPECT_TRUE(graded::equal(generic::specialize(*f, g.dim(), ell), v.f(j))) << n << " " << j;
      }
    }
}

TEST(Modules, TensorPowersMatchGenericOracle) {
  for (int ell : {3, 5})
    for (int n = 1; n <= 6; ++n) {
      const Rep r = tensor_power(n, ell);
      const auto g = generic::tensor_power(n);
      ASSERT_EQ(r.weights(), g.weights);
      for (int j = 1; j <= n; ++j) {
        auto e = generic::divided_power(g.e, j);
        auto f = generic::divided_power(g.f, j);
        ASSERT_TRUE(e && f) << "inexact division at n=" << n << " j=" << j;
        EXPECT_TRUE(graded::equal(generic::specialize(*e, g.dim(), ell), r.e(j)));
        EXPECT_TRUE(graded::equal(generic::specialize(*f, g.dim(), ell), r.f(j)));
      }
    }
}

TEST(Modules, WeylTensorMatchesGenericOracle) {
  const int ell = 3;
  const Rep r = tensor(weyl_formula(2, ell), weyl_formula(4, ell));
  const auto g = generic::tensor(generic::weyl(2), generic::weyl(4));
  for (int j = 1; j <= 6; ++j) {
    auto e = generic::divided_power(g.e, j);
    auto f = generic::divided_power(g.f, j);
    ASSERT_TRUE(e && f);
    EXPECT_TRUE(graded::equal(generic::specialize(*e, g.dim(), ell), r.e(j)));
    EXPECT_TRUE(graded::equal(generic::specialize(*f, g.dim(), ell), r.f(j)));
  }
}

TEST(Modules, DividedCubeSurvivesAtThree) {
  const Rep r = tensor_power(4, 3);
  EXPECT_FALSE(graded::is_zero(r.e(3)));
  EXPECT_TRUE(graded::is_zero(graded::mul(r.e(1), graded::mul(r.e(1), r.e(1)))));
}

TEST(Modules, CoproductAndAntipodeLowDegree) {
  EXPECT_EQ(coproduct_e(1), (std::vector<LaurentPoly>{LaurentPoly(1), LaurentPoly(1)}));
  EXPECT_EQ(coproduct_f(1), (std::vector<LaurentPoly>{LaurentPoly(1), LaurentPoly(1)}));
  // S(E) = -K^-1 E, S(F) = -F K; squares normal-ordered by hand.
  auto se = antipode_e(1);
  EXPECT_EQ(se.coeff, LaurentPoly(-1));
  EXPECT_EQ(se.k_left, -1);
  EXPECT_EQ(se.k_right, 0);
  auto sf = antipode_f(1);
  EXPECT_EQ(sf.coeff, LaurentPoly(-1));
  EXPECT_EQ(sf.k_left, 0);
  EXPECT_EQ(sf.k_right, 1);
  auto se2 = antipode_e(2);
  EXPECT_EQ(se2.coeff, z(2));
  EXPECT_EQ(se2.k_left, -2);
  auto sf2 = antipode_f(2);
  EXPECT_EQ(sf2.coeff, z(-2));
  EXPECT_EQ(sf2.k_right, 2);
}

TEST(Modules, AntipodeInverseOnModules) {
  // S^-1 S acts as the identity on every divided power.
  const Rep m = tensor_power(3, 5);
  for (int r = 1; r <= 3; ++r)
    for (bool raise : {true, false}) {
      const auto s = raise ? antipode_e(r) : antipode_f(r);
      const auto t = raise ? inverse_antipode_e(r) : inverse_antipode_f(r);
      // S^-1(c K^a X K^b) = S^-1(K^b) S^-1(X) S^-1(K^a) c = c K^-b (c' K^a' X K^b') K^-a
      const Cyclotomic c = specialize(s.coeff * t.coeff, 5);
      const Mat x = raise ? m.e(r) : m.f(r);
      const Mat lhs = c * graded::mul(m.k_power(-s.k_right + t.k_left), graded::mul(x, m.k_power(t.k_right - s.k_left)));
      EXPECT_TRUE(graded::equal(lhs, x)) << r << raise;
    }
}

TEST(Modules, Characters) {
  EXPECT_EQ(character(natural_module(3)), z(1) + z(-1));
  const Rep n = natural_module(3);
  EXPECT_EQ(character(tensor(n, n)), character(n) * character(n));
  EXPECT_EQ(character(tensor(n, n)), weyl_character(2) + weyl_character(0));
  EXPECT_EQ(character(tilting_module(4, 3)), weyl_character(4) + weyl_character(0));
}

TEST(Modules, TensorWithTrivialIsIsomorphic) {
  const Rep& v = weyl_module(4, 3);
  EXPECT_TRUE(isomorphic(tensor(trivial_module(3), v), v));
  EXPECT_TRUE(isomorphic(tensor(v, trivial_module(3)), v));
}

TEST(Modules, Duals) {
  EXPECT_TRUE(isomorphic(dual(trivial_module(3)), trivial_module(3)));
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(isomorphic(dual(weyl_module(n, 3)), dual_weyl_formula(n, 3))) << n;
  const Rep& v4 = weyl_module(4, 3);
  EXPECT_TRUE(isomorphic(dual(dual(v4)), v4));
  // generic range: V_n irreducible
  EXPECT_TRUE(isomorphic(weyl_formula(3, 5), dual_weyl_formula(3, 5)));
  EXPECT_FALSE(isomorphic(weyl_formula(4, 3), dual_weyl_formula(4, 3)));
}

TEST(Modules, HomWeylToDualWeyl) {
  for (int ell : {3, 5})
    for (int m = 0; m <= 2 * ell; ++m)
      for (int k = 0; k <= 2 * ell; ++k)
        EXPECT_EQ(hom_space(weyl_module(m, ell), dual_weyl_module(k, ell)).size(), m == k ? 1u : 0u) << m << k;
}

TEST(Modules, HomSpacesAreIntertwiners) {
  const Rep& t = tilting_module(4, 3);
  const Rep m = tensor(t, natural_module(3));
  for (const auto& h : hom_space(m, m)) EXPECT_TRUE(is_module_map(m, m, h));
  EXPECT_EQ(hom_space(trivial_module(3), trivial_module(3)).size(), 1u);
}

TEST(Modules, WeylEndomorphismsAreScalars) {
  // V_4 at l = 3 has head L_4 and socle L_0, so no nilpotent endomorphism exists.
  EXPECT_EQ(hom_space(weyl_module(4, 3), weyl_module(4, 3)).size(), 1u);
}

TEST(Modules, SimpleDimensions) {
  EXPECT_EQ(simple_module(0, 3).dim(), 1);
  EXPECT_EQ(simple_module(2, 3).dim(), 3);
  EXPECT_EQ(simple_module(4, 3).dim(), 4);
  EXPECT_EQ(simple_module(6, 3).dim(), 3);
  for (int ell : {3, 5})
    for (int n = 0; n <= 3 * ell; ++n) {
      // L_n = L_{n0} (x) (classical V_{n1})^[Frobenius]
      const int n0 = n % ell, n1 = n / ell;
      EXPECT_EQ(simple_module(n, ell).dim(), (n0 + 1) * (n1 + 1)) << n;
    }
}

TEST(Modules, GeneratedSubmodules) {
  const Rep& v = weyl_module(4, 3);
  Mat top = Mat::Zero(v.dim(), 1);
  top(4, 0) = 1;
  EXPECT_EQ(generated_subspace(v, top).dim(), 5);
  const auto soc = socle_subspace(v);
  EXPECT_EQ(submodule_generated(v, soc.basis).dim(), 1);
  EXPECT_EQ(generated_subspace(v, Mat::Zero(v.dim(), 1)).dim(), 0);
}

TEST(Modules, SocleRadical) {
  EXPECT_TRUE(isomorphic(socle(weyl_module(4, 3)), simple_module(0, 3)));
  EXPECT_TRUE(isomorphic(head(weyl_module(4, 3)), simple_module(4, 3)));
  const Rep& l = simple_module(4, 3);
  EXPECT_EQ(socle(l).dim(), l.dim());
  EXPECT_EQ(radical(l).dim(), 0);
}

TEST(Modules, TiltingFourLayers) {
  const Rep& t = tilting_module(4, 3);
  EXPECT_EQ(radical(t).dim(), 5);
  const auto s = loewy_series(t);
  ASSERT_EQ(s.radical_layers.size(), 3u);
  EXPECT_EQ(s.radical_layers[0].composition, (std::map<int, int>{{0, 1}}));
  EXPECT_EQ(s.radical_layers[1].composition, (std::map<int, int>{{4, 1}}));
  EXPECT_EQ(s.radical_layers[2].composition, (std::map<int, int>{{0, 1}}));
  EXPECT_TRUE(s.rigid);
  EXPECT_TRUE(isomorphic(socle(t), simple_module(0, 3)));
}

TEST(Modules, Peeling) {
  const Rep n5 = natural_module(5);
  auto p = peel_summand(tensor(n5, n5), weyl_module(2, 5));
  ASSERT_TRUE(p.found);
  EXPECT_TRUE(isomorphic(p.complement, trivial_module(5)));
  const Rep n3 = natural_module(3);
  auto p3 = peel_summand(tensor(n3, n3), trivial_module(3));
  ASSERT_TRUE(p3.found);
  EXPECT_TRUE(isomorphic(p3.complement, weyl_module(2, 3)));
  const Rep& t = tilting_module(4, 3);
  auto self = peel_summand(t, t);
  ASSERT_TRUE(self.found);
  EXPECT_EQ(self.complement.dim(), 0);
  // T_4 is indecomposable: neither V_4 nor L_0 splits off
  EXPECT_FALSE(peel_summand(t, weyl_module(4, 3)).found);
  EXPECT_FALSE(peel_summand(t, trivial_module(3)).found);
}

TEST(Modules, TiltingSmallCases) {
  EXPECT_EQ(tilting_module(2, 3).dim(), 3);
  EXPECT_EQ(tilting_module(3, 3).dim(), 6);
  EXPECT_EQ(character(tilting_module(3, 3)), weyl_character(3) + weyl_character(1));
  EXPECT_EQ(tilting_module(4, 3).dim(), 6);
  EXPECT_EQ(tilting_module(6, 3).dim(), 12);
}

// Properties over the whole tested range.

TEST(ModuleProperties, RelationSuite) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 3 * ell; ++n)
      for (const Rep* r : {&weyl_module(n, ell), &dual_weyl_module(n, ell), &simple_module(n, ell), &tilting_module(n, ell)})
        EXPECT_TRUE(relation_failures(*r, 2 * ell).empty()) << r->label() << " l=" << ell;
}

TEST(ModuleProperties, CompositionSeries) {
  for (int ell : {3, 5, 7})
    for (int n = 0; n <= 3 * ell; ++n) {
      const Rep& v = weyl_module(n, ell);
      if (auto p = weights::sl2_prime(n, ell)) {
        EXPECT_TRUE(isomorphic(socle(v), simple_module(*p, ell))) << n;
        EXPECT_TRUE(isomorphic(head(v), simple_module(n, ell))) << n;
        EXPECT_EQ(simple_module(*p, ell).dim() + simple_module(n, ell).dim(), v.dim());
      }
      if ((n + 1) % ell == 0) EXPECT_EQ(radical(v).dim(), 0) << n;
    }
}

TEST(ModuleProperties, TiltingCharactersAndSelfDuality) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 3 * ell; ++n) {
      const Rep& t = tilting_module(n, ell);
      LaurentPoly expected = weyl_character(n);
      if (auto p = weights::sl2_prime(n, ell)) expected += weyl_character(*p);
      EXPECT_EQ(character(t), expected) << n;
      EXPECT_TRUE(isomorphic(dual(t), t)) << n;
      if (mixed(n, ell)) EXPECT_FALSE(peel_summand(t, weyl_module(n, ell)).found) << n;
    }
}

TEST(ModuleProperties, LinkageSeparatesTiltings) {
  for (int ell : {3, 5})
    for (int a = 0; a <= 2 * ell; ++a)
      for (int b = 0; b <= 2 * ell; ++b)
        if (!weights::linked(weights::Weight{{a}}, weights::Weight{{b}}, ell))
          EXPECT_TRUE(hom_space(tilting_module(a, ell), tilting_module(b, ell)).empty()) << a << " " << b;
}
