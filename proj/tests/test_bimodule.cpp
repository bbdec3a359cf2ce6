#include <gtest/gtest.h>

#include "qcoord/bimodule/bimodule.hpp"
#include "qcoord/coeff/gauss.hpp"
#include "qcoord/linalg/exact.hpp"
#include "qcoord/uq/modules.hpp"

using namespace qcoord;
using namespace qcoord::bimodule;

namespace {

using Layers = std::vector<std::map<Label, int>>;

Layers compositions(const std::vector<BiLayer>& layers) {
  Layers out;
  for (const auto& l : layers) out.push_back(l.composition);
  return out;
}

std::vector<Index> dims(const std::vector<BiLayer>& layers) {
  std::vector<Index> out;
  for (const auto& l : layers) out.push_back(l.dim);
  return out;
}

bool linked(int a, int b, int ell) {
  const int m = 2 * ell;
  const int x = ((a + 1) % m + m) % m, y = ((b + 1) % m + m) % m;
  return x == y || (x + y) % m == 0;
}

BiRep mc(int n, int ell) { return matrix_coefficient_bimodule(uq::tilting_module(n, ell)); }

}  // namespace

TEST(Bimodule, TableActionsAgreeWithRho) {
  const int ell = 3;
  const BiRep m = mc(4, ell);
  const auto xs = m.elements();
  for (int s = 0; s < kSlots; ++s) {
    const uq::AlgebraElement g(s == E1 ? uq::GeneratorSymbol::E(1)
                               : s == F1 ? uq::GeneratorSymbol::F(1)
                               : s == El ? uq::GeneratorSymbol::E(ell)
                                         : uq::GeneratorSymbol::F(ell));
    for (Index c = 0; c < m.dim(); ++c) {
      oq::Element l, r;
      for (Index k = 0; k < m.dim(); ++k) {
        if (!m.left[s](k, c).is_zero()) l += m.left[s](k, c) * xs[k];
        if (!m.right[s](k, c).is_zero()) r += m.right[s](k, c) * xs[k];
      }
      EXPECT_EQ(l, oq::rho1(g, xs[c], ell));
      EXPECT_EQ(r, oq::rho2(g, xs[c], ell));
    }
  }
  EXPECT_EQ(from_subspace(oq::matrix_coeffs(uq::tilting_module(4, ell)), ell).dim(), 26);
}

TEST(Bimodule, ActionsCommute) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 2 * ell; ++n) EXPECT_TRUE(actions_commute(mc(n, ell))) << ell << " " << n;
  EXPECT_TRUE(actions_commute(to_birep({uq::weyl_module(4, 3), uq::dual_weyl_module(3, 3)})));
}

TEST(Bimodule, ExternalTensor) {
  const ExternalTensor t{uq::weyl_module(4, 3), uq::simple_module(4, 3)};
  const BiRep b = to_birep(t);
  EXPECT_EQ(b.dim(), t.dim());
  EXPECT_EQ(b.dim(), 5 * 4);
  // V_4 (x) L_4 has head L_4 (x) L_4 and socle L_0 (x) L_4
  const auto l = loewy_bi(b);
  EXPECT_EQ(compositions(l.radical_layers), (Layers{{{{4, 4}, 1}}, {{{0, 4}, 1}}}));
  EXPECT_TRUE(l.rigid);
  EXPECT_TRUE(l.indecomposable);
}

TEST(Bimodule, QuotientTrivialCases) {
  const BiRep m = mc(4, 3);
  const BiRep whole = quotient_birep(m, graded::zero_subspace(m.layout()));
  EXPECT_TRUE(find_isomorphism(whole, m).certified);
  EXPECT_EQ(quotient(m, m).dim(), 0);
  EXPECT_TRUE(find_isomorphism(quotient(m, m), quotient(m, m)).certified);
  const BiRep p1 = mc(5, 3);
  EXPECT_THROW(quotient(m, p1), std::invalid_argument);
}

TEST(Bimodule, BuildPDims) {
  auto ps = build_P(0, 1, 3);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].dim(), 1);
  ps = build_P(0, 2, 3);
  EXPECT_EQ(ps[1].dim(), 26);
  EXPECT_EQ(quotient(ps[1], ps[0]).dim(), 25);
  // frozen from the computation
  const std::map<std::pair<int, int>, std::vector<Index>> expected = {
      {{3, 0}, {1, 26, 75}},  {{3, 1}, {4, 20, 84}},  {{5, 0}, {1, 82, 203}},
      {{5, 1}, {4, 68, 212}}, {{5, 2}, {9, 58, 227}}, {{5, 3}, {16, 52, 248}}};
  for (const auto& [key, d] : expected) {
    const auto p = build_P(key.second, 3, key.first);
    std::vector<Index> got;
    for (const auto& x : p) got.push_back(x.dim());
    EXPECT_EQ(got, d) << key.first << " " << key.second;
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_EQ(subspace_of(p[i], p[i - 1]).dim(), p[i - 1].dim());
  }
  EXPECT_THROW(build_P(2, 1, 3), std::invalid_argument);
}

TEST(Bimodule, FiltrationQuotients) {
  for (int ell : {3, 5})
    for (int n = 0; n <= ell - 2; ++n)
      for (const auto& c : filtration_quotients(n, 3, ell)) EXPECT_TRUE(c.certified) << ell << " " << n << " " << c.i;
}

TEST(Bimodule, IsoCertificateIsIntertwiner) {
  const auto ps = build_P(0, 2, 3);
  const BiRep q = quotient(ps[1], ps[0]);
  const ExternalTensor t{uq::dual_weyl_module(4, 3), uq::dual_weyl_module(4, 3)};
  const auto cert = iso_to_external(q, t);
  ASSERT_TRUE(cert.certified);
  EXPECT_TRUE(is_bimodule_map(q, to_birep(t), cert.map));
  EXPECT_EQ(linalg::rank(cert.map), q.dim());
  // not isomorphic to the Weyl version
  EXPECT_FALSE(iso_to_external(q, {uq::weyl_module(4, 3), uq::weyl_module(4, 3)}).certified);
  // P^1 for n = 1 is irreducible
  const auto p = build_P(1, 1, 3);
  EXPECT_TRUE(iso_to_external(p[0], {uq::dual_weyl_module(1, 3), uq::dual_weyl_module(1, 3)}).certified);
}

TEST(Bimodule, LoewyOfTn2) {
  const auto l = loewy_bi(mc(4, 3));
  const Layers expected = {{{{0, 0}, 1}}, {{{4, 0}, 1}, {{0, 4}, 1}}, {{{0, 0}, 1}, {{4, 4}, 1}}};
  EXPECT_EQ(compositions(l.radical_layers), expected);
  EXPECT_EQ(compositions(l.socle_layers), expected);
  EXPECT_EQ(dims(l.radical_layers), (std::vector<Index>{1, 8, 17}));
  EXPECT_TRUE(l.rigid);
  EXPECT_TRUE(l.indecomposable);
}

TEST(Bimodule, LoewyOfTn3) {
  const auto l = loewy_bi(mc(6, 3));
  const Layers expected = {{{{4, 4}, 1}},
                           {{{4, 0}, 1}, {{0, 4}, 1}, {{6, 4}, 1}, {{4, 6}, 1}},
                           {{{0, 0}, 1}, {{4, 4}, 1}, {{6, 6}, 1}}};
  EXPECT_EQ(compositions(l.radical_layers), expected);
  EXPECT_EQ(compositions(l.socle_layers), expected);
  EXPECT_EQ(dims(l.radical_layers), (std::vector<Index>{16, 32, 26}));
  EXPECT_TRUE(l.rigid);
  EXPECT_TRUE(l.indecomposable);
}

TEST(Bimodule, SimpleBlock) {
  const auto l = loewy_bi(matrix_coefficient_bimodule(uq::simple_module(2, 3)));
  EXPECT_EQ(compositions(l.radical_layers), (Layers{{{{2, 2}, 1}}}));
  EXPECT_TRUE(l.indecomposable);
}

TEST(Bimodule, WeylAndDualWeylBlocks) {
  const int ell = 3;
  const auto lv = loewy_bi(matrix_coefficient_bimodule(uq::weyl_module(4, ell)));
  EXPECT_EQ(compositions(lv.radical_layers), (Layers{{{{4, 0}, 1}}, {{{0, 0}, 1}, {{4, 4}, 1}}}));
  const auto lh = loewy_bi(matrix_coefficient_bimodule(uq::dual_weyl_module(4, ell)));
  EXPECT_EQ(compositions(lh.radical_layers), (Layers{{{{0, 4}, 1}}, {{{0, 0}, 1}, {{4, 4}, 1}}}));
}

TEST(Bimodule, IntersectionIdentity) {
  const int ell = 3;
  const auto m4 = oq::matrix_coeffs(uq::tilting_module(4, ell));
  const auto m6 = oq::matrix_coeffs(uq::tilting_module(6, ell));
  const auto v = oq::sum(oq::matrix_coeffs(uq::weyl_module(4, ell)), oq::matrix_coeffs(uq::dual_weyl_module(4, ell)));
  const auto both = oq::intersect(m4, m6);
  EXPECT_EQ(both.dim(), 25);
  EXPECT_TRUE(oq::same_span(both, v));
}

TEST(Bimodule, QuotientsByWeylSums) {
  const int ell = 3;
  // M(T_{n3}) / (M(V_{n3}) + M(V_{n3}^*)) = V_{n2} (x) V_{n2}
  const BiRep t6 = mc(6, ell);
  const BiRep v6 = matrix_coefficient_bimodule({&uq::weyl_module(6, ell), &uq::dual_weyl_module(6, ell)});
  EXPECT_TRUE(iso_to_external(quotient(t6, v6), {uq::weyl_module(4, ell), uq::weyl_module(4, ell)}).certified);
  // M(T_{n3}) / (M(T_{n2}) & M(T_{n3})) = V_{n3}^* (x) V_{n3}^*
  const BiRep v4 = matrix_coefficient_bimodule({&uq::weyl_module(4, ell), &uq::dual_weyl_module(4, ell)});
  EXPECT_TRUE(
      iso_to_external(quotient(t6, v4), {uq::dual_weyl_module(6, ell), uq::dual_weyl_module(6, ell)}).certified);
}

TEST(Bimodule, DecreasingFiltration) {
  EXPECT_TRUE(decreasing_Q(0, 1, 3).empty());
  for (int ell : {3, 5})
    for (int n = 0; n <= ell - 2; ++n) {
      const auto qs = decreasing_Q(n, 3, ell);
      ASSERT_EQ(qs.size(), 1u);
      EXPECT_TRUE(qs[0].certified) << ell << " " << n;
    }
}

TEST(Bimodule, LambdaBlock) {
  for (int ell : {3, 5})
    for (int n = 0; n <= ell - 2; ++n)
      for (int depth = 1; depth <= 3; ++depth) {
        const auto r = lambda_block(n, depth, ell);
        EXPECT_TRUE(r.passed()) << ell << " " << n << " " << depth;
        int boundary = 0;
        for (const auto& c : r.checks) boundary += c.status == Status::BoundaryUnverified;
        EXPECT_EQ(boundary, 1);
      }
  const auto one = lambda_block(0, 1, 3);
  EXPECT_EQ(compositions(one.loewy.radical_layers), (Layers{{{{0, 0}, 1}}}));
  const auto two = lambda_block(0, 2, 3);
  EXPECT_EQ(two.loewy.radical_layers.back().composition.count({4, 4}), 1u);
  EXPECT_EQ(two.loewy.radical_layers.back().composition.count({0, 0}), 1u);
  const auto three = lambda_block(1, 2, 3);
  EXPECT_EQ(three.sequence, (std::vector<int>{1, 3}));
  EXPECT_EQ(compositions(three.loewy.radical_layers),
            (Layers{{{{1, 1}, 1}}, {{{3, 1}, 1}, {{1, 3}, 1}}, {{{1, 1}, 1}, {{3, 3}, 1}}}));
}

TEST(Bimodule, BlockOrthogonality) {
  const int ell = 3;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      if (linked(a, b, ell)) continue;
      EXPECT_TRUE(hom_space(mc(a, ell), mc(b, ell)).empty()) << a << " " << b;
    }
  EXPECT_FALSE(hom_space(mc(4, ell), mc(4, ell)).empty());
}

TEST(Bimodule, SteinbergBlocksIrreducible) {
  for (int ell : {3, 5}) {
    const int n = ell - 1;
    const BiRep m = matrix_coefficient_bimodule(uq::weyl_module(n, ell));
    EXPECT_EQ(m.dim(), (n + 1) * (n + 1));
    EXPECT_TRUE(iso_to_external(m, {uq::weyl_module(n, ell), uq::dual_weyl_module(n, ell)}).certified);
    const auto l = loewy_bi(m);
    EXPECT_EQ(compositions(l.radical_layers), (Layers{{{{n, n}, 1}}}));
  }
}

TEST(Bimodule, EquivariantVector) {
  const int ell = 3;
  Vec y0 = equivariant_vector(0, ell);
  ASSERT_EQ(y0.size(), 1);
  EXPECT_EQ(y0(0), Cyclotomic(1));
  Vec y1 = equivariant_vector(1, ell);
  // e0 (x) e1 - q e1 (x) e0
  EXPECT_EQ(y1(1), Cyclotomic(1));
  EXPECT_EQ(y1(2), -Cyclotomic::q(ell));
  EXPECT_TRUE(y1(0).is_zero());
  EXPECT_TRUE(y1(3).is_zero());
  for (int l : {3, 5})
    for (int n = 0; n <= 2 * l; ++n) {
      const Mat k = equivariant_solutions(n, l);
      ASSERT_EQ(k.cols(), 1) << l << " " << n;
      Mat both(k.rows(), 2);
      both.col(0) = k.col(0);
      both.col(1) = equivariant_vector(n, l);
      EXPECT_EQ(linalg::rank(both), 1) << l << " " << n;
    }
}

TEST(Bimodule, TraceSpansEquivariantQuotient) {
  for (int ell : {3, 5})
    for (int n = 0; n <= ell - 2; ++n) {
      const auto seq = block_sequence(n, 3, ell);
      const auto ps = build_P(n, 3, ell);
      for (int i = 0; i < 3; ++i) {
        const auto& p = ps[i];
        graded::Subspace prev = i == 0 ? graded::zero_subspace(p.layout()) : subspace_of(p, ps[i - 1]);
        const auto q = graded::quotient(p.layout(), prev);
        const BiRep qm = quotient_birep(p, prev);
        const Mat eq = equivariant_subspace(qm);
        ASSERT_EQ(eq.cols(), 1) << ell << " " << n << " " << i;
        const auto t = p.coordinates(oq::trace(uq::simple_module(seq[i], ell)));
        ASSERT_TRUE(t.has_value());
        const Mat image = graded::mul(q.projection, Mat(*t));
        EXPECT_FALSE(graded::is_zero(image));
        Mat both(eq.rows(), 2);
        both.col(0) = eq.col(0);
        both.col(1) = image.col(0);
        EXPECT_EQ(linalg::rank(both), 1) << ell << " " << n << " " << i;
      }
    }
}
