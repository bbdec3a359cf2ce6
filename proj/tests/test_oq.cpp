#include <gtest/gtest.h>

#include <random>

#include "qcoord/linalg/exact.hpp"
#include "qcoord/oq/oq.hpp"
#include "qcoord/uq/hopf.hpp"
#include "qcoord/uq/modules.hpp"

using namespace qcoord;
using namespace qcoord::oq;
using uq::AlgebraElement;
using uq::GeneratorSymbol;

namespace {

const Element A = Element::generator('a'), B = Element::generator('b'), C = Element::generator('c'),
              D = Element::generator('d');

Cyclotomic qp(int ell, int e) { return Cyclotomic::q_pow(ell, e); }

Element random_element(std::mt19937& rng, int max_degree, int terms = 3) {
  const auto monos = monomials_up_to(max_degree);
  Element x;
  for (int t = 0; t < terms; ++t) {
    const auto& m = monos[rng() % monos.size()];
    x.add_term(m, Cyclotomic(static_cast<int>(rng() % 7) - 3));
  }
  return x;
}

AlgebraElement random_algebra_element(std::mt19937& rng, int ell) {
  const std::vector<GeneratorSymbol> gens = {GeneratorSymbol::E(1), GeneratorSymbol::F(1), GeneratorSymbol::K(),
                                             GeneratorSymbol::Kinv(), GeneratorSymbol::E(ell),
                                             GeneratorSymbol::F(ell), GeneratorSymbol::E(2)};
  AlgebraElement u;
  for (int t = 0; t < 2; ++t) {
    AlgebraElement w = AlgebraElement::scalar(Cyclotomic(static_cast<int>(rng() % 5) + 1));
    const int len = static_cast<int>(rng() % 3);
    for (int k = 0; k < len; ++k) w = w * AlgebraElement(gens[rng() % gens.size()]);
    u += w;
  }
  return u;
}

Element mul(const Element& x, const Element& y, int ell) { return multiply(x, y, ell); }

}  // namespace

TEST(Oq, QuotedRelations) {
  const int ell = 5;
  EXPECT_EQ(mul(B, A, ell), qp(ell, -1) * mul(A, B, ell));
  EXPECT_EQ(mul(C, A, ell), qp(ell, -1) * mul(A, C, ell));
  EXPECT_EQ(mul(B, D, ell), qp(ell, 1) * mul(D, B, ell));
  EXPECT_EQ(mul(C, D, ell), qp(ell, 1) * mul(D, C, ell));
  EXPECT_EQ(mul(B, C, ell), mul(C, B, ell));
  EXPECT_EQ(mul(D, A, ell), Element::one() + qp(ell, -1) * mul(B, C, ell));
  EXPECT_EQ(mul(A, D, ell), Element::one() + qp(ell, 1) * mul(B, C, ell));
}

TEST(Oq, SquareOfTraceMatchesEvaluation) {
  const int ell = 3;
  const Element s = A + D;
  const Element sq = mul(s, s, ell);
  std::mt19937 rng(11);
  // (a + d)^2 as a sum of length-2 words evaluated directly on V_1 (x) V_1
  const uq::Rep v2 = uq::tensor(uq::natural_module(ell), uq::natural_module(ell));
  for (int t = 0; t < 20; ++t) {
    const auto u = random_algebra_element(rng, ell);
    const Mat r = v2.act(u);
    const Cyclotomic direct = r(0, 0) + r(1, 1) + r(2, 2) + r(3, 3);  // words aa, ad, da, dd
    EXPECT_EQ(evaluate(sq, u, ell), direct);
  }
}

TEST(Oq, Confluence) {
  for (int ell : {3, 5}) {
    std::mt19937 rng(2024 + ell);
    for (int t = 0; t < 250; ++t) {
      const Element x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
      EXPECT_EQ(mul(mul(x, y, ell), z, ell), mul(x, mul(y, z, ell), ell));
    }
  }
}

TEST(Oq, NormalFormSupport) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Element x = mul(random_element(rng, 3), random_element(rng, 3), 3);
    for (const auto& [m, c] : x.terms()) EXPECT_TRUE(m.a == 0 || m.d == 0);
  }
}

TEST(Oq, Coproduct) {
  const int ell = 3;
  const Monomial one{}, a{1, 0, 0, 0}, b{0, 1, 0, 0}, c{0, 0, 1, 0}, d{0, 0, 0, 1};
  EXPECT_EQ(comultiply(Element::one(), ell), (TensorElement{{{one, one}, Cyclotomic(1)}}));
  EXPECT_EQ(comultiply(A, ell), (TensorElement{{{a, a}, Cyclotomic(1)}, {{b, c}, Cyclotomic(1)}}));
  EXPECT_EQ(comultiply(B, ell), (TensorElement{{{a, b}, Cyclotomic(1)}, {{b, d}, Cyclotomic(1)}}));
  EXPECT_EQ(comultiply(C, ell), (TensorElement{{{c, a}, Cyclotomic(1)}, {{d, c}, Cyclotomic(1)}}));
  EXPECT_EQ(comultiply(D, ell), (TensorElement{{{c, b}, Cyclotomic(1)}, {{d, d}, Cyclotomic(1)}}));
}

TEST(Oq, CounitAxiomAndCoassociativity) {
  const int ell = 5;
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    const Element x = random_element(rng, 4);
    const auto dx = comultiply(x, ell);
    Element left, right;
    for (const auto& [p, c] : dx) {
      left += (c * counit(Element(p.first, 1))) * Element(p.second, 1);
      right += (c * counit(Element(p.second, 1))) * Element(p.first, 1);
    }
    EXPECT_EQ(left, x);
    EXPECT_EQ(right, x);
  }
  for (int t = 0; t < 10; ++t) {
    const Element x = random_element(rng, 2, 2);
    // (Delta (x) id) Delta vs (id (x) Delta) Delta, as maps to triple monomial sums
    std::map<std::array<Monomial, 3>, Cyclotomic> l, r;
    for (const auto& [p, c] : comultiply(x, ell)) {
      for (const auto& [p2, c2] : comultiply(Element(p.first, 1), ell)) l[{p2.first, p2.second, p.second}] += c * c2;
      for (const auto& [p2, c2] : comultiply(Element(p.second, 1), ell)) r[{p.first, p2.first, p2.second}] += c * c2;
    }
    for (auto* m : {&l, &r})
      for (auto it = m->begin(); it != m->end();) it = it->second.is_zero() ? m->erase(it) : std::next(it);
    EXPECT_EQ(l, r);
  }
}

TEST(Oq, Antipode) {
  const int ell = 3;
  EXPECT_EQ(antipode(Element::one(), ell), Element::one());
  EXPECT_EQ(antipode(B, ell), Cyclotomic(-1) * qp(ell, -1) * B);
  EXPECT_EQ(antipode(C, ell), Cyclotomic(-1) * qp(ell, 1) * C);
  EXPECT_EQ(antipode(mul(A, B, ell), ell), Cyclotomic(-1) * qp(ell, -1) * mul(B, D, ell));
  // epsilon o S = epsilon, S^2 != id, S injective on the degree-3 window
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Element x = random_element(rng, 4);
    EXPECT_EQ(counit(antipode(x, ell)), counit(x));
  }
  EXPECT_NE(antipode(antipode(B, ell), ell), B);
  std::vector<Element> images;
  const auto monos = monomials_up_to(3);
  for (const auto& m : monos) images.push_back(antipode(Element(m, 1), ell));
  EXPECT_EQ(span_of(images).dim(), static_cast<Index>(monos.size()));
}

TEST(Oq, AntipodesAreDual) {
  // <S f, u> = <f, S u>
  for (int ell : {3, 5}) {
    std::mt19937 rng(31 + ell);
    for (int t = 0; t < 20; ++t) {
      const Element f = random_element(rng, 3);
      const auto u = random_algebra_element(rng, ell);
      EXPECT_EQ(evaluate(antipode(f, ell), u, ell), evaluate(f, uq::antipode(u, ell), ell));
    }
  }
}

TEST(Oq, Evaluation) {
  const int ell = 3;
  EXPECT_TRUE(evaluate(Element::one(), GeneratorSymbol::K(), ell).is_one());
  EXPECT_EQ(evaluate(A, GeneratorSymbol::K(), ell), qp(ell, 1));
  EXPECT_TRUE(evaluate(B, GeneratorSymbol::E(1), ell).is_one());
}

TEST(Oq, KPowerEllMinusOneKillsEverything) {
  for (int ell : {3, 5}) {
    AlgebraElement k = AlgebraElement::scalar(1);
    for (int i = 0; i < ell; ++i) k = k * AlgebraElement(GeneratorSymbol::K());
    const AlgebraElement u = k - AlgebraElement::scalar(1);
    for (const auto& m : monomials_up_to(6)) EXPECT_TRUE(evaluate(Element(m, 1), u, ell).is_zero()) << to_string(m);
  }
}

TEST(Oq, PairingNondegenerateOnSmallWindow) {
  for (int ell : {3, 5}) {
    const auto monos = monomials_up_to(2);
    std::vector<AlgebraElement> us{AlgebraElement::scalar(1)};
    const std::vector<GeneratorSymbol> gens = {GeneratorSymbol::E(1), GeneratorSymbol::F(1), GeneratorSymbol::K()};
    std::vector<AlgebraElement> frontier = us;
    for (int len = 1; len <= 4; ++len) {
      std::vector<AlgebraElement> next;
      for (const auto& w : frontier)
        for (const auto& g : gens) next.push_back(w * AlgebraElement(g));
      us.insert(us.end(), next.begin(), next.end());
      frontier = next;
    }
    Mat pairing(static_cast<Index>(monos.size()), static_cast<Index>(us.size()));
    for (std::size_t i = 0; i < monos.size(); ++i)
      for (std::size_t j = 0; j < us.size(); ++j)
        pairing(static_cast<Index>(i), static_cast<Index>(j)) = evaluate(Element(monos[i], 1), us[j], ell);
    EXPECT_EQ(linalg::rank(pairing), static_cast<Index>(monos.size()));
  }
}

TEST(Oq, PairingProductCompatibility) {
  const int ell = 5;
  std::mt19937 rng(8);
  const auto e = AlgebraElement(GeneratorSymbol::E(1)), f = AlgebraElement(GeneratorSymbol::F(1)),
             k = AlgebraElement(GeneratorSymbol::K()), kinv = AlgebraElement(GeneratorSymbol::Kinv()),
             one = AlgebraElement::scalar(1);
  for (int t = 0; t < 20; ++t) {
    const auto monos = monomials_up_to(3);
    const Element x(monos[rng() % monos.size()], 1), y(monos[rng() % monos.size()], 1);
    const Element xy = mul(x, y, ell);
    auto ev = [&](const Element& z, const AlgebraElement& u) { return evaluate(z, u, ell); };
    EXPECT_EQ(ev(xy, k), ev(x, k) * ev(y, k));
    EXPECT_EQ(ev(xy, e), ev(x, e) * ev(y, one) + ev(x, k) * ev(y, e));
    EXPECT_EQ(ev(xy, f), ev(x, f) * ev(y, kinv) + ev(x, one) * ev(y, f));
  }
}

TEST(Oq, Actions) {
  const int ell = 3;
  EXPECT_EQ(rho1(GeneratorSymbol::K(), A, ell), qp(ell, 1) * A);
  std::mt19937 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Element x = random_element(rng, 3);
    EXPECT_EQ(rho1(AlgebraElement::scalar(1), x, ell), x);
    EXPECT_EQ(rho1(GeneratorSymbol::E(1), rho2(GeneratorSymbol::F(1), x, ell), ell),
              rho2(GeneratorSymbol::F(1), rho1(GeneratorSymbol::E(1), x, ell), ell));
    EXPECT_LE(rho1(GeneratorSymbol::E(2), x, ell).degree(), 3);
    EXPECT_LE(rho2(GeneratorSymbol::F(ell), x, ell).degree(), 3);
  }
}

TEST(Oq, MatrixCoefficients) {
  EXPECT_TRUE(same_span(matrix_coeffs(uq::natural_module(3)), span_of({A, B, C, D})));
  EXPECT_TRUE(same_span(matrix_coeffs(uq::trivial_module(3)), span_of({Element::one()})));
  EXPECT_EQ(matrix_coeffs(uq::tilting_module(4, 3)).dim(), 26);
  // tensor rule M(V (x) V') = M(V) M(V')
  const uq::Rep& v2 = uq::weyl_module(2, 3);
  const uq::Rep& n = uq::natural_module(3);
  std::vector<Element> products;
  for (const auto& x : matrix_coeffs(v2).basis)
    for (const auto& y : matrix_coeffs(n).basis) products.push_back(mul(x, y, 3));
  EXPECT_TRUE(same_span(matrix_coeffs(uq::tensor(v2, n)), span_of(products)));
}

TEST(Oq, MatrixCoefficientsAreStable) {
  const int ell = 3;
  const auto m = matrix_coeffs(uq::tilting_module(4, ell));
  for (const auto& g : {GeneratorSymbol::E(1), GeneratorSymbol::F(1), GeneratorSymbol::E(3), GeneratorSymbol::F(3)}) {
    std::vector<Element> images;
    for (const auto& x : m.basis) {
      images.push_back(rho1(g, x, ell));
      images.push_back(rho2(g, x, ell));
    }
    EXPECT_TRUE(contains(m, span_of(images)));
  }
}

TEST(Oq, CoefficientTableMatchesAction) {
  // C[i][j](u) = rho(u)[i][j] for modules built through subs, quotients, summands and duals
  const int ell = 3;
  std::mt19937 rng(12);
  for (const uq::Rep* r : {&uq::tilting_module(4, ell), &uq::simple_module(4, ell), &uq::dual_weyl_module(3, ell)}) {
    const auto& table = coefficient_table(*r);
    for (int t = 0; t < 3; ++t) {
      const auto u = random_algebra_element(rng, ell);
      const Mat rho = r->act(u);
      for (Index i = 0; i < r->dim(); ++i)
        for (Index j = 0; j < r->dim(); ++j) EXPECT_EQ(evaluate(table[i][j], u, ell), rho(i, j)) << r->label();
    }
  }
}

TEST(Oq, Traces) {
  const int ell = 3;
  EXPECT_EQ(trace(uq::trivial_module(ell)), Element::one());
  EXPECT_EQ(trace(uq::natural_module(ell)), A + D);
  const uq::Rep n = uq::natural_module(ell);
  EXPECT_EQ(trace(uq::tensor(n, n)), mul(A + D, A + D, ell));
  const uq::Rep& t4 = uq::tilting_module(4, ell);
  EXPECT_EQ(trace(uq::tensor(t4, n)), mul(trace(t4), trace(n), ell));
  EXPECT_EQ(trace(t4), Cyclotomic(2) * trace(uq::simple_module(0, ell)) + trace(uq::simple_module(4, ell)));
  std::vector<Element> traces;
  for (int k = 0; k <= 2 * ell; ++k) traces.push_back(trace(uq::simple_module(k, ell)));
  EXPECT_EQ(span_of(traces).dim(), 2 * ell + 1);
}

TEST(Oq, Cocommutative) {
  EXPECT_EQ(cocommutative_basis(0, 3).size(), 1u);
  const auto b = cocommutative_basis(2, 3);
  ASSERT_EQ(b.size(), 3u);
  const Element s = A + D;
  EXPECT_TRUE(same_span(span_of(b), span_of({Element::one(), s, mul(s, s, 3)})));
  EXPECT_EQ(cocommutative_basis(5, 5).size(), 6u);
}

TEST(Oq, TextAndJson) {
  const int ell = 5;
  const Element x = parse_element("a^2*b - (1/2)q^-1*c*d", ell);
  EXPECT_EQ(x, mul(mul(A, A, ell), B, ell) - (Cyclotomic(Rational(1, 2)) * qp(ell, -1)) * mul(C, D, ell));
  EXPECT_EQ(parse_element(to_string(x, ell), ell), x);
  EXPECT_EQ(element_from_json(to_json(x, ell), ell), x);
  EXPECT_EQ(parse_element("d*a", ell), Element::one() + qp(ell, -1) * mul(B, C, ell));
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Element y = mul(random_element(rng, 2), random_element(rng, 2), ell);
    EXPECT_EQ(parse_element(to_string(y, ell), ell), y);
    EXPECT_EQ(element_from_json(to_json(y, ell), ell), y);
  }
}
