#include "qcoord/acceptance/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qcoord/bimodule/bimodule.hpp"
#include "qcoord/coeff/gauss.hpp"
#include "qcoord/linalg/exact.hpp"
#include "qcoord/oq/oq.hpp"
#include "qcoord/qmatrix/qmatrix.hpp"
#include "qcoord/uq/generic.hpp"
#include "qcoord/uq/hopf.hpp"
#include "qcoord/uq/modules.hpp"
#include "qcoord/uq/relations.hpp"
#include "qcoord/weights.hpp"

namespace qcoord::acceptance {

namespace {

using Eigen::Index;

// Collects the first failure; later failures only bump the count.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  bool passed() const { return failures_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    if (passed()) os << checks_ << " checks";
    else os << failures_ << " of " << checks_ << " checks failed; first: " << first_;
    return os.str();
  }

 private:
  long checks_ = 0, failures_ = 0;
  std::string first_;
};

std::string str(int x) { return std::to_string(x); }

long classical_binom(int n, int m) {
  long r = 1;
  for (int j = 1; j <= m; ++j) r = r * (n - m + j) / j;
  return r;
}

void gaussian_vanishing(Checker& c, unsigned) {
  for (int ell : {3, 5, 7})
    for (int i = 1; i < ell; ++i)
      c.expect(specialize(gauss_binom(ell, i), ell).is_zero(), "[" + str(ell) + "; " + str(i) + "] at l=" + str(ell));
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m)
      c.expect(gauss_binom(n, m).at_one() == classical_binom(n, m), "classical limit " + str(n) + " " + str(m));
}

void relation_suite(Checker& c, unsigned) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 3 * ell; ++n)
      for (const uq::Rep* r : {&uq::weyl_module(n, ell), &uq::dual_weyl_module(n, ell), &uq::simple_module(n, ell),
                               &uq::tilting_module(n, ell)}) {
        const auto f = uq::relation_failures(*r, 2 * ell);
        c.expect(f.empty(), r->label() + " l=" + str(ell) + ": " + (f.empty() ? "" : f.front()));
      }
  // divided powers of tensors at generic v are exact and specialize to the stored ones
  auto check_generic = [&](const uq::generic::GenericRep& g, const uq::Rep& r, int ell, const std::string& name) {
    c.expect(g.weights == r.weights(), name + ": weights");
    const int top = std::min(static_cast<int>(r.stored_powers()), 2 * ell);
    for (int j = 1; j <= top; ++j) {
      auto e = uq::generic::divided_power(g.e, j);
      auto f = uq::generic::divided_power(g.f, j);
      c.expect(e && f, name + ": inexact division at j=" + str(j));
      if (!e || !f) continue;
      c.expect(graded::equal(uq::generic::specialize(*e, g.dim(), ell), r.e(j)) &&
                   graded::equal(uq::generic::specialize(*f, g.dim(), ell), r.f(j)),
               name + ": E(" + str(j) + ") mismatch");
    }
  };
  for (int ell : {3, 5}) {
    uq::Rep r = uq::trivial_module(ell);
    for (int n = 1; n <= 6; ++n) {
      r = uq::tensor(r, uq::natural_module(ell));
      check_generic(uq::generic::tensor_power(n), r, ell, "V_1^" + str(n));
    }
    for (int a = 1; a <= ell; ++a)
      for (int b = a; a + b <= 2 * ell; ++b)
        check_generic(uq::generic::tensor(uq::generic::weyl(a), uq::generic::weyl(b)),
                      uq::tensor(uq::weyl_formula(a, ell), uq::weyl_formula(b, ell)), ell,
                      "V_" + str(a) + " (x) V_" + str(b));
  }
}

void composition_series(Checker& c, unsigned) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 3 * ell; ++n) {
      const uq::Rep& v = uq::weyl_module(n, ell);
      if (auto p = weights::sl2_prime(n, ell)) {
        c.expect(uq::isomorphic(uq::socle(v), uq::simple_module(*p, ell)), "soc V_" + str(n) + " l=" + str(ell));
        c.expect(uq::isomorphic(uq::head(v), uq::simple_module(n, ell)), "hd V_" + str(n) + " l=" + str(ell));
      }
      if ((n + 1) % ell == 0) c.expect(uq::radical(v).dim() == 0, "V_" + str(n) + " irreducible, l=" + str(ell));
    }
}

void tilting_characters(Checker& c, unsigned) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 3 * ell; ++n) {
      const auto p = weights::sl2_prime(n, ell);
      if (!p) continue;
      const uq::Rep& t = uq::tilting_module(n, ell);
      c.expect(uq::character(t) == uq::weyl_character(n) + uq::weyl_character(*p), "ch T_" + str(n) + " l=" + str(ell));
      c.expect(uq::isomorphic(uq::dual(t), t), "T_" + str(n) + " self-dual, l=" + str(ell));
    }
}

void ext_zero(Checker& c, unsigned) {
  for (int ell : {3, 5})
    for (int m = 0; m <= 2 * ell; ++m)
      for (int k = 0; k <= 2 * ell; ++k) {
        const auto h = uq::hom_space(uq::weyl_module(m, ell), uq::dual_weyl_module(k, ell));
        c.expect(h.size() == (m == k ? 1u : 0u), "Hom(V_" + str(m) + ", V_" + str(k) + "^*) l=" + str(ell));
      }
}

void pairing(Checker& c, unsigned) {
  using uq::AlgebraElement;
  using uq::GeneratorSymbol;
  for (int ell : {3, 5}) {
    AlgebraElement k = AlgebraElement::scalar(1);
    for (int i = 0; i < ell; ++i) k = k * AlgebraElement(GeneratorSymbol::K());
    const AlgebraElement u = k - AlgebraElement::scalar(1);
    for (const auto& m : oq::monomials_up_to(6))
      c.expect(oq::evaluate(oq::Element(m, 1), u, ell).is_zero(), "(K^l - 1, " + oq::to_string(m) + ") l=" + str(ell));

    const auto monos = oq::monomials_up_to(2);
    std::vector<AlgebraElement> us{AlgebraElement::scalar(1)}, frontier = us;
    const std::vector<GeneratorSymbol> gens = {GeneratorSymbol::E(1), GeneratorSymbol::F(1), GeneratorSymbol::K()};
    for (int len = 1; len <= 4; ++len) {
      std::vector<AlgebraElement> next;
      for (const auto& w : frontier)
        for (const auto& g : gens) next.push_back(w * AlgebraElement(g));
      us.insert(us.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    Mat p(static_cast<Index>(monos.size()), static_cast<Index>(us.size()));
    for (std::size_t i = 0; i < monos.size(); ++i)
      for (std::size_t j = 0; j < us.size(); ++j)
        p(static_cast<Index>(i), static_cast<Index>(j)) = oq::evaluate(oq::Element(monos[i], 1), us[j], ell);
    c.expect(linalg::rank(p) == static_cast<Index>(monos.size()), "pairing degenerate on degree <= 2, l=" + str(ell));
  }
}

void filtration(Checker& c, unsigned) {
  for (int ell : {3, 5})
    for (int n = 0; n <= ell - 2; ++n)
      for (const auto& q : bimodule::filtration_quotients(n, 3, ell))
        c.expect(q.certified, "P^" + str(q.i) + "/P^" + str(q.i - 1) + " = " + q.target + ", block " + str(n) +
                                  " l=" + str(ell));
}

void loewy_pictures(Checker& c, unsigned) {
  using bimodule::Label;
  using Layers = std::vector<std::map<Label, int>>;
  const int ell = 3;
  auto layers = [](const std::vector<bimodule::BiLayer>& ls) {
    Layers out;
    for (const auto& l : ls) out.push_back(l.composition);
    return out;
  };
  const Layers t4 = {{{{0, 0}, 1}}, {{{4, 0}, 1}, {{0, 4}, 1}}, {{{0, 0}, 1}, {{4, 4}, 1}}};
  const Layers t6 = {{{{4, 4}, 1}},
                     {{{4, 0}, 1}, {{0, 4}, 1}, {{6, 4}, 1}, {{4, 6}, 1}},
                     {{{0, 0}, 1}, {{4, 4}, 1}, {{6, 6}, 1}}};
  for (const auto& [n, expected] : {std::pair{4, t4}, std::pair{6, t6}}) {
    const auto l = bimodule::loewy_bi(bimodule::matrix_coefficient_bimodule(uq::tilting_module(n, ell)));
    c.expect(layers(l.radical_layers) == expected, "radical layers of M(T_" + str(n) + ")");
    c.expect(layers(l.socle_layers) == expected, "socle layers of M(T_" + str(n) + ")");
    c.expect(l.rigid, "M(T_" + str(n) + ") rigid");
    c.expect(l.indecomposable, "M(T_" + str(n) + ") indecomposable");
  }
  const auto both = oq::intersect(oq::matrix_coeffs(uq::tilting_module(4, ell)),
                                  oq::matrix_coeffs(uq::tilting_module(6, ell)));
  const auto v = oq::sum(oq::matrix_coeffs(uq::weyl_module(4, ell)), oq::matrix_coeffs(uq::dual_weyl_module(4, ell)));
  c.expect(oq::same_span(both, v), "M(T_4) & M(T_6) = M(V_4) + M(V_4^*)");
}

void equivariant(Checker& c, unsigned) {
  for (int ell : {3, 5})
    for (int n = 0; n <= 2 * ell; ++n) {
      const Mat k = bimodule::equivariant_solutions(n, ell);
      c.expect(k.cols() == 1, "solution space dim for n=" + str(n) + " l=" + str(ell));
      if (k.cols() != 1) continue;
      Mat both(k.rows(), 2);
      both.col(0) = k.col(0);
      both.col(1) = bimodule::equivariant_vector(n, ell);
      c.expect(linalg::rank(both) == 1, "y spans the solutions, n=" + str(n) + " l=" + str(ell));
    }
}

void cocommutative(Checker& c, unsigned) {
  for (int ell : {3, 5}) {
    const oq::Element s = oq::Element::generator('a') + oq::Element::generator('d');
    std::vector<oq::Element> powers{oq::Element::one()};
    for (int d = 0; d <= 6; ++d) {
      if (d > 0) powers.push_back(oq::multiply(powers.back(), s, ell));
      const auto b = oq::cocommutative_basis(d, ell);
      c.expect(static_cast<int>(b.size()) == d + 1, "dim HH^0 window D=" + str(d) + " l=" + str(ell));
      c.expect(oq::same_span(oq::span_of(b), oq::span_of(powers)), "span of (a+d)^k, D=" + str(d) + " l=" + str(ell));
    }
  }
  // tr_{V (x) V'} = tr_V tr_V'
  struct Pair {
    int ell;
    const uq::Rep* a;
    const uq::Rep* b;
  };
  const std::vector<Pair> pairs = {{3, &uq::tilting_module(4, 3), &uq::category(3).natural()},
                                   {3, &uq::simple_module(2, 3), &uq::simple_module(3, 3)},
                                   {3, &uq::weyl_module(4, 3), &uq::dual_weyl_module(1, 3)},
                                   {5, &uq::weyl_module(3, 5), &uq::weyl_module(2, 5)}};
  for (const auto& p : pairs)
    c.expect(oq::trace(uq::tensor(*p.a, *p.b)) == oq::multiply(oq::trace(*p.a), oq::trace(*p.b), p.ell),
             "tr of " + p.a->label() + " (x) " + p.b->label());
  // tr_V = tr_U + tr_W along 0 -> U -> V -> W -> 0
  for (int ell : {3, 5})
    for (int n = 0; n <= 2 * ell; ++n) {
      const uq::Rep& v = uq::weyl_module(n, ell);
      const auto soc = uq::socle_subspace(v);
      const uq::Rep u = uq::sub_rep(v, soc), w = uq::quotient_rep(v, soc);
      c.expect(oq::trace(v) == oq::trace(u) + oq::trace(w), "tr additive on V_" + str(n) + " l=" + str(ell));
      if (auto p = weights::sl2_prime(n, ell)) {
        const uq::Rep& t = uq::tilting_module(n, ell);
        c.expect(oq::trace(t) == oq::trace(uq::weyl_module(n, ell)) + oq::trace(uq::weyl_module(*p, ell)),
                 "tr additive on T_" + str(n) + " l=" + str(ell));
      }
    }
}

qmatrix::QMatElement random_element(std::mt19937& rng, int n, int max_degree) {
  const auto monos = qmatrix::xi_monomials(n, max_degree);
  qmatrix::QMatElement x(n);
  const int terms = 1 + static_cast<int>(rng() % 2);
  for (int t = 0; t < terms; ++t)
    x.add_term(monos[rng() % monos.size()],
               LaurentPoly::monomial(static_cast<int>(rng() % 3) - 1, static_cast<long>(rng() % 5) - 2));
  return x;
}

void quantum_matrices(Checker& c, unsigned seed) {
  std::mt19937 rng(seed);
  auto to_oq = [](const qmatrix::QMatElement& x, int ell) {
    oq::Element out;
    for (const auto& [m, coeff] : x.terms())
      out.add_term(oq::Monomial{m.at(1, 1), m.at(1, 2), m.at(2, 1), m.at(2, 2)}, specialize(coeff, ell));
    return out;
  };
  for (int k = 0; k < 100; ++k) {
    const auto x = random_element(rng, 2, 3), y = random_element(rng, 2, 3);
    const auto p = qmatrix::multiply(x, y);
    for (int ell : {3, 5})
      c.expect(to_oq(p, ell) == oq::multiply(to_oq(x, ell), to_oq(y, ell), ell),
               "n=2 product " + qmatrix::to_string(x) + " * " + qmatrix::to_string(y) + " at l=" + str(ell));
  }
  for (int n : {2, 3})
    for (int k = 0; k < 300; ++k) {
      const auto x = random_element(rng, n, 3), y = random_element(rng, n, 3), z = random_element(rng, n, 3);
      const auto left = qmatrix::multiply(qmatrix::multiply(x, y), z);
      const auto right = qmatrix::multiply(x, qmatrix::multiply(y, z));
      c.expect(left == right, "(xy)z != x(yz) for n=" + str(n) + ": " + qmatrix::to_string(x) + " | " +
                                  qmatrix::to_string(y) + " | " + qmatrix::to_string(z));
      c.expect(qmatrix::supported_on_xi(left), "support outside Xi for n=" + str(n));
    }
}

struct Criterion {
  const char* name;
  std::function<void(Checker&, unsigned)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"Gaussian binomials vanish at roots of unity; classical limits", gaussian_vanishing},
      {"defining relations and divided-power integrality", relation_suite},
      {"composition series of Weyl modules", composition_series},
      {"tilting characters and self-duality", tilting_characters},
      {"Hom(V_m, V_k^*) = delta_mk", ext_zero},
      {"pairing kills K^l - 1 and is non-degenerate on degree <= 2", pairing},
      {"filtration quotients P^i/P^(i-1) = V^* (x) V^*", filtration},
      {"Loewy pictures of M(T_4), M(T_6) and the intersection identity", loewy_pictures},
      {"equivariant vector spans a one-dimensional solution space", equivariant},
      {"cocommutative elements are polynomials in a+d; trace identities", cocommutative},
      {"quantum matrices: n=2 agreement, confluence, Xi support", quantum_matrices},
  };
  return list;
}

}  // namespace

CriterionResult run_criterion(int id, unsigned seed) {
  if (id < 1 || id > kCriteria) throw std::out_of_range("acceptance criterion " + std::to_string(id));
  const auto& cr = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = cr.name;
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  try {
    cr.run(c, seed);
    r.passed = c.passed();
    r.detail = c.detail();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(unsigned seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ", "
     << static_cast<long>(r.seconds * 1000) << " ms)";
  return os.str();
}

}  // namespace qcoord::acceptance
