#include "qcoord/uq/hopf.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "qcoord/coeff/gauss.hpp"

namespace qcoord::uq {

namespace {

// Coefficients c_t of x^{r-t} y^t in (x + y)^r where y x = w x y, w = v^{w_exp}.
std::vector<LaurentPoly> q_commuting_expansion(int r, int w_exp) {
  std::vector<LaurentPoly> c{LaurentPoly(1)};  // (x+y)^0
  for (int step = 0; step < r; ++step) {
    // multiply on the right by (x + y): x^a y^b x = w^b x^{a+1} y^b,  x^a y^b y = x^a y^{b+1}
    std::vector<LaurentPoly> next(c.size() + 1);
    for (std::size_t b = 0; b < c.size(); ++b) {
      next[b] += c[b] * LaurentPoly::monomial(w_exp * static_cast<int>(b));
      next[b + 1] += c[b];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<LaurentPoly> divided_coproduct(int r, int w_exp) {
  if (r < 0) throw std::invalid_argument("coproduct of a negative divided power");
  auto c = q_commuting_expansion(r, w_exp);
  const LaurentPoly denom = gauss_factorial(r);
  std::vector<LaurentPoly> out;
  for (int t = 0; t <= r; ++t) {
    auto q = divide_exact(c[t] * gauss_factorial(r - t) * gauss_factorial(t), denom);
    if (!q) throw std::logic_error("divided-power coproduct is not integral");
    out.push_back(*q);
  }
  return out;
}

const std::vector<LaurentPoly>& memo(char tag, int r, int w_exp) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::vector<LaurentPoly>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({tag, r});
    if (it != cache.end()) return it->second;
  }
  auto value = divided_coproduct(r, w_exp);
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{tag, r}, std::move(value)).first->second;
}

// A word in X (the E or F letter) and powers of K.  k_exp == 0 marks an X letter.
struct Letter {
  bool is_x;
  int k_exp;
};

// Normal-orders the word with all K's moved to one side.  s = 2 for E, -2 for F:
// K^a X = v^{s a} X K^a.
CartanForm normal_order(const std::vector<Letter>& word, int s, bool k_left, int sign) {
  CartanForm out;
  int exponent = 0;
  const int n = static_cast<int>(word.size());
  for (int i = 0; i < n; ++i) {
    if (word[i].is_x) continue;
    const int a = word[i].k_exp;
    if (k_left) {
      int xs_before = 0;
      for (int j = 0; j < i; ++j) xs_before += word[j].is_x;
      exponent += -s * a * xs_before;  // X K^a = v^{-s a} K^a X
      out.k_left += a;
    } else {
      int xs_after = 0;
      for (int j = i + 1; j < n; ++j) xs_after += word[j].is_x;
      exponent += s * a * xs_after;  // K^a X = v^{s a} X K^a
      out.k_right += a;
    }
  }
  out.coeff = LaurentPoly::monomial(exponent, sign);
  return out;
}

std::vector<Letter> repeat(const std::vector<Letter>& unit, int r) {
  std::vector<Letter> w;
  for (int i = 0; i < r; ++i) w.insert(w.end(), unit.begin(), unit.end());
  return w;
}

}  // namespace

const std::vector<LaurentPoly>& coproduct_e(int r) { return memo('E', r, 2); }
const std::vector<LaurentPoly>& coproduct_f(int r) { return memo('F', r, -2); }

// S is an anti-automorphism, so S(X^r) = S(X)^r and S(X^(r)) = S(X)^r / [r]!; the
// [r]! is absorbed into X^(r) after normal ordering.
CartanForm antipode_e(int r) {
  // S(E) = -K^-1 E
  return normal_order(repeat({{false, -1}, {true, 0}}, r), 2, true, r % 2 ? -1 : 1);
}

CartanForm antipode_f(int r) {
  // S(F) = -F K
  return normal_order(repeat({{true, 0}, {false, 1}}, r), -2, false, r % 2 ? -1 : 1);
}

CartanForm inverse_antipode_e(int r) {
  // S^-1(E) = -E K^-1
  return normal_order(repeat({{true, 0}, {false, -1}}, r), 2, false, r % 2 ? -1 : 1);
}

CartanForm inverse_antipode_f(int r) {
  // S^-1(F) = -K F
  return normal_order(repeat({{false, 1}, {true, 0}}, r), -2, true, r % 2 ? -1 : 1);
}

namespace {

AlgebraElement antipode_impl(const AlgebraElement& u, int ell, bool inverse) {
  using Kind = GeneratorSymbol::Kind;
  auto k_word = [](int a) {
    std::vector<GeneratorSymbol> w;
    for (int i = 0; i < std::abs(a); ++i) w.push_back(a > 0 ? GeneratorSymbol::K() : GeneratorSymbol::Kinv());
    return w;
  };
  AlgebraElement out;
  for (const auto& [c, word] : u.terms) {
    AlgebraElement term = AlgebraElement::scalar(c);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const auto& g = *it;
      AlgebraElement image;
      switch (g.kind) {
        case Kind::E:
        case Kind::F: {
          const bool raise = g.kind == Kind::E;
          const CartanForm f = inverse ? (raise ? inverse_antipode_e(g.j) : inverse_antipode_f(g.j))
                                       : (raise ? antipode_e(g.j) : antipode_f(g.j));
          std::vector<GeneratorSymbol> w = k_word(f.k_left);
          w.push_back(g);
          for (const auto& k : k_word(f.k_right)) w.push_back(k);
          image.terms.emplace_back(specialize(f.coeff, ell), std::move(w));
          break;
        }
        case Kind::K: image = GeneratorSymbol::Kinv(); break;
        case Kind::Kinv: image = GeneratorSymbol::K(); break;
        case Kind::KBinom:
          image = AlgebraElement(GeneratorSymbol::KBinom(g.j - 1 - g.c, g.j));
          if (g.j % 2) image = Cyclotomic(-1) * image;
          break;
      }
      term = term * image;
    }
    out += term;
  }
  return out;
}

}  // namespace

AlgebraElement antipode(const AlgebraElement& u, int ell) { return antipode_impl(u, ell, false); }
AlgebraElement inverse_antipode(const AlgebraElement& u, int ell) { return antipode_impl(u, ell, true); }

}  // namespace qcoord::uq
