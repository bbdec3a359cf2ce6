#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcoord/coeff/cyclotomic.hpp"

namespace qcoord::uq {

// E(j), F(j) (divided powers, j >= 1), K, Kinv, KBinom(c, t) = [K; c, t].
struct GeneratorSymbol {
  enum class Kind { E, F, K, Kinv, KBinom };
  Kind kind = Kind::K;
  int j = 0;  // divided power for E/F, t for KBinom
  int c = 0;  // shift for KBinom

  static GeneratorSymbol E(int j) { return {Kind::E, j, 0}; }
  static GeneratorSymbol F(int j) { return {Kind::F, j, 0}; }
  static GeneratorSymbol K() { return {Kind::K, 0, 0}; }
  static GeneratorSymbol Kinv() { return {Kind::Kinv, 0, 0}; }
  static GeneratorSymbol KBinom(int c, int t) { return {Kind::KBinom, t, c}; }

  // weight shift produced by the generator
  int shift() const { return kind == Kind::E ? 2 * j : kind == Kind::F ? -2 * j : 0; }

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

std::string to_string(const GeneratorSymbol& g);
GeneratorSymbol parse_generator(std::string_view text);

// The intertwiner generating set {E(1), F(1), K, Kinv, E(l), F(l), KBinom(0, l)}.
std::vector<GeneratorSymbol> generating_set(int ell);

// Formal combination of words; a word g1 g2 ... gk acts as rho(g1) rho(g2) ... rho(gk).
struct AlgebraElement {
  std::vector<std::pair<Cyclotomic, std::vector<GeneratorSymbol>>> terms;

  AlgebraElement() = default;
  AlgebraElement(const GeneratorSymbol& g) : terms{{Cyclotomic(1), {g}}} {}  // NOLINT
  static AlgebraElement scalar(const Cyclotomic& c) { AlgebraElement a; a.terms.push_back({c, {}}); return a; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Cyclotomic& c, AlgebraElement a);
};

std::string to_string(const AlgebraElement& u);
// Grammar of qcoord/coeff/text.hpp with generator tokens E(j), F(j), K, Kinv, KBinom(c,t).
AlgebraElement parse_algebra_element(std::string_view text, int ell);

}  // namespace qcoord::uq
