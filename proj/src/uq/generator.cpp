#include "qcoord/uq/generator.hpp"

#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "qcoord/coeff/text.hpp"

namespace qcoord::uq {

std::string to_string(const GeneratorSymbol& g) {
  using K = GeneratorSymbol::Kind;
  switch (g.kind) {
    case K::E: return "E(" + std::to_string(g.j) + ")";
    case K::F: return "F(" + std::to_string(g.j) + ")";
    case K::K: return "K";
    case K::Kinv: return "Kinv";
    case K::KBinom: return "KBinom(" + std::to_string(g.c) + "," + std::to_string(g.j) + ")";
  }
  return "?";
}

namespace {

const std::regex& generator_regex() {
  static const std::regex re(R"(^(E\(\s*(\d+)\s*\)|F\(\s*(\d+)\s*\)|KBinom\(\s*(-?\d+)\s*,\s*(\d+)\s*\)|Kinv|K))");
  return re;
}

}  // namespace

GeneratorSymbol parse_generator(std::string_view text) {
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, std::regex(R"(\s*(E\(\s*(\d+)\s*\)|F\(\s*(\d+)\s*\)|KBinom\(\s*(-?\d+)\s*,\s*(\d+)\s*\)|Kinv|K)\s*)")))
    throw ParseError("bad generator symbol: " + s);
  const std::string g = m[1];
  if (g[0] == 'E') return GeneratorSymbol::E(std::stoi(m[2]));
  if (g == "Kinv") return GeneratorSymbol::Kinv();
  if (g == "K") return GeneratorSymbol::K();
  if (g[0] == 'F') return GeneratorSymbol::F(std::stoi(m[3]));
  return GeneratorSymbol::KBinom(std::stoi(m[4]), std::stoi(m[5]));
}

std::vector<GeneratorSymbol> generating_set(int ell) {
  return {GeneratorSymbol::E(1), GeneratorSymbol::F(1), GeneratorSymbol::K(), GeneratorSymbol::Kinv(),
          GeneratorSymbol::E(ell), GeneratorSymbol::F(ell), GeneratorSymbol::KBinom(0, ell)};
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
  for (const auto& [c, w] : b.terms) a.terms.emplace_back(-c, w);
  return a;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [ca, wa] : a.terms)
    for (const auto& [cb, wb] : b.terms) {
      auto w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.terms.emplace_back(ca * cb, std::move(w));
    }
  return r;
}

AlgebraElement operator*(const Cyclotomic& c, AlgebraElement a) {
  for (auto& t : a.terms) t.first = c * t.first;
  return a;
}

std::string to_string(const AlgebraElement& u) {
  if (u.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, w] : u.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (const auto& g : w) os << "*" << to_string(g);
  }
  return os.str();
}

AlgebraElement parse_algebra_element(std::string_view text, int ell) {
  GeneratorMatcher match = [](std::string_view rest) -> std::optional<std::size_t> {
    std::string s(rest);
    std::smatch m;
    if (std::regex_search(s, m, generator_regex())) return m.length(0);
    return std::nullopt;
  };
  AlgebraElement out;
  for (auto& t : parse_terms(text, 'q', match)) {
    std::vector<GeneratorSymbol> word;
    for (const auto& g : t.generators) word.push_back(parse_generator(g));
    out.terms.emplace_back(specialize(t.coeff, ell), std::move(word));
  }
  return out;
}

}  // namespace qcoord::uq
