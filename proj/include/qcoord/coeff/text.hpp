#pragma once

// Text and JSON forms for coefficients, plus a small term grammar shared by the
// O_q and quantum-matrix parsers:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := rational | '(' laurent-expr ')' | var ['^' int] | generator ['^' int]
//
// where var is the coefficient variable ('v' or 'q') and generator tokens are
// recognised by a caller-supplied matcher.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcoord/coeff/cyclotomic.hpp"
#include "qcoord/coeff/laurent.hpp"

namespace qcoord {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedTerm {
  LaurentPoly coeff;
  std::vector<std::string> generators;  // in written order, powers expanded
};

// Returns the length of the generator token at the start of `rest`, or nullopt.
using GeneratorMatcher = std::function<std::optional<std::size_t>(std::string_view rest)>;

std::vector<ParsedTerm> parse_terms(std::string_view text, char coeff_var, const GeneratorMatcher& match);

LaurentPoly parse_laurent(std::string_view text, char var = 'v');
Cyclotomic parse_cyclotomic(std::string_view text, int ell, char var = 'q');

// JSON: list of [exponent, numerator, denominator]; big integers are emitted as strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);
// JSON: list of phi(ell) rational strings (coefficients of 1, q, q^2, ...).
nlohmann::json to_json(const Cyclotomic& x, int ell);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j, int ell);
nlohmann::json to_json(const Rational& r);

}  // namespace qcoord
