#include "qcoord/coeff/text.hpp"

#include <cctype>

namespace qcoord {

namespace {

class TermReader {
 public:
  TermReader(std::string_view text, char var, const GeneratorMatcher* match)
      : s_(text), var_(var), match_(match) {}

  std::vector<ParsedTerm> expr() {
    std::vector<ParsedTerm> out;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    while (true) {
      ParsedTerm t = term();
      if (negative) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip();
      if (peek() != '+' && peek() != '-') break;
      negative = get() == '-';
    }
    return out;
  }

  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long integer() {
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
    return neg ? -v : v;
  }

  long exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    if (peek() == '(') {
      ++pos_;
      long e = integer();
      expect(')');
      return e;
    }
    return integer();
  }

  ParsedTerm term() {
    ParsedTerm t;
    t.coeff = LaurentPoly(1);
    int factors = 0;
    while (true) {
      skip();
      if (factors > 0 && peek() == '*') {
        ++pos_;
        skip();
      }
      const char c = peek();
      if (c == '\0' || c == '+' || c == '-' || c == ')') break;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
          ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad fraction");
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        t.coeff *= LaurentPoly(parse_rational(s_.substr(start, pos_ - start)));
      } else if (c == '(') {
        ++pos_;
        std::size_t depth = 1, end = pos_;
        while (end < s_.size() && depth > 0) {
          if (s_[end] == '(') ++depth;
          if (s_[end] == ')') --depth;
          ++end;
        }
        if (depth != 0) fail("unbalanced parenthesis");
        TermReader sub(s_.substr(pos_, end - 1 - pos_), var_, nullptr);
        auto terms = sub.expr();
        if (!sub.done()) sub.fail("trailing input");
        LaurentPoly sum;
        for (auto& x : terms) sum += x.coeff;
        pos_ = end;
        long e = exponent();
        if (e < 0) fail("negative power of a parenthesised coefficient");
        t.coeff *= sum.pow(static_cast<unsigned>(e));
      } else {
        std::optional<std::size_t> len;
        if (match_) len = (*match_)(s_.substr(pos_));
        if (len && *len > 0) {
          std::string gen(s_.substr(pos_, *len));
          pos_ += *len;
          long e = exponent();
          if (e < 0) fail("negative power of a generator");
          for (long i = 0; i < e; ++i) t.generators.push_back(gen);
        } else if (c == var_) {
          ++pos_;
          t.coeff *= LaurentPoly::monomial(static_cast<int>(exponent()));
        } else {
          fail(std::string("unexpected character '") + c + "'");
        }
      }
      ++factors;
    }
    if (factors == 0) fail("empty term");
    return t;
  }

  std::string_view s_;
  char var_;
  const GeneratorMatcher* match_;
  std::size_t pos_ = 0;
};

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  return mpz_class(j.get<std::string>());
}

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, char coeff_var, const GeneratorMatcher& match) {
  TermReader r(text, coeff_var, &match);
  if (r.done()) r.fail("empty expression");
  auto out = r.expr();
  if (!r.done()) r.fail("trailing input");
  return out;
}

LaurentPoly parse_laurent(std::string_view text, char var) {
  TermReader r(text, var, nullptr);
  if (r.done()) r.fail("empty expression");
  auto terms = r.expr();
  if (!r.done()) r.fail("trailing input");
  LaurentPoly sum;
  for (auto& t : terms) sum += t.coeff;
  return sum;
}

Cyclotomic parse_cyclotomic(std::string_view text, int ell, char var) {
  return specialize(parse_laurent(text, var), ell);
}

nlohmann::json to_json(const Rational& r) { return r.get_str(); }

nlohmann::json to_json(const LaurentPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({e, integer_json(c.get_num()), integer_json(c.get_den())});
  return out;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& triple : j) {
    Rational c(integer_from_json(triple.at(1)), integer_from_json(triple.at(2)));
    c.canonicalize();
    p.add_term(triple.at(0).get<int>(), c);
  }
  return p;
}

nlohmann::json to_json(const Cyclotomic& x, int ell) {
  auto out = nlohmann::json::array();
  for (const auto& c : x.coeff_vector(ell)) out.push_back(c.get_str());
  return out;
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j, int ell) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
  return Cyclotomic::from_coeffs(ell, std::move(coeffs));
}

}  // namespace qcoord
