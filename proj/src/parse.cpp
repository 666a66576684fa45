#include "mfkit/parse.hpp"

#include <algorithm>
#include <cctype>

#include "mfkit/error.hpp"

namespace mfkit {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = atom();
    if (accept('^')) {
      bool negative = accept('-');
      skip_space();
      std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected integer exponent");
      if (digits.size() > 6) throw ParseError("exponent too large", at);
      long e = std::stol(digits);
      if (negative) {
        if (!base.is_constant() || base.is_zero()) throw ParseError("negative exponent on a non-invertible base", at);
        return Polynomial(ring_, base.constant_term().pow(-e));
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      mpq_class value{mpz_class(num)};
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator", at);
        value = mpq_class(mpz_class(num), d);
        value.canonicalize();
      }
      return Polynomial(ring_, Cyclo(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name.size() > 4 && name.compare(0, 4, "zeta") == 0 &&
          name.find_first_not_of("0123456789", 4) == std::string::npos) {
        if (name.size() > 10) throw ParseError("cyclotomic order too large", start);
        unsigned long k = std::stoul(name.substr(4));
        if (k == 0) throw ParseError("zero-order cyclotomic root", start);
        return Polynomial(ring_, Cyclo::zeta(static_cast<unsigned>(k)));
      }
      if (!ring_.contains(name)) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, name);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, unsigned order) {
  if (order == 0) throw ParseError("zero-order cyclotomic field", 0);
  return Parser(text, ring).parse();
}

Cyclo parse_cyclo(std::string_view text) {
  Polynomial p = Parser(text, Ring()).parse();
  return p.constant_term();
}

Ring variables_of(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_') {
      ++i;
      continue;
    }
    std::size_t k = i;
    while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) ++k;
    std::string id(text.substr(i, k - i));
    const bool is_zeta = id.size() > 4 && id.compare(0, 4, "zeta") == 0 &&
                         id.find_first_not_of("0123456789", 4) == std::string::npos;
    if (!is_zeta && std::find(names.begin(), names.end(), id) == names.end()) names.push_back(std::move(id));
    i = k;
  }
  return Ring(names);
}

}  // namespace mfkit
