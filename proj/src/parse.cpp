#include "metab/parse.hpp"

#include <cctype>

#include "metab/errors.hpp"

namespace metab {

namespace {

class Parser {
public:
  Parser(const std::string &src, const AlgebraConfig &cfg)
      : src_(src), cfg_(cfg) {}

  LieElement run() {
    LieElement e = parse_elem();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError("expected an integer", pos_);
    return std::stol(src_.substr(start, pos_ - start));
  }

  Rational parse_rational() {
    Rational num = parse_int();
    if (peek() == '/') {
      ++pos_;
      long den = parse_int();
      if (den == 0)
        throw ParseError("zero denominator", pos_);
      num /= den;
    }
    return num;
  }

  LieElement parse_atom() {
    char c = peek();
    if (c == 'y') {
      ++pos_;
      long idx = parse_int();
      if (idx < 1 || idx > cfg_.rank)
        throw ParseError("generator index out of range", pos_);
      return LieElement::generator(cfg_, static_cast<int>(idx) - 1);
    }
    if (c == '[') {
      ++pos_;
      LieElement e = parse_elem();
      if (peek() != ',')
        throw ParseError("a commutator needs at least two entries", pos_);
      while (peek() == ',') {
        ++pos_;
        e = bracket(e, parse_elem());
      }
      expect(']');
      return e;
    }
    throw ParseError("expected 'y', '[' or a coefficient", pos_);
  }

  LieElement parse_term() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational coeff = parse_rational();
      if (peek() == '*') {
        ++pos_;
        return parse_atom() * coeff;
      }
      if (coeff == 0)
        return LieElement(cfg_);
      throw ParseError("expected '*' after coefficient", pos_);
    }
    return parse_atom();
  }

  LieElement parse_elem() {
    LieElement e(cfg_);
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    e = negate ? -parse_term() : parse_term();
    while (true) {
      char c = peek();
      if (c != '+' && c != '-')
        break;
      ++pos_;
      LieElement t = parse_term();
      e = (c == '+') ? e + t : e - t;
    }
    return e;
  }

  const std::string &src_;
  AlgebraConfig cfg_;
  std::size_t pos_ = 0;
};

} // namespace

LieElement parse_lie(const std::string &src, const AlgebraConfig &cfg) {
  return Parser(src, cfg).run();
}

} // namespace metab
