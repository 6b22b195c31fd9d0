#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "secreg/polynomial.hpp"

namespace secreg {

std::string monomial_to_string(const Monomial& m, const Ring& R);

// Splits an identifier such as "st" or "x0x3" into ring variables when it
// is not itself a variable name. Empty result: no split exists.
std::vector<int> split_identifier(std::string_view ident, const Ring& R);

namespace detail {

template <class Field>
class PolyParser {
 public:
  using P = BasicPolynomial<Field>;

  PolyParser(std::string_view s, const RingPtr& R) : s_(s), R_(R), F_(field_of<Field>(*R)) {}

  P parse() {
    P p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool factor_starts() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  P expr() {
    skip();
    bool negate = false;
    if (at('+') || at('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    P acc = term();
    if (negate) acc = -acc;
    while (at('+') || at('-')) {
      bool minus = s_[pos_] == '-';
      ++pos_;
      P t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  P term() {
    P acc = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (factor_starts()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  int exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 5) fail("exponent too large");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (e > kMaxExponent) fail("exponent too large");
    return e;
  }

  P factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      if (at('^')) {
        ++pos_;
        inner = inner.pow(exponent());
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      typename Field::Element v = F_.from_decimal(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t slash = pos_++;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) {
          pos_ = slash;
          fail("expected denominator");
        }
        typename Field::Element den = F_.from_decimal(s_.substr(dstart, pos_ - dstart));
        if (F_.is_zero(den)) {
          pos_ = dstart;
          fail("zero denominator");
        }
        v = F_.div(v, den);
      }
      return P::scalar(R_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view ident = s_.substr(start, pos_ - start);
      std::vector<int> vars = split_identifier(ident, *R_);
      if (vars.empty()) {
        pos_ = start;
        fail("unknown variable '" + std::string(ident) + "'");
      }
      Monomial m;
      for (int v : vars) m.set(v, m[v] + 1);
      int last = vars.back();
      if (at('^')) {
        ++pos_;
        int e = exponent();
        m.set(last, m[last] - 1 + e);
      }
      return P::monomial(R_, m);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  RingPtr R_;
  Field F_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class Field>
BasicPolynomial<Field> parse_polynomial(std::string_view text, const RingPtr& R) {
  return detail::PolyParser<Field>(text, R).parse();
}

inline Poly parse_poly(std::string_view text, const RingPtr& R) { return parse_polynomial<PrimeField>(text, R); }

// Printer; output parses back to the same polynomial.
template <class Field>
std::string to_string(const BasicPolynomial<Field>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& F = f.field();
  const Ring& R = *f.ring();
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = F.to_string(t.c);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (neg) out += "-";
    else if (!first) out += "+";
    first = false;
    if (t.m.is_one()) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += monomial_to_string(t.m, R);
  }
  return out;
}

}  // namespace secreg
