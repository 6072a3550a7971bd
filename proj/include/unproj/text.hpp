#pragma once

// Polynomial text form:
//   poly   ::= term (('+' | '-') term)*
//   term   ::= [sign] [coeff '*'] factor ('*' factor)* | [sign] coeff
//   factor ::= varname ['^' posint]
//   coeff  ::= int | int '/' posint
// Whitespace is insignificant. `format_poly` emits terms in descending
// order under the ring's order and `parse_poly` inverts it exactly.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "unproj/polynomial.hpp"

namespace unproj {

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string_view digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return text_.substr(start, pos_ - start);
  }
  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected a variable name");
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField F>
Polynomial<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
  const F& k = ring->field();
  detail::PolyLexer lex(text);
  TermList<F> terms;
  if (lex.at_end()) lex.fail("empty polynomial");
  bool first = true;
  while (!lex.at_end()) {
    bool negative = false;
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      negative = true;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;

    typename F::Element coeff = k.one();
    std::vector<int> exps(ring->size(), 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      std::string_view num = lex.digits();
      std::string_view den = "1";
      if (lex.accept('/')) {
        den = lex.digits();
        if (den.find_first_not_of('0') == std::string_view::npos) lex.fail("zero denominator");
      }
      try {
        coeff = k.from_decimal(num, den);
      } catch (const FieldError& e) {
        lex.fail(e.what());
      }
      need_factor = lex.accept('*');
    }
    while (need_factor) {
      std::string_view name = lex.identifier();
      auto idx = ring->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'");
      int power = 1;
      if (lex.accept('^')) {
        std::string_view d = lex.digits();
        if (d.size() > 3 || std::stoi(std::string(d)) < 1 || std::stoi(std::string(d)) > Monomial::kMaxExponent)
          lex.fail("exponent out of range");
        power = std::stoi(std::string(d));
      }
      exps[*idx] += power;
      if (exps[*idx] > Monomial::kMaxExponent) lex.fail("exponent out of range");
      need_factor = lex.accept('*');
    }
    if (negative) coeff = k.neg(coeff);
    terms.push_back({ring->monomial(exps), coeff});
  }
  return Polynomial<F>(ring, std::move(terms));
}

template <CoefficientField F>
std::string format_monomial(const Monomial& m, const PolynomialRing<F>& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

template <CoefficientField F>
std::string format_poly(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const F& k = f.field();
  std::string out;
  for (const auto& t : f.terms()) {
    std::string c = k.to_string(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += format_monomial(t.mono, *f.ring());
    }
  }
  return out;
}

}  // namespace unproj
