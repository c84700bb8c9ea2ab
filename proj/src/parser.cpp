#include "hilbert/parser.hpp"

#include <cctype>
#include <map>

#include "hilbert/errors.hpp"

namespace hilbert {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())); }

  Integer parse_uint() {
    if (!at_digit())
      throw SyntaxError("expected a number", pos_);
    Integer value = 0;
    while (at_digit()) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// term := coeff? ('*'? 'x' ('^' uint)?)?  with an optional sign carried in
// from the expression level (also accepted on the leading term).
void parse_term(Cursor& cur, int sign, std::map<unsigned, Rational>& acc) {
  cur.skip_ws();
  bool have_coeff = false;
  Rational coeff = 1;
  if (cur.at_digit()) {
    Integer num = cur.parse_uint();
    coeff = num;
    have_coeff = true;
    cur.skip_ws();
    if (cur.accept('/')) {
      cur.skip_ws();
      Integer den = cur.parse_uint();
      if (den == 0)
        throw ZeroDenominator();
      coeff = Rational(num, den);
      cur.skip_ws();
    }
  }
  bool starred = cur.accept('*');
  if (starred)
    cur.skip_ws();
  unsigned power = 0;
  if (cur.accept('x')) {
    power = 1;
    cur.skip_ws();
    if (cur.accept('^')) {
      cur.skip_ws();
      Integer p = cur.parse_uint();
      power = p.convert_to<unsigned>();
    }
  } else if (starred || !have_coeff) {
    cur.fail("expected a term");
  }
  acc[power] += sign * coeff;
}

}  // namespace

Polynomial parse_poly(std::string_view text) {
  Cursor cur(text);
  std::map<unsigned, Rational> acc;
  cur.skip_ws();
  int sign = 1;
  if (cur.accept('-'))
    sign = -1;
  else
    cur.accept('+');
  parse_term(cur, sign, acc);
  while (true) {
    cur.skip_ws();
    if (cur.eof())
      break;
    if (cur.accept('+'))
      sign = 1;
    else if (cur.accept('-'))
      sign = -1;
    else
      cur.fail("expected '+' or '-'");
    parse_term(cur, sign, acc);
  }
  std::vector<Rational> coeffs(acc.empty() ? 0 : acc.rbegin()->first + 1);
  for (const auto& [power, c] : acc)
    coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

std::vector<std::vector<unsigned>> parse_generators(std::string_view text, unsigned n_vars) {
  Cursor cur(text);
  std::vector<std::vector<unsigned>> gens;
  cur.skip_ws();
  if (cur.eof())
    return gens;
  while (true) {
    std::vector<unsigned> expo(n_vars, 0);
    // monomial := factor ('*' factor)* ; factor := 'x' uint ('^' uint)?
    while (true) {
      cur.skip_ws();
      if (!cur.accept('x'))
        cur.fail("expected a variable x1..x" + std::to_string(n_vars));
      std::size_t at = cur.pos();
      Integer index = cur.parse_uint();
      if (index < 1 || index > n_vars)
        throw SyntaxError("variable index out of range 1.." + std::to_string(n_vars), at);
      unsigned exponent = 1;
      cur.skip_ws();
      if (cur.accept('^')) {
        cur.skip_ws();
        exponent = cur.parse_uint().convert_to<unsigned>();
      }
      expo[index.convert_to<unsigned>() - 1] += exponent;
      cur.skip_ws();
      if (!cur.accept('*'))
        break;
    }
    gens.push_back(std::move(expo));
    if (cur.eof())
      break;
    if (!cur.accept(','))
      cur.fail("expected ',' between generators");
  }
  return gens;
}

}  // namespace hilbert
