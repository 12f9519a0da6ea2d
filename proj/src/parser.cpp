#include "germlab/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "germlab/error.hpp"

namespace germlab {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' INT]
// atom   := INT ['/' INT] | IDENT | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), vars_(variables) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial sum(vars_);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial t = term();
    sum += negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial next = term();
      if (c == '-') {
        sum -= next;
      } else {
        sum += next;
      }
    }
    return sum;
  }

  Polynomial term() {
    Polynomial prod = factor();
    while (peek() == '*') {
      ++pos_;
      prod = prod * factor();
    }
    return prod;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      if (peek() == '-') fail("negative exponent");
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 5) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t den_pos = pos_;
        std::string d = read_digits();
        if (d.empty()) fail("expected integer denominator");
        den = Integer(d);
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      }
      if (peek() == '.') fail("decimal fractions are not supported; use a/b");
      Rational q(Integer(num), den);
      q.canonicalize();
      return Polynomial::constant(vars_, GaussianRational(q));
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") {
        return Polynomial::constant(vars_, GaussianRational::imaginary_unit());
      }
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate_variable_names(const std::vector<std::string>& variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !is_ident_start(v[0]) ||
        !std::all_of(v.begin(), v.end(), is_ident_char)) {
      throw ValidationError("invalid variable name '" + v + "'");
    }
    if (v == "i") throw ValidationError("'i' is reserved for the imaginary unit");
    if (!seen.insert(v).second) throw ValidationError("duplicate variable '" + v + "'");
  }
  if (variables.size() > kMaxVariables) {
    throw ValidationError("too many variables");
  }
}

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variables) {
  validate_variable_names(variables);
  return Parser(text, variables).parse();
}

}  // namespace germlab
