#include "gwc/parse.hpp"

#include <cctype>
#include <map>

namespace gwc {

namespace {

struct Token {
  enum Kind { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  Integer value;   // Int
  int var_index;   // Var
  size_t pos;
};

class Lexer {
 public:
  Lexer(const std::string& text, const std::map<std::string, int>& vars)
      : text_(text), vars_(vars) {
    next();
  }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

 private:
  void next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.pos = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': tok_.kind = Token::Plus; ++pos_; return;
      case '-': tok_.kind = Token::Minus; ++pos_; return;
      case '*': tok_.kind = Token::Star; ++pos_; return;
      case '/': tok_.kind = Token::Slash; ++pos_; return;
      case '^': tok_.kind = Token::Caret; ++pos_; return;
      case '(': tok_.kind = Token::LParen; ++pos_; return;
      case ')': tok_.kind = Token::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Int;
      tok_.value = Integer(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name(1, c);
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        name += text_[pos_];
        ++pos_;
      }
      auto it = vars_.find(name);
      if (it == vars_.end())
        fail(Errc::ParseError, "unknown variable '" + name + "' at position " +
                                   std::to_string(tok_.pos));
      tok_.kind = Token::Var;
      tok_.var_index = it->second;
      return;
    }
    fail(Errc::ParseError, std::string("unexpected character '") + c + "' at position " +
                               std::to_string(pos_));
  }

  const std::string& text_;
  const std::map<std::string, int>& vars_;
  Token tok_;
  size_t pos_ = 0;
};

// numerator/denominator pair so '/' works uniformly
struct Frac {
  PolyQ num;
  PolyQ den;
};

class Parser {
 public:
  Parser(const std::string& text, const std::map<std::string, int>& vars, int nvars)
      : lex_(text, vars), nvars_(nvars) {}

  Frac parse() {
    Frac f = expr();
    if (lex_.peek().kind != Token::End)
      fail(Errc::ParseError, "trailing input at position " + std::to_string(lex_.peek().pos));
    return f;
  }

 private:
  Frac expr() {
    Frac acc = term();
    while (true) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Plus) {
        lex_.take();
        acc = add(acc, term());
      } else if (k == Token::Minus) {
        lex_.take();
        acc = add(acc, neg(term()));
      } else {
        return acc;
      }
    }
  }

  Frac term() {
    Frac acc = unary();
    while (true) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Star) {
        lex_.take();
        acc = mul(acc, unary());
      } else if (k == Token::Slash) {
        lex_.take();
        acc = div(acc, unary());
      } else if (k == Token::Var || k == Token::LParen) {
        acc = mul(acc, unary());  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Frac unary() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return neg(unary());
    }
    return power();
  }

  Frac power() {
    Frac base = atom();
    while (lex_.peek().kind == Token::Caret) {
      lex_.take();
      Token e = lex_.take();
      if (e.kind != Token::Int)
        fail(Errc::ParseError, "expected an integer exponent at position " +
                                   std::to_string(e.pos));
      if (e.value > 512) fail(Errc::ParseError, "exponent too large");
      long exp = static_cast<long>(e.value);
      Frac acc = constant(Rational(1));
      for (long i = 0; i < exp; ++i) acc = mul(acc, base);
      base = acc;
    }
    return base;
  }

  Frac atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Int:
        return constant(Rational(t.value));
      case Token::Var: {
        Frac f = constant(Rational(1));
        f.num = PolyQ::variable(nvars_, t.var_index, Rational(1));
        return f;
      }
      case Token::LParen: {
        Frac f = expr();
        if (lex_.take().kind != Token::RParen)
          fail(Errc::ParseError, "missing ')'");
        return f;
      }
      default:
        fail(Errc::ParseError, "unexpected token at position " + std::to_string(t.pos));
    }
  }

  Frac constant(const Rational& c) {
    return Frac{PolyQ::constant(nvars_, c), PolyQ::constant(nvars_, Rational(1))};
  }

  Frac add(const Frac& a, const Frac& b) {
    return Frac{a.num * b.den + b.num * a.den, a.den * b.den};
  }
  Frac neg(const Frac& a) { return Frac{-a.num, a.den}; }
  Frac mul(const Frac& a, const Frac& b) { return Frac{a.num * b.num, a.den * b.den}; }
  Frac div(const Frac& a, const Frac& b) {
    if (b.num.is_zero()) fail(Errc::ParseError, "division by zero");
    return Frac{a.num * b.den, a.den * b.num};
  }

  Lexer lex_;
  int nvars_;
};

const std::map<std::string, int>& multivar_names() {
  static const std::map<std::string, int> names = [] {
    std::map<std::string, int> m{{"x", 0}, {"y", 1}, {"z", 2}, {"w", 3}};
    for (int i = 0; i <= 9; ++i) m["x" + std::to_string(i)] = i;
    return m;
  }();
  return names;
}

int max_var_index(const std::string& text, const std::map<std::string, int>& vars) {
  Lexer lex(text, vars);
  int mx = -1;
  while (lex.peek().kind != Token::End) {
    Token t = lex.take();
    if (t.kind == Token::Var) mx = std::max(mx, t.var_index);
  }
  return mx;
}

UPoly to_upoly(const PolyQ& p) {
  std::vector<Rational> c;
  for (const auto& [m, coeff] : p.terms()) {
    size_t e = static_cast<size_t>(m[0]);
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] = coeff;
  }
  return UPoly(std::move(c));
}

PolyQ require_polynomial(Frac f) {
  // constant denominators are absorbed; anything else is not a polynomial
  if (f.den.term_count() == 1 && mono_is_one(f.den.terms().begin()->first)) {
    Rational d = f.den.terms().begin()->second;
    return f.num.scaled(Rational(1) / d);
  }
  fail(Errc::ParseError, "division by a non-constant polynomial");
}

}  // namespace

PolyQ parse_poly(const std::string& text, int min_vars) {
  const auto& names = multivar_names();
  int nvars = std::max({max_var_index(text, names) + 1, min_vars, 1});
  Parser parser(text, names, nvars);
  return require_polynomial(parser.parse());
}

UPoly parse_upoly_x(const std::string& text) {
  static const std::map<std::string, int> names{{"x", 0}, {"x0", 0}};
  Parser parser(text, names, 1);
  return to_upoly(require_polynomial(parser.parse()));
}

UPoly parse_upoly_gen(const std::string& text) {
  static const std::map<std::string, int> names{{"a", 0}};
  Parser parser(text, names, 1);
  return to_upoly(require_polynomial(parser.parse()));
}

RationalFunction parse_ratfunc(const std::string& text) {
  static const std::map<std::string, int> names{{"t", 0}};
  Parser parser(text, names, 1);
  Frac f = parser.parse();
  UPoly num = to_upoly(f.num);
  UPoly den = to_upoly(f.den);
  if (den.is_zero()) fail(Errc::ParseError, "zero denominator");
  return RationalFunction(num, den);
}

}  // namespace gwc
