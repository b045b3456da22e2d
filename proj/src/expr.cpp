#include "odetype/expr.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace odetype {

namespace {

std::string kind_text(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Lexical: return "lexical error";
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::UnknownIdentifier: return "unknown identifier";
  }
  return "error";
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, const std::string& detail, std::size_t offset)
    : InputError(kind_text(kind) + " (" + detail + ")", offset), kind_(kind) {}

Expr Expr::integer(BigInt v, std::size_t at) {
  Expr e;
  e.kind = ExprKind::Int;
  e.value = std::move(v);
  e.offset = at;
  return e;
}

Expr Expr::symbol(ExprKind k, std::size_t at) {
  Expr e;
  e.kind = k;
  e.offset = at;
  return e;
}

Expr Expr::unary(ExprKind k, Expr a, std::size_t at) {
  Expr e;
  e.kind = k;
  e.offset = at;
  e.lhs = std::make_shared<const Expr>(std::move(a));
  return e;
}

Expr Expr::binary(ExprKind k, Expr a, Expr b, std::size_t at) {
  Expr e = unary(k, std::move(a), at);
  e.rhs = std::make_shared<const Expr>(std::move(b));
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ExprKind::Int) return a.value == b.value;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs) || static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs))
    return false;
  return (!a.lhs || *a.lhs == *b.lhs) && (!a.rhs || *a.rhs == *b.rhs);
}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Int, Ident, Op, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string id = s.substr(i, j - i);
      if (id == "y" && j < s.size() && s[j] == '\'') {
        id = "y'";
        ++j;
      }
      if (id != "x" && id != "y" && id != "y'" && id != "z")
        throw ParseError(ParseErrorKind::UnknownIdentifier, "'" + id + "'", i);
      out.push_back({Tok::Ident, id, i});
      i = j;
    } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '^') {
      out.push_back({Tok::Op, std::string(1, static_cast<char>(ch)), i});
      ++i;
    } else if (ch == '(') {
      out.push_back({Tok::LParen, "(", i++});
    } else if (ch == ')') {
      out.push_back({Tok::RParen, ")", i++});
    } else {
      std::string shown = ch < 0x80 && std::isprint(ch) ? std::string(1, static_cast<char>(ch)) : "byte " + std::to_string(ch);
      throw ParseError(ParseErrorKind::Lexical, "unexpected character " + shown, i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> t) : t_(std::move(t)) {}

  Expr parse() {
    if (peek().type == Tok::End) throw ParseError(ParseErrorKind::Syntax, "empty expression", peek().offset);
    Expr e = sum();
    if (peek().type != Tok::End)
      throw ParseError(ParseErrorKind::Syntax, "unexpected '" + peek().text + "'", peek().offset);
    return e;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  bool at_op(char c) const { return peek().type == Tok::Op && peek().text[0] == c; }
  bool starts_operand() const {
    const Token& k = peek();
    return k.type == Tok::Int || k.type == Tok::Ident || k.type == Tok::LParen || (k.type == Tok::Op && k.text == "-");
  }
  // An operator with nothing usable after it is reported at the operator.
  void need_operand(const Token& op) const {
    if (!starts_operand()) throw ParseError(ParseErrorKind::Syntax, "'" + op.text + "' is missing its operand", op.offset);
  }

  Expr sum() {
    Expr e = product();
    while (at_op('+') || at_op('-')) {
      Token op = t_[pos_++];
      need_operand(op);
      e = Expr::binary(op.text == "+" ? ExprKind::Add : ExprKind::Sub, std::move(e), product(), op.offset);
    }
    return e;
  }

  Expr product() {
    Expr e = unary();
    while (at_op('*') || at_op('/')) {
      Token op = t_[pos_++];
      need_operand(op);
      e = Expr::binary(op.text == "*" ? ExprKind::Mul : ExprKind::Div, std::move(e), unary(), op.offset);
    }
    return e;
  }

  Expr unary() {
    if (at_op('-')) {
      Token op = t_[pos_++];
      need_operand(op);
      return Expr::unary(ExprKind::Neg, unary(), op.offset);
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (at_op('^')) {
      Token op = t_[pos_++];
      need_operand(op);
      return Expr::binary(ExprKind::Pow, std::move(base), unary(), op.offset);
    }
    return base;
  }

  Expr primary() {
    const Token k = peek();
    switch (k.type) {
      case Tok::Int:
        ++pos_;
        return Expr::integer(BigInt(k.text), k.offset);
      case Tok::Ident:
        ++pos_;
        if (k.text == "x") return Expr::symbol(ExprKind::X, k.offset);
        if (k.text == "y") return Expr::symbol(ExprKind::Y, k.offset);
        return Expr::symbol(ExprKind::Z, k.offset);
      case Tok::LParen: {
        ++pos_;
        if (peek().type == Tok::RParen) throw ParseError(ParseErrorKind::Syntax, "empty parentheses", peek().offset);
        Expr e = sum();
        if (peek().type != Tok::RParen) throw ParseError(ParseErrorKind::Syntax, "unclosed '('", k.offset);
        ++pos_;
        return e;
      }
      case Tok::End: throw ParseError(ParseErrorKind::Syntax, "unexpected end of input", k.offset);
      default: throw ParseError(ParseErrorKind::Syntax, "unexpected '" + k.text + "'", k.offset);
    }
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(lex(text)).parse(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

int prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool paren) {
  std::string s = print_expr(e);
  return paren ? "(" + s + ")" : s;
}

}  // namespace

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Int: return e.value.get_str();
    case ExprKind::X: return "x";
    case ExprKind::Y: return "y";
    case ExprKind::Z: return "y'";
    case ExprKind::Neg: return "-" + wrap(*e.lhs, prec(*e.lhs) < 3);
    case ExprKind::Pow: return wrap(*e.lhs, prec(*e.lhs) <= 4) + "^" + wrap(*e.rhs, prec(*e.rhs) < 3);
    default: break;
  }
  int p = prec(e);
  const char* op = e.kind == ExprKind::Add ? " + " : e.kind == ExprKind::Sub ? " - " : e.kind == ExprKind::Mul ? "*" : "/";
  return wrap(*e.lhs, prec(*e.lhs) < p) + op + wrap(*e.rhs, prec(*e.rhs) <= p);
}

bool mentions(const Expr& e, ExprKind symbol) {
  if (e.kind == symbol) return true;
  return (e.lhs && mentions(*e.lhs, symbol)) || (e.rhs && mentions(*e.rhs, symbol));
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

const char* symbol_text(ExprKind k) { return k == ExprKind::X ? "x" : k == ExprKind::Y ? "y" : "y'"; }

long integer_exponent(const RatFn& r, std::size_t at) {
  if (!r.is_constant() || !r.constant_value().is_integer()) throw InputError("exponent must be an integer", at);
  BigInt n = r.constant_value().numerator();
  if (!n.fits_slong_p() || abs(n) > 10000) throw InputError("exponent out of range", at);
  return n.get_si();
}

RatFn eval_rf(const Expr& e, Var v) {
  switch (e.kind) {
    case ExprKind::Int: return RatFn(BigRat(e.value), v);
    case ExprKind::X:
    case ExprKind::Y:
    case ExprKind::Z: {
      Var here = e.kind == ExprKind::X ? Var::X : e.kind == ExprKind::Y ? Var::Y : Var::Z;
      if (here != v)
        throw InputError(std::string(symbol_text(e.kind)) + " is not allowed here (expected a function of " +
                             std::string(var_name(v)) + ")",
                         e.offset);
      return RatFn::variable(v);
    }
    case ExprKind::Neg: return -eval_rf(*e.lhs, v);
    case ExprKind::Add: return eval_rf(*e.lhs, v) + eval_rf(*e.rhs, v);
    case ExprKind::Sub: return eval_rf(*e.lhs, v) - eval_rf(*e.rhs, v);
    case ExprKind::Mul: return eval_rf(*e.lhs, v) * eval_rf(*e.rhs, v);
    case ExprKind::Div: {
      RatFn d = eval_rf(*e.rhs, v);
      if (d.is_zero()) throw InputError("division by zero", e.offset);
      return eval_rf(*e.lhs, v) / d;
    }
    case ExprKind::Pow: {
      long n = integer_exponent(eval_rf(*e.rhs, v), e.offset);
      RatFn b = eval_rf(*e.lhs, v);
      if (n < 0 && b.is_zero()) throw InputError("zero to a negative power", e.offset);
      return b.pow(static_cast<int>(n));
    }
  }
  throw std::logic_error("eval_rf: bad node");
}

using BiMap = std::map<Monomial, RatFn>;

void add_into(BiMap& acc, const Monomial& m, const RatFn& c) {
  RatFn s = acc.count(m) ? acc[m] + c : c;
  if (s.is_zero())
    acc.erase(m);
  else
    acc[m] = s;
}

BiMap mul(const BiMap& a, const BiMap& b) {
  BiMap r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_into(r, {ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

// Coefficient when the polynomial is free of Y and Z.
std::optional<RatFn> scalar_of(const BiMap& a) {
  if (a.empty()) return RatFn();
  if (a.size() == 1 && a.begin()->first == Monomial{0, 0}) return a.begin()->second;
  return std::nullopt;
}

BiMap eval_bi(const Expr& e, bool allow_x) {
  switch (e.kind) {
    case ExprKind::Int: {
      BiMap r;
      if (e.value != 0) r[{0, 0}] = RatFn(BigRat(e.value));
      return r;
    }
    case ExprKind::X:
      if (!allow_x) throw InputError("x is not allowed in const mode", e.offset);
      return {{{0, 0}, RatFn::variable(Var::X)}};
    case ExprKind::Y: return {{{1, 0}, RatFn(1)}};
    case ExprKind::Z: return {{{0, 1}, RatFn(1)}};
    case ExprKind::Neg: {
      BiMap r = eval_bi(*e.lhs, allow_x);
      for (auto& [m, c] : r) c = -c;
      return r;
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      BiMap r = eval_bi(*e.lhs, allow_x);
      for (const auto& [m, c] : eval_bi(*e.rhs, allow_x)) add_into(r, m, e.kind == ExprKind::Add ? c : -c);
      return r;
    }
    case ExprKind::Mul: return mul(eval_bi(*e.lhs, allow_x), eval_bi(*e.rhs, allow_x));
    case ExprKind::Div: {
      auto d = scalar_of(eval_bi(*e.rhs, allow_x));
      if (!d) throw InputError("division by an expression in y or y'", e.offset);
      if (d->is_zero()) throw InputError("division by zero", e.offset);
      BiMap r = eval_bi(*e.lhs, allow_x);
      RatFn inv = d->inverse();
      for (auto& [m, c] : r) c = c * inv;
      return r;
    }
    case ExprKind::Pow: {
      auto ex = scalar_of(eval_bi(*e.rhs, allow_x));
      if (!ex) throw InputError("exponent must be an integer", e.offset);
      long n = integer_exponent(*ex, e.offset);
      BiMap b = eval_bi(*e.lhs, allow_x);
      if (n < 0) {
        auto s = scalar_of(b);
        if (!s) throw InputError("negative power of an expression in y or y'", e.offset);
        if (s->is_zero()) throw InputError("zero to a negative power", e.offset);
        return {{{0, 0}, s->pow(static_cast<int>(n))}};
      }
      BiMap r{{{0, 0}, RatFn(1)}};
      for (long i = 0; i < n; ++i) r = mul(r, b);
      return r;
    }
  }
  throw std::logic_error("eval_bi: bad node");
}

}  // namespace

RatFn eval_ratfn(const Expr& e, Var v) { return eval_rf(e, v); }

BiDiffPoly eval_bidiff(const Expr& e, DerivationMode mode) {
  BiMap m = eval_bi(e, mode == DerivationMode::RationalQx);
  if (m.empty()) throw InputError("equation is identically zero");
  return BiDiffPoly(mode, std::move(m));
}

}  // namespace odetype
