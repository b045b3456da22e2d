#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "odetype/curve.hpp"

namespace odetype {

/// Bad user input: lexical, syntax or evaluation errors, with the byte
/// offset into the source text when one applies.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(offset ? what + " at offset " + std::to_string(*offset) : what), offset_(offset) {}
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  std::optional<std::size_t> offset_;
};

enum class ParseErrorKind { Lexical, Syntax, UnknownIdentifier };

class ParseError : public InputError {
 public:
  ParseError(ParseErrorKind kind, const std::string& detail, std::size_t offset);
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// Z is y'.
enum class ExprKind { Int, X, Y, Z, Neg, Add, Sub, Mul, Div, Pow };

/// Immutable syntax tree. Integer literals are non-negative; a rational
/// p/q is Div(p, q). `offset` locates the node's token and is ignored by ==.
struct Expr {
  ExprKind kind = ExprKind::Int;
  BigInt value = 0;
  std::size_t offset = 0;
  std::shared_ptr<const Expr> lhs, rhs;

  static Expr integer(BigInt v, std::size_t at = 0);
  static Expr symbol(ExprKind k, std::size_t at = 0);
  static Expr unary(ExprKind k, Expr a, std::size_t at = 0);
  static Expr binary(ExprKind k, Expr a, Expr b, std::size_t at = 0);

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Precedence ^ > unary minus > * / > + -; binaries associate left except ^.
Expr parse_expr(const std::string& text);

/// Canonical text with minimal parentheses; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

bool mentions(const Expr& e, ExprKind symbol);

/// Rational function of `v`; any other variable is an input error.
RatFn eval_ratfn(const Expr& e, Var v);

/// f(Y, Z) with coefficients in Q(x); x is rejected in ConstantsQ mode.
/// Division is only allowed by expressions free of y and y'.
BiDiffPoly eval_bidiff(const Expr& e, DerivationMode mode);

}  // namespace odetype
