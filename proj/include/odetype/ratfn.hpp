#pragma once

#include <string>

#include "odetype/poly.hpp"

namespace odetype {

/// Canonical quotient num/den of polynomials over Q in one variable:
/// den monic, gcd(num, den) = 1. Zero is 0/1.
///
/// Used both for elements of Q(y) and for the coefficient field Q(x).
/// Constants carry a tag but combine freely with any variable.
class RatFn {
 public:
  RatFn() : num_(Var::X), den_(QPoly::constant(Var::X, BigRat(1))) {}
  RatFn(int c) : RatFn(BigRat(c)) {}  // NOLINT
  RatFn(const BigRat& c, Var v = Var::X)  // NOLINT
      : num_(QPoly::constant(v, c)), den_(QPoly::constant(v, BigRat(1))) {}
  RatFn(QPoly num) : num_(std::move(num)), den_(QPoly::constant(num_.var(), BigRat(1))) {}  // NOLINT
  RatFn(QPoly num, QPoly den);

  static RatFn variable(Var v) { return RatFn(QPoly::variable(v)); }

  Var var() const { return num_.is_constant() ? den_.var() : num_.var(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant; throws std::domain_error otherwise.
  BigRat constant_value() const;

  RatFn with_var(Var v) const { return RatFn(num_.with_var(v), den_.with_var(v), Canonical{}); }

  RatFn operator-() const { return RatFn(-num_, den_, Canonical{}); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFn pow(int e) const;
  RatFn inverse() const;
  /// d/dv with v the function's own variable.
  RatFn derivative() const;
  /// Value at a point; throws std::domain_error at a pole.
  BigRat operator()(const BigRat& at) const;

  /// Parseable text: "num", "num/den" or "(num)/(den)".
  std::string to_string() const;

 private:
  struct Canonical {};
  RatFn(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RatFn& r) { return r.is_zero(); }

/// Substitutes v -> v + shift.
RatFn shift(const RatFn& r, const BigRat& by);

}  // namespace odetype
