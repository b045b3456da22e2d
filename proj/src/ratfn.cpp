#include "odetype/ratfn.hpp"

#include <stdexcept>

#include "odetype/exactalg.hpp"

namespace odetype {

RatFn::RatFn(QPoly num, QPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
  Var v = num.merged_var(den);
  num = num.with_var(v);
  den = den.with_var(v);
  if (num.is_zero()) {
    num_ = QPoly(v);
    den_ = QPoly::constant(v, 1);
    return;
  }
  if (!den.is_constant()) {
    QPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  BigRat l = den.lc().inverse();
  num_ = num * l;
  den_ = den * l;
}

BigRat RatFn::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFn is not a constant: " + to_string());
  return num_.coeff(0);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn(QPoly(a.num_.merged_var(b.num_)));
  if (a.is_polynomial() && b.is_polynomial()) {
    QPoly n = a.num_ * b.num_;
    return RatFn(n, QPoly::constant(n.var(), 1), RatFn::Canonical{});
  }
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFn(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw std::domain_error("RatFn: inverse of zero");
  return RatFn(den_, num_);
}

RatFn RatFn::derivative() const {
  return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRat RatFn::operator()(const BigRat& at) const {
  BigRat d = den_(at);
  if (d.is_zero()) throw std::domain_error("RatFn: pole at " + at.to_string());
  return num_(at) / d;
}

namespace {
bool single_term(const QPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n <= 1;
}
}  // namespace

std::string RatFn::to_string() const {
  std::string n = odetype::to_string(num_);
  if (den_.is_constant()) return n;
  std::string d = odetype::to_string(den_);
  if (!single_term(num_)) n = "(" + n + ")";
  if (!single_term(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

RatFn shift(const RatFn& r, const BigRat& by) {
  Var v = r.var();
  QPoly arg(v, {by, BigRat(1)});
  return RatFn(compose(r.num(), arg), compose(r.den(), arg));
}

}  // namespace odetype
