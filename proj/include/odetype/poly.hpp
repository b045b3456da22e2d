#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odetype/bigrat.hpp"

namespace odetype {

/// Symbol tag carried by univariate objects. Z stands for y'.
enum class Var { X, Y, Z, T };

constexpr std::string_view var_name(Var v) {
  switch (v) {
    case Var::X: return "x";
    case Var::Y: return "y";
    case Var::Z: return "y'";
    case Var::T: return "t";
  }
  return "?";
}

namespace detail {
template <class K>
bool coeff_zero(const K& k) {
  return is_zero(k);
}
}  // namespace detail

/// Dense univariate polynomial over a coefficient ring K.
///
/// K must be default-constructible to zero, constructible from int, and
/// provide ring operators plus a free `is_zero(const K&)`. Division-based
/// operations (`divmod`, `monic`) additionally need K to be a field.
template <class K>
class Poly {
 public:
  using Scalar = K;

  explicit Poly(Var v = Var::Y) : var_(v) {}
  /// Constant polynomial; lets Poly itself serve as a coefficient ring.
  explicit Poly(int c) : var_(Var::T) {
    if (c != 0) c_.push_back(K(c));
  }
  Poly(Var v, std::vector<K> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

  static Poly constant(Var v, K c) { return Poly(v, std::vector<K>{std::move(c)}); }
  static Poly monomial(Var v, K c, int deg) {
    std::vector<K> cs(static_cast<std::size_t>(deg) + 1, K(0));
    cs.back() = std::move(c);
    return Poly(v, std::move(cs));
  }
  static Poly variable(Var v) { return monomial(v, K(1), 1); }

  Var var() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : K(0); }
  const K& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  /// Re-tags the polynomial; coefficients unchanged.
  Poly with_var(Var v) const { return Poly(v, c_); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& k : r.c_) k = -k;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    var_ = merged_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    var_ = merged_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const K& k) {
    for (auto& a : c_) a *= k;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.merged_var(b));
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(Poly a, const K& k) { return a *= k; }
  friend Poly operator*(const K& k, Poly a) { return a *= k; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_ != b.c_) return false;
    return a.var_ == b.var_ || a.is_constant();
  }

  /// Horner evaluation.
  K operator()(const K& at) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Formal derivative with respect to the polynomial's own variable.
  Poly derivative() const {
    Poly r(var_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * K(static_cast<int>(i)));
    r.trim();
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(var_, K(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  /// Var of a binary result; constants adopt the other operand's tag.
  Var merged_var(const Poly& o) const {
    if (var_ == o.var_ || o.is_constant()) return var_;
    if (is_constant()) return o.var_;
    throw std::invalid_argument(std::string("variable mismatch: ") + std::string(var_name(var_)) + " vs " +
                                std::string(var_name(o.var_)));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
  }

  Var var_;
  std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Var v = a.merged_var(b);
  std::vector<K> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly<K>(v), a.with_var(v)};
  std::vector<K> quot(static_cast<std::size_t>(da - db + 1), K(0));
  K inv_lc = K(1) / b.lc();
  for (int i = da; i >= db; --i) {
    K q = rem[static_cast<std::size_t>(i)] * inv_lc;
    if (detail::coeff_zero(q)) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<K>(v, std::move(quot)), Poly<K>(v, std::move(rem))};
}

/// Exact quotient; throws if b does not divide a.
template <class K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return q;
}

/// Pseudo-remainder over a ring: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class K>
Poly<K> prem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  Var v = a.merged_var(b);
  int db = b.degree();
  if (a.degree() < db) return a.with_var(v);
  std::vector<K> r = a.coeffs();
  const K& l = b.lc();
  for (int i = a.degree(); i >= db; --i) {
    K top = r[static_cast<std::size_t>(i)];
    for (auto& c : r) c *= l;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return Poly<K>(v, std::move(r));
}

template <class K>
Poly<K> monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  return p * (K(1) / p.lc());
}

/// p(q(v)) where v is q's variable.
template <class K>
Poly<K> compose(const Poly<K>& p, const Poly<K>& q) {
  Poly<K> acc(q.var());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * q + Poly<K>::constant(q.var(), *it);
  return acc;
}

using QPoly = Poly<BigRat>;

/// Parseable text such as "3/2*x^2 - x + 1".
std::string to_string(const QPoly& p);
std::string to_string(const QPoly& p, std::string_view var);

}  // namespace odetype
