#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "odetype/poly.hpp"

namespace odetype {

/// Power series c_0 + c_1 v + ... + c_N v^N known up to order N.
/// Binary operations truncate at the smaller order.
template <class K>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1, K(0)) {}
  explicit TruncatedSeries(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  }

  static TruncatedSeries constant(const K& k, std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = k;
    return s;
  }
  /// The series of the variable itself.
  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = K(1);
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](std::size_t i) const { return c_.at(i); }
  K& operator[](std::size_t i) { return c_.at(i); }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("TruncatedSeries: cannot extend truncation");
    return TruncatedSeries(std::vector<K>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& k : r.c_) k = -k;
    return r;
  }
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < r.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend TruncatedSeries operator*(const K& k, TruncatedSeries a) {
    for (auto& c : a.c_) c = k * c;
    return a;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  /// Derivative; one order is lost.
  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    TruncatedSeries r(order() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * K(static_cast<int>(i));
    return r;
  }

  /// 1/s; requires an invertible constant term.
  TruncatedSeries inverse() const {
    if (is_zero(c_[0])) throw std::domain_error("TruncatedSeries: inverse needs a nonzero constant term");
    TruncatedSeries r(order());
    K inv = K(1) / c_[0];
    r.c_[0] = inv;
    for (std::size_t n = 1; n < c_.size(); ++n) {
      K acc(0);
      for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
      r.c_[n] = -(acc * inv);
    }
    return r;
  }

  /// True when every coefficient vanishes.
  bool is_zero_series() const {
    for (const auto& k : c_)
      if (!is_zero(k)) return false;
    return true;
  }

 private:
  std::vector<K> c_;
};

/// p(s), truncated at s's order.
template <class K>
TruncatedSeries<K> evaluate(const Poly<K>& p, const TruncatedSeries<K>& s) {
  TruncatedSeries<K> acc(s.order());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * s + TruncatedSeries<K>::constant(*it, s.order());
  return acc;
}

/// outer(inner) for inner with zero constant term.
template <class K>
TruncatedSeries<K> compose(const TruncatedSeries<K>& outer, const TruncatedSeries<K>& inner) {
  if (!is_zero(inner[0])) throw std::domain_error("compose: inner series must have zero constant term");
  std::size_t n = std::min(outer.order(), inner.order());
  TruncatedSeries<K> acc(n);
  for (std::size_t i = outer.order() + 1; i-- > 0;)
    acc = acc * inner.truncated(n) + TruncatedSeries<K>::constant(outer[i], n);
  return acc;
}

}  // namespace odetype
