#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace odetype {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : value_(v) {}                           // NOLINT
  BigRat(int v) : value_(static_cast<long>(v)) {}         // NOLINT
  BigRat(const BigInt& v) : value_(v) {}                  // NOLINT
  BigRat(const BigInt& num, const BigInt& den);
  explicit BigRat(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (q != 0). Whitespace around the tokens is
  /// accepted. Throws std::invalid_argument on anything else.
  static BigRat parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRat operator-() const { return BigRat(mpq_class(-value_)); }
  BigRat& operator+=(const BigRat& o) { value_ += o.value_; return *this; }
  BigRat& operator-=(const BigRat& o) { value_ -= o.value_; return *this; }
  BigRat& operator*=(const BigRat& o) { value_ *= o.value_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRat abs() const { return BigRat(mpq_class(::abs(value_))); }
  BigRat inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  BigRat pow(long e) const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

inline bool is_zero(const BigRat& r) { return r.is_zero(); }

/// Exact square root of a rational square; returns false if `r` is not one.
bool rational_sqrt(const BigRat& r, BigRat& root);

/// Least common multiple of the denominators of `values`.
BigInt common_denominator(const BigRat* first, const BigRat* last);

}  // namespace odetype
