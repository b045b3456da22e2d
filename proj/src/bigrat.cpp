#include "odetype/bigrat.hpp"

#include <cctype>
#include <stdexcept>

namespace odetype {

BigRat::BigRat(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("BigRat: zero denominator");
  value_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = BigInt(std::string(s.substr(i)), 10);
  if (neg) out = -out;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRat BigRat::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  } else {
    std::string_view d = trim(s.substr(slash + 1));
    if (!parse_integer(trim(s.substr(0, slash)), num) || d.empty() || d[0] == '-' || d[0] == '+' ||
        !parse_integer(d, den))
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return BigRat(num, den);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
  value_ /= o.value_;
  return *this;
}

BigRat BigRat::inverse() const { return BigRat(1) / *this; }

BigRat BigRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRat(n, d);
}

std::string BigRat::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool rational_sqrt(const BigRat& r, BigRat& root) {
  if (r.sign() < 0) return false;
  BigInt n = r.numerator(), d = r.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = BigRat(sn, sd);
  return true;
}

BigInt common_denominator(const BigRat* first, const BigRat* last) {
  BigInt l = 1;
  for (; first != last; ++first) {
    BigInt d = first->denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace odetype
