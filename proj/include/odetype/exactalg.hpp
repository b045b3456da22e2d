#pragma once

#include <optional>
#include <vector>

#include "odetype/poly.hpp"
#include "odetype/ratfn.hpp"

namespace odetype {

/// Monic gcd via a primitive pseudo-remainder sequence on integer-scaled
/// inputs. gcd(p, 0) = monic(p). Throws std::invalid_argument when both
/// inputs are nonzero and tagged with different variables.
QPoly poly_gcd(const QPoly& p, const QPoly& q);

/// s*a + t*b = gcd (monic).
struct ExtGcd {
  QPoly gcd, s, t;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);

/// Solves s*a + t*b = c with deg s < deg b, for coprime a and b.
std::pair<QPoly, QPoly> solve_bezout(const QPoly& a, const QPoly& b, const QPoly& c);

/// Integer coefficients with content 1 and positive leading coefficient.
QPoly primitive_part(const QPoly& p);
/// p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);
bool is_squarefree(const QPoly& p);

struct SqfFactor {
  QPoly factor;
  int multiplicity = 0;
};

/// unit * prod(factor^multiplicity), factors monic, squarefree, pairwise
/// coprime, listed by increasing multiplicity.
struct SqfDecomp {
  BigRat unit;
  std::vector<SqfFactor> factors;

  QPoly expand(Var v) const;
};

/// Yun's algorithm. Throws std::invalid_argument on the zero polynomial.
SqfDecomp squarefree_decompose(const QPoly& p);

namespace detail {

inline BigRat exact_div(const BigRat& a, const BigRat& b) { return a / b; }
inline QPoly exact_div(const QPoly& a, const QPoly& b) { return exact_quotient(a, b); }

template <class R>
R ring_pow(const R& base, int e, const R& one) {
  R r = one;
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

template <class R>
Poly<R> div_coeffs(const Poly<R>& p, const R& d) {
  std::vector<R> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(exact_div(c, d));
  return Poly<R>(p.var(), std::move(cs));
}

/// Subresultant resultant over an integral domain R with exact division.
template <class R>
R subresultant(Poly<R> a, Poly<R> b, const R& one) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  bool negate = false;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
  }
  if (b.degree() == 0) {
    R r = ring_pow(b.lc(), a.degree(), one);
    return negate ? -r : r;
  }
  R g = one, h = one;
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    Poly<R> r = prem(a, b);
    a = b;
    if (r.is_zero()) return R(0);
    b = div_coeffs(r, g * ring_pow(h, delta, one));
    g = a.lc();
    if (delta > 0) h = exact_div(ring_pow(g, delta, one), ring_pow(h, delta - 1, one));
    if (b.degree() == 0) break;
  }
  R res = exact_div(ring_pow(b.lc(), a.degree(), one), ring_pow(h, a.degree() - 1, one));
  return negate ? -res : res;
}

}  // namespace detail

/// Res_v(p, q) for polynomials over Q.
BigRat resultant(const QPoly& p, const QPoly& q);
/// Res_v(p, q) where the coefficients are polynomials in a second symbol;
/// the result is a polynomial in that symbol.
QPoly resultant(const Poly<QPoly>& p, const Poly<QPoly>& q);

struct PartialFractionTerm {
  QPoly factor;      // monic squarefree factor of the denominator
  int pole_order = 0;
  QPoly numerator;   // deg < deg(factor)
};

struct PartialFractions {
  QPoly polynomial_part;
  std::vector<PartialFractionTerm> terms;

  RatFn recombine() const;
};

/// Expansion over the squarefree factorisation of den(w); exact.
PartialFractions partial_fractions(const RatFn& w);

/// Factorisation over Q of a monic squarefree polynomial, limited to what
/// rational roots and degree-4 quadratic splitting can decide.
struct QFactorization {
  std::vector<QPoly> factors;  // monic; irreducible unless listed in `unfactored`
  std::optional<QPoly> unfactored;
};
QFactorization factor_over_q(const QPoly& squarefree_monic);

/// All rational roots of a nonzero polynomial, ascending. Returns nullopt
/// when the constant term is too large to enumerate its divisors.
std::optional<std::vector<BigRat>> rational_roots(const QPoly& p);

}  // namespace odetype
