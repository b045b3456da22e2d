#include "odetype/exactalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace odetype {

namespace {

Var require_same_var(const QPoly& p, const QPoly& q) {
  if (!p.is_constant() && !q.is_constant() && p.var() != q.var())
    throw std::invalid_argument(std::string("variable mismatch: ") + std::string(var_name(p.var())) + " vs " +
                                std::string(var_name(q.var())));
  return p.is_constant() ? q.var() : p.var();
}

// Prime factorisation by trial division up to 10^6 with a primality test on
// the cofactor. nullopt when a composite cofactor remains.
std::optional<std::vector<std::pair<BigInt, int>>> factor_integer(BigInt n) {
  std::vector<std::pair<BigInt, int>> out;
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  auto strip = [&](const BigInt& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  for (unsigned long p = 3; p <= 1000000UL; p += 2) {
    BigInt bp(p);
    if (bp * bp > n) break;
    strip(bp);
  }
  if (n > 1) {
    if (n > BigInt(1000000UL) * BigInt(1000000UL) && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

std::optional<std::vector<BigInt>> positive_divisors(const BigInt& n) {
  auto fac = factor_integer(n);
  if (!fac) return std::nullopt;
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : *fac) {
    std::size_t base = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

QPoly linear(Var v, const BigRat& root) { return QPoly(v, {-root, BigRat(1)}); }

// Splits a monic quartic without rational roots into two monic quadratics,
// if possible. nullopt: no split exists. Throws nothing; sets `undecided`
// when the constant term could not be factored.
std::optional<std::pair<QPoly, QPoly>> split_quartic(const QPoly& r, bool& undecided) {
  undecided = false;
  BigInt l = common_denominator(r.coeffs().data(), r.coeffs().data() + r.coeffs().size());
  // S(T) = L^4 R(T/L): monic with integer coefficients.
  std::vector<BigInt> s(5);
  BigRat lpow = 1;
  for (int k = 4; k >= 0; --k) {
    BigRat v = r.coeff(k) * lpow;
    s[static_cast<std::size_t>(k)] = v.numerator();
    lpow *= BigRat(l);
  }
  const BigInt &a = s[3], &b = s[2], &c = s[1], &d = s[0];
  auto divs = positive_divisors(d);
  if (!divs) {
    undecided = true;
    return std::nullopt;
  }
  auto build = [&](const BigInt& p, const BigInt& q) {
    BigRat bl(l);
    return QPoly(r.var(), {BigRat(q) / (bl * bl), BigRat(p) / bl, BigRat(1)});
  };
  for (const BigInt& pos : *divs) {
    for (int sign : {1, -1}) {
      BigInt q = pos * sign;
      BigInt sc = d / q;
      if (q != sc) {
        BigInt num = c - q * a, den = sc - q;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
        BigInt p = num / den;
        BigInt rr = a - p;
        if (q + sc + p * rr == b && p * sc + q * rr == c) return std::make_pair(build(p, q), build(rr, sc));
      } else {
        if (c != q * a) continue;
        BigInt disc = a * a - 4 * (b - 2 * q);
        if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        BigInt twice = a + root;
        if (!mpz_even_p(twice.get_mpz_t())) continue;
        BigInt p = twice / 2;
        return std::make_pair(build(p, q), build(a - p, sc));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  BigInt l = common_denominator(p.coeffs().data(), p.coeffs().data() + p.coeffs().size());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = (c * BigRat(l)).numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (p.lc().sign() < 0) g = -g;
  std::vector<BigRat> cs;
  cs.reserve(ints.size());
  for (auto& v : ints) cs.emplace_back(BigInt(v / g));
  return QPoly(p.var(), std::move(cs));
}

QPoly poly_gcd(const QPoly& p, const QPoly& q) {
  Var v = require_same_var(p, q);
  QPoly a = primitive_part(p), b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    QPoly r = prem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return monic(a).with_var(v);
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
  Var v = require_same_var(a, b);
  QPoly r0 = a.with_var(v), r1 = b.with_var(v);
  QPoly s0 = QPoly::constant(v, 1), s1(v), t0(v), t1 = QPoly::constant(v, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRat inv = r0.lc().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<QPoly, QPoly> solve_bezout(const QPoly& a, const QPoly& b, const QPoly& c) {
  ExtGcd e = ext_gcd(a, b);
  if (e.gcd.degree() != 0) throw std::invalid_argument("solve_bezout: inputs not coprime");
  QPoly s = e.s * c;
  if (b.degree() > 0) s = divmod(s, b).second;
  QPoly t = exact_quotient(c - s * a, b);
  return {s, t};
}

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero");
  return monic(exact_quotient(p, poly_gcd(p, p.derivative())));
}

bool is_squarefree(const QPoly& p) { return !p.is_zero() && poly_gcd(p, p.derivative()).degree() == 0; }

QPoly SqfDecomp::expand(Var v) const {
  QPoly r = QPoly::constant(v, unit);
  for (const auto& f : factors) r *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

SqfDecomp squarefree_decompose(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
  SqfDecomp out{p.lc(), {}};
  QPoly f = monic(p);
  if (f.degree() == 0) return out;
  QPoly fp = f.derivative();
  QPoly a0 = poly_gcd(f, fp);
  QPoly b = exact_quotient(f, a0);
  QPoly d = exact_quotient(fp, a0) - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly a = poly_gcd(b, d);
    b = exact_quotient(b, a);
    d = exact_quotient(d, a) - b.derivative();
    if (a.degree() > 0) out.factors.push_back({a, i});
  }
  return out;
}

BigRat resultant(const QPoly& p, const QPoly& q) {
  require_same_var(p, q);
  return detail::subresultant<BigRat>(p, q, BigRat(1));
}

QPoly resultant(const Poly<QPoly>& p, const Poly<QPoly>& q) {
  p.merged_var(q);
  return detail::subresultant<QPoly>(p, q, QPoly::constant(Var::T, 1));
}

RatFn PartialFractions::recombine() const {
  RatFn r(polynomial_part);
  for (const auto& t : terms)
    r += RatFn(t.numerator, t.factor.pow(static_cast<unsigned>(t.pole_order)));
  return r;
}

PartialFractions partial_fractions(const RatFn& w) {
  Var v = w.var();
  auto [poly, a] = divmod(w.num(), w.den());
  PartialFractions out{poly.with_var(v), {}};
  if (a.is_zero()) return out;
  SqfDecomp sqf = squarefree_decompose(w.den());
  QPoly rest_den = w.den();
  for (const auto& [factor, mult] : sqf.factors) {
    QPoly pk = factor.pow(static_cast<unsigned>(mult));
    QPoly other = exact_quotient(rest_den, pk);
    QPoly ai = a;
    if (other.degree() > 0) {
      auto [s, t] = solve_bezout(pk, other, QPoly::constant(v, 1));
      ai = divmod(a * t, pk).second;
      a = exact_quotient(a - ai * other, pk);
    }
    rest_den = other;
    // factor-adic expansion of ai / factor^mult, emitted by increasing order
    std::vector<PartialFractionTerm> local;
    for (int order = mult; order >= 1 && !ai.is_zero(); --order) {
      auto [q, r] = divmod(ai, factor);
      if (!r.is_zero()) local.push_back({factor, order, r});
      ai = std::move(q);
    }
    out.terms.insert(out.terms.end(), local.rbegin(), local.rend());
  }
  return out;
}

std::optional<std::vector<BigRat>> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero");
  std::vector<BigRat> roots;
  QPoly q = p;
  if (q.coeff(0).is_zero()) {
    roots.emplace_back(0);
    while (q.coeff(0).is_zero()) q = exact_quotient(q, QPoly::variable(q.var()));
  }
  if (q.degree() > 0) {
    QPoly prim = primitive_part(q);
    BigInt a0 = prim.coeff(0).numerator(), an = prim.lc().numerator();
    auto num_divs = positive_divisors(a0);
    auto den_divs = positive_divisors(an);
    if (!num_divs || !den_divs) return std::nullopt;
    for (const auto& u : *num_divs)
      for (const auto& w : *den_divs)
        for (int sign : {1, -1}) {
          BigRat cand(BigInt(u * sign), w);
          if (prim(cand).is_zero()) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

QFactorization factor_over_q(const QPoly& sqf) {
  QFactorization out;
  if (sqf.degree() <= 0) return out;
  auto roots = rational_roots(sqf);
  if (!roots) {
    out.unfactored = sqf;
    return out;
  }
  QPoly rest = monic(sqf);
  for (const auto& r : *roots) {
    QPoly lin = linear(sqf.var(), r);
    out.factors.push_back(lin);
    rest = exact_quotient(rest, lin);
  }
  switch (rest.degree()) {
    case 0: break;
    case 2:
    case 3: out.factors.push_back(rest); break;
    case 4: {
      bool undecided = false;
      auto split = split_quartic(rest, undecided);
      if (split) {
        out.factors.push_back(split->first);
        out.factors.push_back(split->second);
      } else if (undecided) {
        out.unfactored = rest;
      } else {
        out.factors.push_back(rest);
      }
      break;
    }
    default: out.unfactored = rest; break;
  }
  return out;
}

std::string to_string(const QPoly& p) { return to_string(p, var_name(p.var())); }

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const BigRat& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    BigRat mag = c.abs();
    if (k == 0) {
      s += mag.to_string();
      continue;
    }
    if (!mag.is_one()) s += mag.to_string() + "*";
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace odetype
