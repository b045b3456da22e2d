#include "odetype/ratcalc.hpp"

#include <stdexcept>

namespace odetype {

std::string_view mode_name(DerivationMode m) { return m == DerivationMode::ConstantsQ ? "const" : "qx"; }

std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view shape_name(FactorShape s) {
  switch (s) {
    case FactorShape::Linear: return "Linear";
    case FactorShape::QuadraticBinomial: return "QuadraticBinomial";
    case FactorShape::Other: return "Other";
  }
  return "?";
}

RatFn derive(const RatFn& w, Var v) {
  if (w.is_constant() || w.var() != v) return RatFn(QPoly(v));
  return w.derivative();
}

namespace {

QPoly integrate(const QPoly& p) {
  std::vector<BigRat> cs(p.coeffs().size() + 1, BigRat(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) cs[i + 1] = p.coeffs()[i] / BigRat(static_cast<long>(i + 1));
  return QPoly(p.var(), std::move(cs));
}

}  // namespace

HermiteResult hermite_reduce(const RatFn& w) {
  Var v = w.var();
  auto [poly, a] = divmod(w.num(), w.den());
  RatFn g(integrate(poly).with_var(v));
  QPoly d = w.den();
  if (!a.is_zero()) {
    SqfDecomp sqf = squarefree_decompose(d);
    for (const auto& [vf, mult] : sqf.factors) {
      if (mult < 2) continue;
      QPoly u = exact_quotient(d, vf.pow(static_cast<unsigned>(mult)));
      QPoly uv = u * vf.derivative();
      for (int j = mult - 1; j >= 1; --j) {
        auto [b, c] = solve_bezout(uv, vf, a * BigRat(BigInt(-1), BigInt(j)));
        g += RatFn(b, vf.pow(static_cast<unsigned>(j)));
        a = c * BigRat(-j) - u * b.derivative();
      }
      d = u * vf;
    }
  }
  HermiteResult out{g, RatFn(a, d)};
  if (out.remainder.is_zero()) out.remainder = RatFn(QPoly(v));
  if (derive(out.rational_part, v) + out.remainder != w)
    throw std::logic_error("hermite_reduce: reconstruction failed");
  return out;
}

QPoly rt_resultant(const RatFn& h) {
  if (h.is_zero()) return QPoly::constant(Var::T, 1);
  const QPoly& n = h.num();
  const QPoly& d = h.den();
  if (n.degree() >= d.degree()) throw std::invalid_argument("rt_resultant: improper fraction " + h.to_string());
  if (!is_squarefree(d)) throw std::invalid_argument("rt_resultant: denominator not squarefree");
  QPoly dp = d.derivative();
  Var v = h.var();
  std::vector<QPoly> dc, rc;
  for (int i = 0; i <= d.degree(); ++i) dc.push_back(QPoly::constant(Var::T, d.coeff(i)));
  int top = std::max(n.degree(), dp.degree());
  for (int i = 0; i <= top; ++i) rc.push_back(QPoly(Var::T, {n.coeff(i), -dp.coeff(i)}));
  QPoly res = resultant(Poly<QPoly>(v, dc), Poly<QPoly>(v, rc)).with_var(Var::T);
  if (res.is_zero()) throw std::logic_error("rt_resultant: vanishing resultant");
  if (res.degree() == 0) return QPoly::constant(Var::T, 1);
  return squarefree_part(res);
}

Commensurability residues_commensurable(const QPoly& r) {
  if (r.is_zero() || r.coeff(0).is_zero())
    throw std::invalid_argument("residues_commensurable: zero residue (R(0) = 0)");
  Commensurability out;
  QPoly m = monic(r);
  QFactorization fac = factor_over_q(m);
  bool any_linear = false, any_binomial = false, any_other = false;
  for (const auto& f : fac.factors) {
    FactorShape s = FactorShape::Other;
    if (f.degree() == 1)
      s = FactorShape::Linear;
    else if (f.degree() == 2 && f.coeff(1).is_zero())
      s = FactorShape::QuadraticBinomial;
    any_linear |= s == FactorShape::Linear;
    any_binomial |= s == FactorShape::QuadraticBinomial;
    any_other |= s == FactorShape::Other;
    out.factors.push_back({f, s});
  }
  out.unfactored = fac.unfactored;
  if (any_other) {
    out.decision = Decision::No;
    out.reason = "irreducible factor of degree >= 3 or quadratic with a linear term";
    return out;
  }
  if ((any_linear && any_binomial) || (any_linear && fac.unfactored)) {
    out.decision = Decision::No;
    out.reason = "rational residues mixed with irrational ones";
    return out;
  }
  if (fac.unfactored) {
    out.decision = Decision::Unknown;
    out.reason = "unfactored";
    return out;
  }
  if (any_linear) {
    out.decision = Decision::Yes;
    for (const auto& f : fac.factors) out.residues.push_back(-f.coeff(0));
    return out;
  }
  // all quadratic binomials t^2 - a_i
  BigRat base = -fac.factors.front().coeff(0);
  for (const auto& f : fac.factors) {
    BigRat a = -f.coeff(0);
    BigRat q;
    if (!rational_sqrt(a / base, q)) {
      out.decision = Decision::No;
      out.reason = "binomial factors t^2 - " + base.to_string() + " and t^2 - " + a.to_string() +
                   " have a non-square ratio";
      out.scales.clear();
      return out;
    }
    out.scales.push_back(q);
  }
  out.decision = Decision::Yes;
  out.base = base;
  return out;
}

ResidueProfile residue_profile(const RatFn& w) {
  ResidueProfile p;
  p.poly_part_zero = w.num().degree() < w.den().degree();
  p.simple_poles_only = is_squarefree(w.den());
  if (!p.poly_part_zero || !p.simple_poles_only || w.is_zero()) {
    p.commensurable.decision = Decision::No;
    p.commensurable.reason = "not applicable";
    return p;
  }
  p.rt_resultant = rt_resultant(w);
  p.commensurable = residues_commensurable(p.rt_resultant);
  return p;
}

LogDerivativeVerdict is_log_derivative_form(const RatFn& w) {
  LogDerivativeVerdict out;
  if (w.is_zero()) {
    out.reason = "zero";
    return out;
  }
  out.profile = residue_profile(w);
  if (!out.profile.poly_part_zero) {
    out.reason = "nonzero polynomial part";
  } else if (!out.profile.simple_poles_only) {
    out.reason = "pole of order >= 2";
  } else {
    out.decision = out.profile.commensurable.decision;
    out.reason = out.profile.commensurable.reason;
  }
  return out;
}

std::vector<RationalResidue> rational_residues(const RatFn& h) {
  std::vector<RationalResidue> out;
  if (h.is_zero() || h.den().is_constant()) return out;
  auto roots = rational_roots(h.den());
  if (!roots) return out;
  QPoly dp = h.den().derivative();
  for (const auto& c : *roots) out.push_back({c, h.num()(c) / dp(c)});
  return out;
}

AntiderivativeResult has_antiderivative(const RatFn& w, DerivationMode mode) {
  AntiderivativeResult out;
  if (mode == DerivationMode::ConstantsQ) {
    if (!w.is_constant())
      throw std::invalid_argument("has_antiderivative: ConstantsQ mode needs a constant, got " + w.to_string());
    out.exists = w.is_zero();
    if (!out.exists) out.evidence.note = "nonzero constant; the derivation vanishes on constants";
    return out;
  }
  HermiteResult hr = hermite_reduce(w);
  if (hr.remainder.is_zero()) {
    out.exists = true;
    out.witness = hr.rational_part;
    return out;
  }
  out.evidence.remainder = hr.remainder;
  out.evidence.rt_resultant = rt_resultant(hr.remainder);
  QFactorization poles = factor_over_q(hr.remainder.den());
  out.evidence.pole_factors = poles.factors;
  if (poles.unfactored) out.evidence.pole_factors.push_back(*poles.unfactored);
  out.evidence.rational_residues = rational_residues(hr.remainder);
  out.evidence.note = "nonzero Hermite remainder: some residue is nonzero";
  return out;
}

}  // namespace odetype
