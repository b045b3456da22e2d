#include "odetype/classify.hpp"

#include <stdexcept>

namespace odetype {

std::string_view autonomous_type_name(AutonomousType t) {
  switch (t) {
    case AutonomousType::Exact: return "Exact";
    case AutonomousType::Exponential: return "Exponential";
    case AutonomousType::General: return "General";
    case AutonomousType::Unknown: return "Unknown";
  }
  return "?";
}

AutonomousVerdict classify_autonomous(const RatFn& h) {
  if (h.is_zero()) throw std::invalid_argument("classify_autonomous: h = 0 (the equation must involve y')");
  if (!h.is_constant() && h.var() != Var::Y)
    throw std::invalid_argument("classify_autonomous: h must be a function of y");
  AutonomousVerdict v;
  v.h = h.with_var(Var::Y);
  v.w = v.h.inverse();
  v.partial_fractions = partial_fractions(v.w);
  v.hermite = hermite_reduce(v.w);
  v.residues = rational_residues(v.hermite.remainder);
  v.residue_resultant = rt_resultant(v.hermite.remainder);
  if (v.hermite.remainder.is_zero()) {
    v.type = AutonomousType::Exact;
    v.exact_witness = v.hermite.rational_part;
    return v;
  }
  v.failed_conditions.push_back("exact: 1/h has nonzero residues (residue polynomial " +
                                to_string(v.residue_resultant) + ")");
  v.exponential = is_log_derivative_form(v.w);
  switch (v.exponential.decision) {
    case Decision::Yes: v.type = AutonomousType::Exponential; break;
    case Decision::No:
      v.type = AutonomousType::General;
      v.failed_conditions.push_back("exponential: " + v.exponential.reason);
      break;
    case Decision::Unknown:
      v.type = AutonomousType::Unknown;
      v.failed_conditions.push_back("exponential: undecided (" + v.exponential.reason + ")");
      break;
  }
  return v;
}

GeneralTypeCertificate certify_general(const BiDiffPoly& f) {
  if (!f.involves_z()) throw std::invalid_argument("certify_general: f does not involve y'");
  TangentCheck tc = simple_point_tangent_Z(f);
  if (!tc.ok()) throw std::invalid_argument("certify_general: precondition violated: " + tc.reason);
  BranchExpansion b = branch_expand(f, 3);
  GeneralTypeCertificate cert;
  cert.mode = f.mode();
  cert.lambda2 = b.lambda(2);
  cert.lambda3 = b.lambda(3);
  cert.evidence2 = has_antiderivative(cert.lambda2, f.mode());
  cert.evidence3 = has_antiderivative(cert.lambda3, f.mode());
  cert.squarefree_in_z = squarefree_in_z_verified(f);
  cert.certified = !cert.evidence2.exists && !cert.evidence3.exists;
  if (cert.certified)
    cert.reason = "neither lambda_2 nor lambda_3 has an antiderivative";
  else if (cert.evidence2.exists)
    cert.reason = "lambda_2 has antiderivative " + cert.evidence2.witness.to_string();
  else
    cert.reason = "lambda_3 has antiderivative " + cert.evidence3.witness.to_string();
  return cert;
}

GeneralTypeCertificate classify_abel(const std::vector<RatFn>& coeffs, DerivationMode mode) {
  if (coeffs.size() < 2) throw std::invalid_argument("classify_abel: need a_2 and a_3 (n >= 3)");
  // On Z - sum a_i Y^i the branch coefficients are lambda_2 = a_2, lambda_3 = a_3.
  GeneralTypeCertificate cert;
  cert.mode = mode;
  cert.lambda2 = coeffs[0];
  cert.lambda3 = coeffs[1];
  cert.evidence2 = has_antiderivative(coeffs[0], mode);
  cert.evidence3 = has_antiderivative(coeffs[1], mode);
  cert.squarefree_in_z = true;  // linear in y'
  cert.certified = !cert.evidence2.exists && !cert.evidence3.exists;
  cert.reason = cert.certified ? "neither a_2 nor a_3 has an antiderivative"
                               : (cert.evidence2.exists ? "a_2" : "a_3") + std::string(" has an antiderivative");
  return cert;
}

RiccatiCoeffs::RiccatiCoeffs(RatFn a2_, RatFn a1_, RatFn a0_)
    : a2(std::move(a2_)), a1(std::move(a1_)), a0(std::move(a0_)) {
  if (a2.is_zero() && a1.is_zero() && a0.is_zero())
    throw std::invalid_argument("Riccati coefficients are all zero");
}

RiccatiCoeffs mobius_riccati(const RiccatiCoeffs& r, const Mobius& m) {
  RatFn delta = m.det();
  if (delta.is_zero()) throw std::invalid_argument("mobius_riccati: singular matrix");
  auto d = [](const RatFn& v) { return derive(v, Var::X); };
  // y' = N(t)/(ct+d)^2 with N(t) = n2 t^2 + n1 t + n0; substituting
  // t = (d y - b)/(a - c y) gives y' = [n2 (dy-b)^2 + n1 (dy-b)(a-cy) + n0 (a-cy)^2] / delta^2.
  RatFn n2 = d(m.a) * m.c - m.a * d(m.c) + r.a2 * delta;
  RatFn n1 = d(m.a) * m.d + d(m.b) * m.c - m.a * d(m.d) - m.b * d(m.c) + r.a1 * delta;
  RatFn n0 = d(m.b) * m.d - m.b * d(m.d) + r.a0 * delta;
  // (d y - b)^2 = d^2 y^2 - 2bd y + b^2
  // (d y - b)(a - c y) = -cd y^2 + (ad + bc) y - ab
  // (a - c y)^2 = c^2 y^2 - 2ac y + a^2
  RatFn inv = (delta * delta).inverse();
  RatFn y2 = (n2 * m.d * m.d - n1 * m.c * m.d + n0 * m.c * m.c) * inv;
  RatFn y1 = (RatFn(-2) * n2 * m.b * m.d + n1 * (m.a * m.d + m.b * m.c) - RatFn(2) * n0 * m.a * m.c) * inv;
  RatFn y0 = (n2 * m.b * m.b - n1 * m.a * m.b + n0 * m.a * m.a) * inv;
  return RiccatiCoeffs(y2, y1, y0);
}

WeierstrassData::WeierstrassData(BigRat g2_, BigRat g3_, RatFn alpha_)
    : g2(std::move(g2_)), g3(std::move(g3_)), alpha(std::move(alpha_)) {
  if (!weierstrass_validate(g2, g3)) throw std::invalid_argument("Weierstrass data: 27 g3^2 - g2^3 = 0");
  if (alpha.is_zero()) throw std::invalid_argument("Weierstrass data: alpha = 0");
}

BigRat weierstrass_discriminant(const BigRat& g2, const BigRat& g3) { return BigRat(27) * g3 * g3 - g2.pow(3); }

bool weierstrass_validate(const BigRat& g2, const BigRat& g3) { return !weierstrass_discriminant(g2, g3).is_zero(); }

BigRat j_invariant(const BigRat& g2, const BigRat& g3) {
  if (!weierstrass_validate(g2, g3))
    throw std::invalid_argument("j_invariant: degenerate curve (27 g3^2 - g2^3 = 0)");
  BigRat c = g2.pow(3);
  return BigRat(1728) * c / (c - BigRat(27) * g3 * g3);
}

bool iso_over_kbar(const std::array<BigRat, 2>& c1, const std::array<BigRat, 2>& c2) {
  return j_invariant(c1[0], c1[1]) == j_invariant(c2[0], c2[1]);
}

}  // namespace odetype
