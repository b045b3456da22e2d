#include "odetype/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "odetype/certificate.hpp"
#include "odetype/classify.hpp"
#include "odetype/expr.hpp"
#include "odetype/series.hpp"

namespace odetype {

std::string tool_version() { return ODETYPE_VERSION; }

namespace {

using Json = CertificateDoc::Json;

// ---------------------------------------------------------------------------
// Argument conversion
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

BigRat rational_arg(const std::string& flag, const std::string& text) {
  try {
    return BigRat::parse(text);
  } catch (const std::invalid_argument&) {
    throw InputError(flag + ": '" + text + "' is not a rational p/q");
  }
}

std::vector<BigRat> rational_list(const std::string& flag, const std::string& text, std::size_t count) {
  auto parts = split(text, ',');
  if (count && parts.size() != count)
    throw InputError(flag + ": expected " + std::to_string(count) + " comma-separated rationals");
  std::vector<BigRat> out;
  for (const auto& p : parts) out.push_back(rational_arg(flag, p));
  return out;
}

std::vector<RatFn> ratfn_list(const std::string& flag, const std::string& text, std::size_t min_count,
                              std::size_t max_count) {
  auto parts = split(text, ',');
  if (parts.size() < min_count || parts.size() > max_count)
    throw InputError(flag + ": wrong number of comma-separated entries");
  std::vector<RatFn> out;
  for (const auto& p : parts) {
    try {
      out.push_back(eval_ratfn(parse_expr(p), Var::X));
    } catch (const InputError& e) {
      throw InputError(flag + " entry '" + p + "': " + e.what());
    }
  }
  return out;
}

DerivationMode mode_arg(const std::string& m) { return m == "const" ? DerivationMode::ConstantsQ : DerivationMode::RationalQx; }

// ---------------------------------------------------------------------------
// Evidence encoders
// ---------------------------------------------------------------------------

std::string str(const RatFn& r) { return r.to_string(); }
std::string str(const QPoly& p) { return to_string(p); }
std::string str(const BigRat& q) { return q.to_string(); }

Json residues_json(const std::vector<RationalResidue>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back({{"pole", str(r.pole)}, {"residue", str(r.residue)}});
  return a;
}

Json poly_list(const std::vector<QPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(str(p));
  return a;
}

Json commensurability_json(const Commensurability& c) {
  Json j;
  j["decision"] = std::string(decision_name(c.decision));
  j["reason"] = c.reason;
  Json fs = Json::array();
  for (const auto& f : c.factors) fs.push_back({{"factor", str(f.factor)}, {"shape", std::string(shape_name(f.shape))}});
  j["factors"] = fs;
  j["unfactored"] = c.unfactored ? Json(str(*c.unfactored)) : Json(nullptr);
  Json rs = Json::array();
  for (const auto& r : c.residues) rs.push_back(str(r));
  j["rational_residues"] = rs;
  j["sqrt_base"] = c.base ? Json(str(*c.base)) : Json(nullptr);
  Json sc = Json::array();
  for (const auto& s : c.scales) sc.push_back(str(s));
  j["sqrt_scales"] = sc;
  return j;
}

Json antiderivative_json(const AntiderivativeResult& r) {
  Json j;
  j["exists"] = r.exists;
  if (r.exists) {
    j["witness"] = str(r.witness);
    return j;
  }
  j["hermite_remainder"] = str(r.evidence.remainder);
  j["residue_resultant"] = str(r.evidence.rt_resultant);
  j["pole_factors"] = poly_list(r.evidence.pole_factors);
  j["rational_residues"] = residues_json(r.evidence.rational_residues);
  j["note"] = r.evidence.note;
  return j;
}

Json partial_fractions_json(const PartialFractions& pf) {
  Json j;
  j["polynomial_part"] = str(pf.polynomial_part);
  Json ts = Json::array();
  for (const auto& t : pf.terms)
    ts.push_back({{"factor", str(t.factor)}, {"order", t.pole_order}, {"numerator", str(t.numerator)}});
  j["terms"] = ts;
  return j;
}

void general_certificate(CertificateDoc& doc, const GeneralTypeCertificate& c) {
  doc.verdict = c.certified ? "Certified" : "Inconclusive";
  doc.evidence["lambda2"] = str(c.lambda2);
  doc.evidence["lambda3"] = str(c.lambda3);
  doc.evidence["lambda2_antiderivative"] = antiderivative_json(c.evidence2);
  doc.evidence["lambda3_antiderivative"] = antiderivative_json(c.evidence3);
  doc.evidence["reason"] = c.reason;
  doc.hypotheses["mode"] = std::string(mode_name(c.mode));
  doc.hypotheses["irreducibility_unverified"] = c.irreducibility_unverified;
  doc.hypotheses["squarefree_in_z_verified"] = c.squarefree_in_z;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

// h from either h(y) itself or an equation A(y) y' + B(y) = 0.
RatFn autonomous_rhs(const Expr& e) {
  if (!mentions(e, ExprKind::Z)) return eval_ratfn(e, Var::Y);
  BiDiffPoly f = eval_bidiff(e, DerivationMode::ConstantsQ);
  if (f.degree_z() != 1) throw InputError("y' must appear linearly, as in y' - h(y)");
  QPoly a(Var::Y), b(Var::Y);
  for (const auto& [m, c] : f.terms()) {
    QPoly term = QPoly::monomial(Var::Y, c.constant_value(), m.first);
    (m.second == 1 ? a : b) += term;
  }
  if (a.is_zero()) throw InputError("coefficient of y' is zero");
  return RatFn(-b, a);
}

CertificateDoc classify_auto(const std::string& text) {
  Expr e = parse_expr(text);
  RatFn h = autonomous_rhs(e);
  AutonomousVerdict v = classify_autonomous(h);
  CertificateDoc doc;
  doc.verdict = std::string(autonomous_type_name(v.type));
  doc.input = {{"expression", print_expr(e)}, {"h", str(v.h)}};
  doc.evidence["w"] = str(v.w);
  doc.evidence["partial_fractions"] = partial_fractions_json(v.partial_fractions);
  doc.evidence["hermite"] = {{"rational_part", str(v.hermite.rational_part)}, {"remainder", str(v.hermite.remainder)}};
  doc.evidence["exact_witness"] = v.exact_witness ? Json(str(*v.exact_witness)) : Json(nullptr);
  doc.evidence["residues"] = residues_json(v.residues);
  doc.evidence["residue_resultant"] = str(v.residue_resultant);
  doc.evidence["log_derivative"] = {{"decision", std::string(decision_name(v.exponential.decision))},
                                    {"reason", v.exponential.reason},
                                    {"commensurability", commensurability_json(v.exponential.profile.commensurable)}};
  doc.evidence["failed_conditions"] = v.failed_conditions;
  doc.hypotheses["scalar_field"] = "Q";
  return doc;
}

CertificateDoc certify(const std::string& text, const std::optional<std::string>& shift, const std::string& mode) {
  Expr e = parse_expr(text);
  BiDiffPoly f = eval_bidiff(e, mode_arg(mode));
  CertificateDoc doc;
  doc.input = {{"expression", print_expr(e)}, {"mode", mode}};
  if (shift) {
    auto s = rational_list("--shift", *shift, 2);
    f = translate(f, RatFn(s[0]), RatFn(s[1]));
    doc.input["shift"] = {str(s[0]), str(s[1])};
  } else {
    doc.input["shift"] = nullptr;
  }
  doc.input["curve"] = f.to_string();
  general_certificate(doc, certify_general(f));
  return doc;
}

CertificateDoc expand(const std::string& text, int order, const std::string& mode) {
  Expr e = parse_expr(text);
  BiDiffPoly f = eval_bidiff(e, mode_arg(mode));
  BranchExpansion b = branch_expand(f, order);
  CertificateDoc doc;
  doc.verdict = "Expanded";
  doc.input = {{"expression", print_expr(e)}, {"curve", f.to_string()}, {"order", order}, {"mode", mode}};
  Json ls = Json::array();
  for (int i = 2; i <= b.order; ++i) ls.push_back({{"i", i}, {"lambda", str(b.lambda(i))}});
  doc.evidence["lambdas"] = ls;
  doc.evidence["residual"] = "O(Y^" + std::to_string(b.order + 1) + ")";
  return doc;
}

CertificateDoc abel(const std::string& coeffs, const std::string& mode) {
  auto a = ratfn_list("--coeffs", coeffs, 2, 64);
  CertificateDoc doc;
  Json in = Json::array();
  for (const auto& c : a) in.push_back(str(c));
  doc.input = {{"coeffs_from_a2", in}, {"mode", mode}};
  general_certificate(doc, classify_abel(a, mode_arg(mode)));
  return doc;
}

CertificateDoc mobius(const std::string& riccati, const std::string& matrix) {
  auto r = ratfn_list("--riccati", riccati, 3, 3);
  auto m = ratfn_list("--matrix", matrix, 4, 4);
  Mobius mm{m[0], m[1], m[2], m[3]};
  RiccatiCoeffs out = mobius_riccati(RiccatiCoeffs(r[0], r[1], r[2]), mm);
  CertificateDoc doc;
  doc.verdict = "Transformed";
  doc.input = {{"riccati", {{"a2", str(r[0])}, {"a1", str(r[1])}, {"a0", str(r[2])}}},
               {"matrix", {str(m[0]), str(m[1]), str(m[2]), str(m[3])}}};
  doc.evidence["riccati"] = {{"a2", str(out.a2)}, {"a1", str(out.a1)}, {"a0", str(out.a0)}};
  doc.evidence["determinant"] = str(mm.det());
  doc.evidence["inverse_matrix"] = {str(mm.inverse().a), str(mm.inverse().b), str(mm.inverse().c), str(mm.inverse().d)};
  return doc;
}

CertificateDoc weierstrass(const std::string& g2s, const std::string& g3s, const std::optional<std::string>& compare) {
  BigRat g2 = rational_arg("--g2", g2s), g3 = rational_arg("--g3", g3s);
  CertificateDoc doc;
  doc.input = {{"g2", str(g2)}, {"g3", str(g3)}};
  doc.evidence["discriminant"] = str(weierstrass_discriminant(g2, g3));
  if (!weierstrass_validate(g2, g3)) {
    doc.verdict = "Invalid";
    doc.evidence["reason"] = "27g3²−g2³=0";
    return doc;
  }
  doc.verdict = "Valid";
  doc.evidence["j"] = str(j_invariant(g2, g3));
  if (compare) {
    auto h = rational_list("--compare", *compare, 2);
    doc.input["compare"] = {str(h[0]), str(h[1])};
    Json c;
    c["discriminant"] = str(weierstrass_discriminant(h[0], h[1]));
    if (weierstrass_validate(h[0], h[1])) {
      c["j"] = str(j_invariant(h[0], h[1]));
      c["isomorphic_over_kbar"] = iso_over_kbar({g2, g3}, {h[0], h[1]});
    } else {
      c["j"] = nullptr;
      c["isomorphic_over_kbar"] = nullptr;
      c["reason"] = "27g3²−g2³=0";
    }
    doc.evidence["compare"] = c;
  }
  return doc;
}

CertificateDoc integrate_check(const std::string& text, const std::string& var, const std::string& mode) {
  Expr e = parse_expr(text);
  RatFn w = eval_ratfn(e, var == "x" ? Var::X : Var::Y);
  AntiderivativeResult r = has_antiderivative(w, mode_arg(mode));
  CertificateDoc doc;
  doc.verdict = r.exists ? "Antiderivative" : "NoAntiderivative";
  doc.input = {{"expression", print_expr(e)}, {"w", str(w)}, {"var", var}, {"mode", mode}};
  doc.evidence = antiderivative_json(r);
  return doc;
}

CertificateDoc depend(const std::string& text, const std::string& seeds, int d, int dx, int order) {
  if (order <= 0) throw InputError("--order must be positive");
  Expr e = parse_expr(text);
  std::vector<SeriesSource> sources;
  CertificateDoc doc;
  doc.input = {{"expression", print_expr(e)}};
  Json seed_json = Json::array();
  if (mentions(e, ExprKind::Z)) {
    BiDiffPoly f = eval_bidiff(e, DerivationMode::RationalQx);
    doc.input["curve"] = f.to_string();
    for (const auto& s : split(seeds, ',')) {
      auto yz = split(s, ':');
      if (yz.size() != 2) throw InputError("--seeds: equations in y' need seeds y0:z0");
      BigRat y0 = rational_arg("--seeds", yz[0]), z0 = rational_arg("--seeds", yz[1]);
      sources.push_back([f, y0, z0](std::size_t n) { return solve_series_curve(f, y0, z0, n); });
      seed_json.push_back({str(y0), str(z0)});
    }
  } else {
    RatFn h = eval_ratfn(e, Var::Y);
    doc.input["h"] = str(h);
    for (const auto& s : split(seeds, ',')) {
      BigRat y0 = rational_arg("--seeds", s);
      sources.push_back([h, y0](std::size_t n) { return solve_series_autonomous(h, y0, n); });
      seed_json.push_back(str(y0));
    }
  }
  doc.input["seeds"] = seed_json;
  DependenceResult r = find_algebraic_relation(sources, d, dx, static_cast<std::size_t>(order));
  doc.verdict = r.found() ? "Found" : "NoneAtBounds";
  if (r.found()) {
    doc.evidence["relation"] = r.relation->to_string();
    Json ts = Json::array();
    for (const auto& t : r.relation->terms) ts.push_back({{"exponents", t.exponents}, {"coeff", str(t.coeff.with_var(Var::X))}});
    doc.evidence["terms"] = ts;
  } else {
    doc.evidence["relation"] = nullptr;
    doc.evidence["terms"] = Json::array();
  }
  doc.evidence["bounds"] = {{"degree", r.degree}, {"xdegree", r.xdegree}, {"order", r.order}, {"verified_order", 2 * r.order}};
  doc.evidence["unknowns"] = r.unknowns;
  doc.evidence["nullity"] = r.nullity;
  doc.evidence["candidate_rejected"] = r.candidate_rejected;
  doc.hypotheses["expansion_point"] = "0";
  doc.hypotheses["none_at_bounds_is_not_a_proof"] = true;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of first-order ODEs f(y, y') = 0", "odetype"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string output = "doc";
  bool version = false;
  app.add_option("--output", output, "pretty or doc (structured certificate)")->check(CLI::IsMember({"pretty", "doc"}));
  app.add_flag("--version", version, "print the version and exit");

  std::string expr, mode = "qx", var, coeffs, riccati, matrix, g2, g3, seeds;
  std::optional<std::string> shift, compare;
  int order = 3, degree = 1, xdegree = 0, series_order = 0;

  auto* c_auto = app.add_subcommand("classify-auto", "classify y' = h(y)");
  c_auto->add_option("expr", expr, "h(y), or an equation linear in y'")->required();

  auto* c_cert = app.add_subcommand("certify-general", "branch criterion for general type");
  c_cert->add_option("expr", expr, "f(y, y'), implicitly = 0")->required();
  c_cert->add_option("--shift", shift, "Y0,Z0: translate the point (Y0, Z0) to the origin");
  c_cert->add_option("--mode", mode, "const or qx")->check(CLI::IsMember({"const", "qx"}));

  auto* c_exp = app.add_subcommand("expand-branch", "branch coefficients lambda_2..lambda_N");
  c_exp->add_option("expr", expr, "f(y, y'), implicitly = 0")->required();
  c_exp->add_option("--order", order, "N >= 3")->required();
  c_exp->add_option("--mode", mode, "const or qx")->check(CLI::IsMember({"const", "qx"}));

  auto* c_abel = app.add_subcommand("abel", "y' = a2 y^2 + a3 y^3 + ...");
  c_abel->add_option("--coeffs", coeffs, "a2,a3[,...]")->required();
  c_abel->add_option("--mode", mode, "const or qx")->required()->check(CLI::IsMember({"const", "qx"}));

  auto* c_mob = app.add_subcommand("mobius", "Riccati equation after y = (at+b)/(ct+d)");
  c_mob->add_option("--riccati", riccati, "a2,a1,a0")->required();
  c_mob->add_option("--matrix", matrix, "a,b,c,d")->required();

  auto* c_wei = app.add_subcommand("weierstrass", "validate (g2, g3) and compute j");
  c_wei->add_option("--g2", g2, "rational")->required();
  c_wei->add_option("--g3", g3, "rational")->required();
  c_wei->add_option("--compare", compare, "h2,h3: second curve");

  auto* c_int = app.add_subcommand("integrate-check", "antiderivative in the coefficient field");
  c_int->add_option("expr", expr, "w")->required();
  c_int->add_option("--var", var, "x or y")->required()->check(CLI::IsMember({"x", "y"}));
  c_int->add_option("--mode", mode, "const or qx")->required()->check(CLI::IsMember({"const", "qx"}));

  auto* c_dep = app.add_subcommand("depend", "bounded search for an algebraic relation among solutions");
  c_dep->add_option("--equation", expr, "h(y), or f(y, y') with seeds y0:z0")->required();
  c_dep->add_option("--seeds", seeds, "s1,s2,...")->required();
  c_dep->add_option("--degree", degree, "total degree bound d")->required();
  c_dep->add_option("--xdegree", xdegree, "x-degree bound dx")->required();
  c_dep->add_option("--order", series_order, "truncation N")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerdict;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitVerdict;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (version) {
    out << "odetype " << tool_version() << "\n";
    return kExitVerdict;
  }
  if (app.get_subcommands().empty()) {
    err << "error: a subcommand is required\n" << app.help();
    return kExitInput;
  }

  try {
    CertificateDoc doc;
    if (*c_auto) doc = classify_auto(expr);
    else if (*c_cert) doc = certify(expr, shift, mode);
    else if (*c_exp) doc = expand(expr, order, mode);
    else if (*c_abel) doc = abel(coeffs, mode);
    else if (*c_mob) doc = mobius(riccati, matrix);
    else if (*c_wei) doc = weierstrass(g2, g3, compare);
    else if (*c_int) doc = integrate_check(expr, var, mode);
    else doc = depend(expr, seeds, degree, xdegree, series_order);
    doc.command = app.get_subcommands().front()->get_name();
    doc.tool_version = tool_version();
    out << (output == "pretty" ? doc.pretty() : doc.serialize());
    return kExitVerdict;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace odetype
