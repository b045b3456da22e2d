// Acceptance gate: one PASS/FAIL line per criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "ast_generator.hpp"
#include "dependence_instances.hpp"
#include "numeric_oracle.hpp"
#include "odetype/certificate.hpp"
#include "odetype/classify.hpp"
#include "odetype/cli.hpp"
#include "odetype/expr.hpp"
#include "odetype/series.hpp"

using namespace odetype;
using namespace odetype::testing;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

RatFn X() { return RatFn::variable(Var::X); }
RatFn parse_rf(const CertificateDoc::Json& j) { return eval_ratfn(parse_expr(j.get<std::string>()), Var::X); }

const char* kExampleCurve = "y' - (1/x)*y^2 - x*y*y' - (1/(x+1))*y^3 + y*y'^2";

// 1. Verdicts on the worked autonomous equations and exact residue data.
Check verdicts() {
  Check c;
  struct Case {
    const char* h;
    const char* verdict;
    const char* residues;
  };
  const Case cases[] = {
      {"y^3 - y^2", "General", R"([{"pole":"0","residue":"-1"},{"pole":"1","residue":"1"}])"},
      {"y/(y+1)", "General", R"([{"pole":"0","residue":"1"}])"},
      {"y^2", "Exact", "[]"},
      {"y^2 - y", "Exponential", R"([{"pole":"0","residue":"-1"},{"pole":"1","residue":"1"}])"},
      {"y^2 - 2", "Exponential", "[]"},
  };
  for (const auto& k : cases) {
    CliResult r = cli({"classify-auto", k.h});
    c.expect(r.code == 0, std::string("exit code for ") + k.h);
    if (r.code != 0) continue;
    CertificateDoc d = CertificateDoc::parse(r.out);
    c.expect(d.verdict == k.verdict, std::string(k.h) + " -> " + d.verdict);
    c.expect(d.evidence["residues"].dump() == k.residues, std::string("residues of ") + k.h);
  }
  // irrational residues of 1/(y^2 - 2): +-1/(2 sqrt 2), roots of t^2 - 1/8
  CertificateDoc d = CertificateDoc::parse(cli({"classify-auto", "y^2 - 2"}).out);
  c.expect(d.evidence["residue_resultant"] == "t^2 - 1/8", "residue polynomial of y^2 - 2");
  d = CertificateDoc::parse(cli({"classify-auto", "y^2"}).out);
  c.expect(d.evidence["exact_witness"] == "-1/y", "exact witness of y^2");
  return c;
}

// 2. The example curve certifies with the stated lambdas and residue evidence.
Check example_certificate() {
  Check c;
  CliResult r = cli({"certify-general", kExampleCurve});
  c.expect(r.code == 0, "exit code");
  if (r.code != 0) return c;
  CertificateDoc d = CertificateDoc::parse(r.out);
  c.expect(d.verdict == "Certified", "verdict " + d.verdict);
  c.expect(parse_rf(d.evidence["lambda2"]) == X().inverse(), "lambda2");
  c.expect(parse_rf(d.evidence["lambda3"]) == RatFn(1) + (X() + RatFn(1)).inverse(), "lambda3");
  const auto& e2 = d.evidence["lambda2_antiderivative"];
  const auto& e3 = d.evidence["lambda3_antiderivative"];
  c.expect(e2["exists"] == false && e3["exists"] == false, "antiderivative flags");
  c.expect(e2["rational_residues"].dump() == R"([{"pole":"0","residue":"1"}])", "residue at x = 0");
  c.expect(e3["rational_residues"].dump() == R"([{"pole":"-1","residue":"1"}])", "residue at x = -1");
  return c;
}

// 3. lambda_2 = x20, lambda_3 = x11 x20 + x30 on template curves with residual check.
Check lambda_formula() {
  Check c;
  std::mt19937_64 rng(1003);
  const int N = 5;
  for (int i = 0; i < 100; ++i) {
    RatFn x20 = random_ratfn(rng, Var::X, 1), x11 = random_ratfn(rng, Var::X, 1), x30 = random_ratfn(rng, Var::X, 1);
    RatFn x02 = random_ratfn(rng, Var::X, 1), x21 = RatFn(random_rat(rng)), x40 = RatFn(random_rat(rng));
    std::map<Monomial, RatFn> t{{{0, 1}, RatFn(1)}, {{2, 0}, -x20}, {{1, 1}, -x11}, {{3, 0}, -x30},
                                {{0, 2}, -x02},     {{2, 1}, -x21}, {{4, 0}, -x40}};
    BiDiffPoly f(DerivationMode::RationalQx, t);
    BranchExpansion b = branch_expand(f, N);
    c.expect(b.lambda(2) == x20, "lambda2 on template " + std::to_string(i));
    c.expect(b.lambda(3) == x11 * x20 + x30, "lambda3 on template " + std::to_string(i));
    // residual f(Y, sum lambda_i Y^i) in Q(x)[Y], low coefficients must vanish
    std::vector<RatFn> zc(static_cast<std::size_t>(N) + 1);
    for (int k = 2; k <= N; ++k) zc[static_cast<std::size_t>(k)] = b.lambda(k);
    Poly<RatFn> z(Var::Y, zc), acc(Var::Y);
    for (const auto& [m, k] : f.terms()) {
      std::vector<RatFn> yc(static_cast<std::size_t>(m.first) + 1);
      yc.back() = k;
      acc = acc + Poly<RatFn>(Var::Y, yc) * z.pow(static_cast<unsigned>(m.second));
    }
    for (int k = 0; k <= N; ++k) c.expect(acc.coeff(k).is_zero(), "residual on template " + std::to_string(i));
  }
  return c;
}

// 4. Hermite exactness and the commensurability oracle.
Check integration_oracles() {
  Check c;
  std::mt19937_64 rng(1004);
  for (int i = 0; i < 200; ++i) {
    RatFn w = (i % 2) ? random_ratfn(rng, Var::Y, 6)
                      : RatFn(random_poly(rng, Var::Y, 5), random_root_product(rng, Var::Y, 3, 3));
    HermiteResult h = hermite_reduce(w);
    c.expect(derive(h.rational_part, Var::Y) + h.remainder == w, "hermite reconstruction of " + w.to_string());
  }
  int disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    QPoly r = random_residue_poly(rng);
    Commensurability k = residues_commensurable(r);
    bool oracle = ratios_rational(r);
    if (k.decision == Decision::Unknown || (k.decision == Decision::Yes) != oracle) ++disagreements;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements with the root-ratio oracle");
  return c;
}

// 5. Dependence among series solutions at desk scale.
Check dependence() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1005);
  auto src = [](const RatFn& h, const BigRat& y0) -> SeriesSource {
    return [h, y0](std::size_t n) { return solve_series_autonomous(h, y0, n); };
  };

  int tested = 0;
  while (tested < 20) {
    RatFn h = tested % 2 == 0 ? exact_instance(rng) : exponential_instance(rng);
    auto seeds = pick_seeds(rng, h, 2);
    if (!seeds) continue;
    AutonomousType t = classify_autonomous(h).type;
    c.expect(t == AutonomousType::Exact || t == AutonomousType::Exponential, "instance type for " + h.to_string());
    bool found = false;
    for (int d = 1; d <= 4 && !found; ++d)
      found = find_algebraic_relation({src(h, (*seeds)[0]), src(h, (*seeds)[1])}, d, 0, 30).found();
    c.expect(found, "no relation with d <= 4 for y' = " + h.to_string());
    ++tested;
  }

  int riccati = 0;
  while (riccati < 10) {
    RatFn h(riccati_instance(rng));
    auto seeds = pick_seeds(rng, h, 4);
    if (!seeds) continue;
    std::vector<SeriesSource> s;
    std::vector<TruncSeries> longer;
    for (const auto& y0 : *seeds) {
      s.push_back(src(h, y0));
      longer.push_back(solve_series_autonomous(h, y0, 50));
    }
    DependenceResult r = find_algebraic_relation(s, 2, 0, 25);
    c.expect(r.found(), "no d = 2 relation for four solutions of y' = " + h.to_string());
    // the cross-ratio relation itself, with the seeds' cross-ratio
    const auto& q = *seeds;
    BigRat k = (q[0] - q[2]) * (q[1] - q[3]) / ((q[0] - q[3]) * (q[1] - q[2]));
    TruncSeries cr = (longer[0] - longer[2]) * (longer[1] - longer[3]) - k * ((longer[0] - longer[3]) * (longer[1] - longer[2]));
    c.expect(cr.is_zero_series(), "cross-ratio not constant for y' = " + h.to_string());
    ++riccati;
  }

  RatFn g(QPoly(Var::Y, {BigRat(0), BigRat(0), BigRat(-1), BigRat(1)}));
  DependenceResult none = find_algebraic_relation({src(g, BigRat(2)), src(g, BigRat(3))}, 3, 0, 60);
  c.expect(!none.found(), "y' = y^3 - y^2 produced a relation at d = 3, N = 60");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s exceeds 30 s");
  if (c.ok) c.detail = "runtime " + std::to_string(secs).substr(0, 5) + " s";
  return c;
}

// 6. Weierstrass data and the j-invariant.
Check weierstrass() {
  Check c;
  c.expect(j_invariant(1, 0) == BigRat(1728), "j(1,0)");
  c.expect(j_invariant(0, 1) == BigRat(0), "j(0,1)");
  c.expect(!weierstrass_validate(3, 1), "(3,1) accepted");
  std::mt19937_64 rng(1006);
  auto valid_pair = [&] {
    for (;;) {
      BigRat g2 = random_rat(rng), g3 = random_rat(rng);
      if (weierstrass_validate(g2, g3)) return std::array<BigRat, 2>{g2, g3};
    }
  };
  for (int i = 0; i < 50; ++i) {
    auto [g2, g3] = valid_pair();
    BigRat u = random_nonzero_rat(rng);
    c.expect(j_invariant(u.pow(4) * g2, u.pow(6) * g3) == j_invariant(g2, g3), "twist invariance");
  }
  // ten curves and a twist of each, so the relation has nontrivial classes
  std::vector<std::array<BigRat, 2>> curves;
  for (int i = 0; i < 10; ++i) {
    auto p = valid_pair();
    BigRat u = random_nonzero_rat(rng);
    curves.push_back(p);
    curves.push_back({u.pow(4) * p[0], u.pow(6) * p[1]});
  }
  int related = 0;
  for (const auto& a : curves) {
    c.expect(iso_over_kbar(a, a), "reflexivity");
    for (const auto& b : curves) {
      bool ab = iso_over_kbar(a, b);
      related += ab ? 1 : 0;
      c.expect(ab == iso_over_kbar(b, a), "symmetry");
      for (const auto& e : curves)
        if (ab && iso_over_kbar(b, e)) c.expect(iso_over_kbar(a, e), "transitivity");
    }
  }
  c.expect(related >= 40, "too few related pairs to exercise transitivity");
  return c;
}

// 7. Moebius transforms of Riccati equations.
Check mobius() {
  Check c;
  RiccatiCoeffs r(RatFn(1), RatFn(0), RatFn(0));
  c.expect(mobius_riccati(r, {RatFn(1), RatFn(0), RatFn(0), RatFn(1)}) == r, "identity");
  c.expect(mobius_riccati(r, {RatFn(0), RatFn(1), RatFn(1), RatFn(0)}) == RiccatiCoeffs(RatFn(0), RatFn(0), RatFn(-1)),
           "inversion");
  c.expect(mobius_riccati(RiccatiCoeffs(RatFn(0), RatFn(0), RatFn(1)), {RatFn(1), RatFn(0), RatFn(1), RatFn(1)}) ==
               RiccatiCoeffs(RatFn(1), RatFn(-2), RatFn(1)),
           "t/(t+1)");
  std::mt19937_64 rng(1007);
  int done = 0;
  while (done < 50) {
    RiccatiCoeffs q(random_ratfn(rng, Var::X, 2), random_ratfn(rng, Var::X, 2), random_ratfn(rng, Var::X, 1));
    Mobius m{random_ratfn(rng, Var::X, 1), random_ratfn(rng, Var::X, 1), random_ratfn(rng, Var::X, 1),
             random_ratfn(rng, Var::X, 1)};
    if (m.det().is_zero()) continue;
    c.expect(mobius_riccati(mobius_riccati(q, m), m.inverse()) == q, "round trip " + std::to_string(done));
    ++done;
  }
  return c;
}

// 8. Parser round trip and the CLI contract.
Check parser_cli() {
  Check c;
  std::mt19937_64 rng(1008);
  for (int i = 0; i < 500; ++i) {
    Expr e = random_ast(rng, 5);
    std::string s = print_expr(e);
    c.expect(parse_expr(s) == e, "round trip of " + s);
  }
  auto verdict = [&](std::vector<std::string> args, const std::string& want) {
    CliResult r = cli(args);
    c.expect(r.code == 0, args[0] + " exit code " + std::to_string(r.code));
    if (r.code == 0) c.expect(CertificateDoc::parse(r.out).verdict == want, args[0] + " verdict");
  };
  verdict({"classify-auto", "y^3 - y^2"}, "General");
  verdict({"certify-general", kExampleCurve}, "Certified");
  verdict({"weierstrass", "--g2", "3", "--g3", "1"}, "Invalid");
  CliResult w = cli({"weierstrass", "--g2", "3", "--g3", "1"});
  c.expect(w.out.find("27g3²−g2³=0") != std::string::npos, "weierstrass reason");
  CliResult bad = cli({"classify-auto", "y' + + y"});
  c.expect(bad.code == 2 && bad.err.find("offset 3") != std::string::npos, "syntax error exit code and offset");
  c.expect(cli({"certify-general", "y' - y"}).code == 3, "precondition exit code");
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"autonomous verdict reproduction", verdicts},
      {"general-type certificate reproduction", example_certificate},
      {"lambda-formula property", lambda_formula},
      {"integration-analysis oracle suite", integration_oracles},
      {"dependence among series solutions", dependence},
      {"Weierstrass / j-invariant", weierstrass},
      {"Moebius transform round trip", mobius},
      {"parser / CLI contract", parser_cli},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d. %s%s%s\n", c.ok ? "PASS" : "FAIL", n, name, c.detail.empty() ? "" : ": ", c.detail.c_str());
    failed += c.ok ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
