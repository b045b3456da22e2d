#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "odetype/certificate.hpp"
#include "odetype/classify.hpp"
#include "odetype/cli.hpp"
#include "odetype/expr.hpp"
#include "odetype/series.hpp"

using namespace odetype;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

CertificateDoc doc_of(const Outcome& o) {
  REQUIRE(o.code == 0);
  return CertificateDoc::parse(o.out);
}

const char* kExampleCurve = "y' - (1/x)*y^2 - x*y*y' - (1/(x+1))*y^3 + y*y'^2";

RatFn rf(const CertificateDoc::Json& j, Var v) { return eval_ratfn(parse_expr(j.get<std::string>()), v); }

}  // namespace

TEST_CASE("documented examples") {
  CertificateDoc d = doc_of(call({"classify-auto", "y^3 - y^2"}));
  CHECK(d.verdict == "General");
  CHECK(d.evidence["residues"].dump() == R"([{"pole":"0","residue":"-1"},{"pole":"1","residue":"1"}])");

  d = doc_of(call({"certify-general", kExampleCurve}));
  CHECK(d.verdict == "Certified");
  RatFn X = RatFn::variable(Var::X);
  CHECK(rf(d.evidence["lambda2"], Var::X) == X.inverse());
  CHECK(rf(d.evidence["lambda3"], Var::X) == RatFn(1) + (X + RatFn(1)).inverse());
  CHECK(d.evidence["lambda2_antiderivative"]["rational_residues"][0]["pole"] == "0");
  CHECK(d.evidence["lambda3_antiderivative"]["rational_residues"][0]["pole"] == "-1");
  CHECK(d.hypotheses["irreducibility_unverified"] == true);

  d = doc_of(call({"weierstrass", "--g2", "3", "--g3", "1"}));
  CHECK(d.verdict == "Invalid");
  CHECK(d.evidence["reason"] == "27g3²−g2³=0");
}

TEST_CASE("every subcommand") {
  CHECK(doc_of(call({"classify-auto", "y' - y^2"})).verdict == "Exact");
  CHECK(doc_of(call({"classify-auto", "(y + 1)*y' - y"})).verdict == "General");
  CHECK(doc_of(call({"classify-auto", "y^2 - 2"})).verdict == "Exponential");

  CertificateDoc d = doc_of(call({"certify-general", "y' - y^2", "--mode", "const"}));
  CHECK(d.verdict == "Inconclusive");
  d = doc_of(call({"certify-general", "y' - y^2"}));
  CHECK(d.verdict == "Inconclusive");
  CHECK(d.evidence["lambda2_antiderivative"]["witness"] == "x");
  // the point (1, 1) of y' - y^2 moved to the origin: tangent is not Z = 0
  CHECK(call({"certify-general", "y' - y^2", "--shift", "1,1"}).code == 3);
  d = doc_of(call({"certify-general", "y' - 2 - (y - 1)^2/x - (y - 1)^3/(x + 1)", "--shift", "1,2"}));
  CHECK(d.verdict == "Certified");
  CHECK(d.input["shift"].dump() == R"(["1","2"])");

  d = doc_of(call({"expand-branch", kExampleCurve, "--order", "4"}));
  CHECK(d.evidence["lambdas"].size() == 3);
  CHECK(d.evidence["lambdas"][0]["lambda"] == "1/x");

  d = doc_of(call({"abel", "--coeffs", "1/x,1+1/(x+1)", "--mode", "qx"}));
  CHECK(d.verdict == "Certified");
  d = doc_of(call({"abel", "--coeffs", "1,-1", "--mode", "const"}));
  CHECK(d.verdict == "Certified");

  d = doc_of(call({"mobius", "--riccati", "0,0,1", "--matrix", "1,0,1,1"}));
  CHECK(d.evidence["riccati"]["a2"] == "1");
  CHECK(d.evidence["riccati"]["a1"] == "-2");
  CHECK(d.evidence["riccati"]["a0"] == "1");

  d = doc_of(call({"weierstrass", "--g2", "1", "--g3", "0", "--compare", "16,0"}));
  CHECK(d.evidence["j"] == "1728");
  CHECK(d.evidence["compare"]["isomorphic_over_kbar"] == true);
  d = doc_of(call({"weierstrass", "--g2", "4", "--g3", "1"}));
  CHECK(d.evidence["j"] == "110592/37");

  d = doc_of(call({"integrate-check", "1/x^2", "--var", "x", "--mode", "qx"}));
  CHECK(d.verdict == "Antiderivative");
  CHECK(d.evidence["witness"] == "-1/x");
  d = doc_of(call({"integrate-check", "1/(y^2 - 2)", "--var", "y", "--mode", "qx"}));
  CHECK(d.verdict == "NoAntiderivative");
  CHECK(d.evidence["residue_resultant"] == "t^2 - 1/8");
  d = doc_of(call({"integrate-check", "0", "--var", "x", "--mode", "const"}));
  CHECK(d.verdict == "Antiderivative");

  d = doc_of(call({"depend", "--equation", "y^2", "--seeds", "1,1/2", "--degree", "2", "--xdegree", "0", "--order", "20"}));
  CHECK(d.verdict == "Found");
  CHECK(d.evidence["relation"] == "u1 - u2 - u1*u2");
  d = doc_of(call({"depend", "--equation", "y^3 - y^2", "--seeds", "2,3", "--degree", "3", "--xdegree", "0", "--order", "60"}));
  CHECK(d.verdict == "NoneAtBounds");
  CHECK(d.evidence["bounds"].dump() == R"({"degree":3,"xdegree":0,"order":60,"verified_order":120})");
  d = doc_of(call({"depend", "--equation", "y' - y^2", "--seeds", "1:1,1/2:1/4", "--degree", "2", "--xdegree", "0", "--order", "20"}));
  CHECK(d.evidence["relation"] == "u1 - u2 - u1*u2");
}

TEST_CASE("exit-code table for malformed input") {
  struct Row {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Row> table = {
      {{}, 2},
      {{"no-such-command"}, 2},
      {{"classify-auto"}, 2},
      {{"classify-auto", "y' + + y"}, 2},
      {{"classify-auto", "x*y"}, 2},
      {{"classify-auto", "y'^2 - y"}, 2},
      {{"classify-auto", "y + q"}, 2},
      {{"classify-auto", "0"}, 3},
      {{"classify-auto", "y", "--output", "xml"}, 2},
      {{"certify-general", "y' - y"}, 3},
      {{"certify-general", "y'/y"}, 2},
      {{"certify-general", "y' - y^2", "--shift", "1"}, 2},
      {{"certify-general", "y' - y^2", "--mode", "none"}, 2},
      {{"expand-branch", "y' - y^2", "--order", "2"}, 3},
      {{"expand-branch", "y' - y^2", "--order", "three"}, 2},
      {{"abel", "--coeffs", "1", "--mode", "qx"}, 2},
      {{"abel", "--coeffs", "x,1", "--mode", "const"}, 3},
      {{"abel", "--coeffs", "y,1", "--mode", "qx"}, 2},
      {{"mobius", "--riccati", "1,0,0", "--matrix", "1,2,2,4"}, 3},
      {{"mobius", "--riccati", "0,0,0", "--matrix", "1,0,0,1"}, 3},
      {{"mobius", "--riccati", "1,0", "--matrix", "1,0,0,1"}, 2},
      {{"weierstrass", "--g2", "abc", "--g3", "1"}, 2},
      {{"weierstrass", "--g2", "1.5", "--g3", "1"}, 2},
      {{"weierstrass", "--g2", "1"}, 2},
      {{"integrate-check", "x", "--var", "x", "--mode", "const"}, 3},
      {{"integrate-check", "y", "--var", "x", "--mode", "qx"}, 2},
      {{"depend", "--equation", "y", "--seeds", "1,2", "--degree", "1", "--xdegree", "0", "--order", "5"}, 3},
      {{"depend", "--equation", "1/y", "--seeds", "0", "--degree", "1", "--xdegree", "0", "--order", "20"}, 3},
      {{"depend", "--equation", "y' - y", "--seeds", "1", "--degree", "1", "--xdegree", "0", "--order", "20"}, 2},
      {{"depend", "--equation", "y' - y", "--seeds", "1:2", "--degree", "1", "--xdegree", "0", "--order", "20"}, 3},
      {{"depend", "--equation", "y' - y/x", "--seeds", "1:1", "--degree", "1", "--xdegree", "0", "--order", "20"}, 3},
  };
  for (const auto& row : table) {
    std::string shown;
    for (const auto& a : row.args) shown += a + " ";
    CAPTURE(shown);
    Outcome o = call(row.args);
    CHECK(o.code == row.code);
    CHECK(o.out.empty() == (row.code != 0));
    CHECK_FALSE(o.err.empty());
  }
}

TEST_CASE("parse errors report the offset") {
  Outcome o = call({"classify-auto", "y' + + y"});
  CHECK(o.err.find("syntax error") != std::string::npos);
  CHECK(o.err.find("offset 3") != std::string::npos);
}

TEST_CASE("certificates round-trip byte for byte") {
  const std::vector<std::vector<std::string>> cmds = {
      {"classify-auto", "y^3 - y^2"},
      {"classify-auto", "y^2"},
      {"certify-general", kExampleCurve},
      {"expand-branch", kExampleCurve, "--order", "5"},
      {"abel", "--coeffs", "x,1/x", "--mode", "qx"},
      {"mobius", "--riccati", "x,1,0", "--matrix", "x,1,0,1"},
      {"weierstrass", "--g2", "4", "--g3", "1", "--compare", "3,1"},
      {"integrate-check", "1/(y^3 - y)", "--var", "y", "--mode", "qx"},
      {"depend", "--equation", "y", "--seeds", "1,2", "--degree", "1", "--xdegree", "0", "--order", "20"},
  };
  for (const auto& c : cmds) {
    Outcome o = call(c);
    REQUIRE(o.code == 0);
    CertificateDoc d = CertificateDoc::parse(o.out);
    CHECK(d.serialize() == o.out);
    CHECK(d.command == c[0]);
    CHECK(d.tool_version == tool_version());
    std::vector<std::string> pretty = c;
    pretty.insert(pretty.begin(), {"--output", "pretty"});
    Outcome p = call(pretty);
    CHECK(p.code == 0);
    CHECK(p.out.find("verdict: " + d.verdict) != std::string::npos);
  }
  CHECK_THROWS_AS(CertificateDoc::parse("{}"), InputError);
  CHECK_THROWS_AS(CertificateDoc::parse("not json"), InputError);
}

TEST_CASE("certificate evidence re-checks in the library") {
  CertificateDoc d = doc_of(call({"classify-auto", "1/(3*y^2 - 1)"}));
  REQUIRE(d.verdict == "Exact");
  RatFn h = rf(d.input["h"], Var::Y);
  RatFn t = rf(d.evidence["exact_witness"], Var::Y);
  CHECK(derive(t, Var::Y) * h == RatFn(1));

  d = doc_of(call({"certify-general", kExampleCurve}));
  for (const char* k : {"lambda2", "lambda3"})
    CHECK_FALSE(has_antiderivative(rf(d.evidence[k], Var::X), DerivationMode::RationalQx).exists);
  BiDiffPoly f = eval_bidiff(parse_expr(d.input["curve"].get<std::string>()), DerivationMode::RationalQx);
  CHECK(certify_general(f).certified);

  d = doc_of(call({"depend", "--equation", "y^2 - y", "--seeds", "2,3", "--degree", "2", "--xdegree", "0", "--order", "20"}));
  REQUIRE(d.verdict == "Found");
  RelationCandidate rc;
  for (const auto& t : d.evidence["terms"])
    rc.terms.push_back({t["exponents"].get<std::vector<int>>(), eval_ratfn(parse_expr(t["coeff"].get<std::string>()), Var::X).num()});
  RatFn hh = rf(d.input["h"], Var::Y);
  std::vector<TruncSeries> s{solve_series_autonomous(hh, BigRat(2), 80), solve_series_autonomous(hh, BigRat(3), 80)};
  CHECK(rc.evaluate(s).is_zero_series());
}

TEST_CASE("version and help") {
  Outcome o = call({"--version"});
  CHECK(o.code == 0);
  CHECK(o.out == "odetype " + tool_version() + "\n");
  o = call({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("classify-auto") != std::string::npos);
}
