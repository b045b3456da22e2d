#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "odetype/classify.hpp"

using namespace odetype;
using namespace odetype::testing;

namespace {

QPoly Y() { return QPoly::variable(Var::Y); }
QPoly cY(const BigRat& c) { return QPoly::constant(Var::Y, c); }
RatFn c(const BigRat& v) { return RatFn(v); }
RatFn X() { return RatFn::variable(Var::X); }
BigRat q(const char* s) { return BigRat::parse(s); }

BiDiffPoly qx(std::map<Monomial, RatFn> t) { return BiDiffPoly(DerivationMode::RationalQx, std::move(t)); }

}  // namespace

TEST_CASE("classify_autonomous: worked examples") {
  AutonomousVerdict v = classify_autonomous(RatFn(Y().pow(3) - Y() * Y()));
  CHECK(v.type == AutonomousType::General);
  REQUIRE(v.residues.size() == 2);
  CHECK(v.residues[0].pole == BigRat(0));
  CHECK(v.residues[0].residue == BigRat(-1));
  CHECK(v.residues[1].pole == BigRat(1));
  CHECK(v.residues[1].residue == BigRat(1));
  CHECK(v.exponential.reason == "pole of order >= 2");

  v = classify_autonomous(RatFn(Y(), Y() + cY(1)));
  CHECK(v.type == AutonomousType::General);
  CHECK(v.exponential.reason == "nonzero polynomial part");

  v = classify_autonomous(RatFn(Y() * Y()));
  CHECK(v.type == AutonomousType::Exact);
  REQUIRE(v.exact_witness);
  CHECK(*v.exact_witness == RatFn(cY(-1), Y()));

  v = classify_autonomous(RatFn(Y() * Y() - Y()));
  CHECK(v.type == AutonomousType::Exponential);
  CHECK(v.exponential.profile.commensurable.residues == std::vector<BigRat>{BigRat(-1), BigRat(1)});

  v = classify_autonomous(RatFn(Y() * Y() - cY(2)));
  CHECK(v.type == AutonomousType::Exponential);
  CHECK(v.residue_resultant == QPoly(Var::T, {q("-1/8"), BigRat(0), BigRat(1)}));

  CHECK(classify_autonomous(RatFn(cY(1))).type == AutonomousType::Exact);
  CHECK(classify_autonomous(RatFn(Y())).type == AutonomousType::Exponential);
  CHECK_THROWS_AS(classify_autonomous(RatFn(QPoly(Var::Y))), std::invalid_argument);
  CHECK_THROWS_AS(classify_autonomous(RatFn(QPoly::variable(Var::X))), std::invalid_argument);
}

TEST_CASE("classify_autonomous: Unknown is reported, not folded into General") {
  // 1/h = g'/g with g = y^5 - 2: residues are the roots of t^5 - ... beyond the factoring limit
  QPoly g = Y().pow(5) - cY(2);
  // w = 1/(y^5 - 2): residues 1/(5 a^4) at the fifth roots a of 2
  AutonomousVerdict v = classify_autonomous(RatFn(g));
  CHECK(v.type == AutonomousType::Unknown);
  CHECK(v.residue_resultant.degree() == 5);
}

TEST_CASE("verdict invariant under y -> y + alpha") {
  std::mt19937_64 rng(41);
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 50; ++i) {
    RatFn h;
    switch (i % 3) {
      case 0: h = random_ratfn(rng, Var::Y, 3); break;
      case 1: h = derive(random_ratfn(rng, Var::Y, 2), Var::Y); break;  // h = t'(y): w = 1/t'
      default: {
        QPoly g = random_root_product(rng, Var::Y, 2, 1);
        h = RatFn(g, g.derivative());  // w = g'/g
      }
    }
    if (h.is_zero()) continue;
    BigRat alpha = random_rat(rng);
    AutonomousVerdict a = classify_autonomous(h), b = classify_autonomous(shift(h, alpha));
    CHECK(a.type == b.type);
    counts[static_cast<int>(a.type)]++;
  }
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("Exact verdicts carry a chain-rule witness") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 40; ++i) {
    RatFn t = random_ratfn(rng, Var::Y, 3);
    RatFn tp = derive(t, Var::Y);
    if (tp.is_zero()) continue;
    RatFn h = tp.inverse();
    AutonomousVerdict v = classify_autonomous(h);
    REQUIRE(v.type == AutonomousType::Exact);
    CHECK(derive(*v.exact_witness, Var::Y) * h == RatFn(1));
  }
}

TEST_CASE("certify_general") {
  BiDiffPoly ex = qx({{{0, 1}, c(1)},
                      {{2, 0}, -X().inverse()},
                      {{1, 1}, -X()},
                      {{3, 0}, -(X() + c(1)).inverse()},
                      {{1, 2}, c(1)}});
  GeneralTypeCertificate cert = certify_general(ex);
  CHECK(cert.certified);
  CHECK(cert.lambda2 == X().inverse());
  CHECK(cert.lambda3 == c(1) + (X() + c(1)).inverse());
  REQUIRE(cert.evidence2.evidence.rational_residues.size() == 1);
  CHECK(cert.evidence2.evidence.rational_residues[0].pole == BigRat(0));
  REQUIRE(cert.evidence3.evidence.rational_residues.size() == 1);
  CHECK(cert.evidence3.evidence.rational_residues[0].pole == BigRat(-1));
  CHECK(cert.irreducibility_unverified);
  CHECK(cert.squarefree_in_z);

  cert = certify_general(qx({{{0, 1}, c(1)}, {{2, 0}, c(-1)}}));
  CHECK_FALSE(cert.certified);
  CHECK(cert.evidence2.exists);
  CHECK(cert.evidence2.witness == X());

  cert = certify_general(qx({{{0, 1}, c(1)}, {{2, 0}, -X().inverse()}, {{3, 0}, -X().inverse()}}));
  CHECK(cert.certified);
  CHECK(cert.lambda2 == X().inverse());
  CHECK(cert.lambda3 == X().inverse());

  CHECK_THROWS_AS(certify_general(qx({{{0, 1}, c(1)}, {{1, 0}, c(1)}})), std::invalid_argument);
}

TEST_CASE("certificate soundness: certified lambdas re-check to no antiderivative") {
  std::mt19937_64 rng(43);
  int certified = 0;
  for (int i = 0; i < 40; ++i) {
    RatFn l2 = random_ratfn(rng, Var::X, 2), l3 = random_ratfn(rng, Var::X, 2);
    BiDiffPoly f = qx({{{0, 1}, c(1)}, {{2, 0}, -l2.with_var(Var::X)}, {{3, 0}, -l3.with_var(Var::X)}, {{1, 1}, X()}});
    GeneralTypeCertificate cert = certify_general(f);
    if (!cert.certified) continue;
    ++certified;
    CHECK_FALSE(has_antiderivative(cert.lambda2, DerivationMode::RationalQx).exists);
    CHECK_FALSE(has_antiderivative(cert.lambda3, DerivationMode::RationalQx).exists);
  }
  CHECK(certified > 5);
}

TEST_CASE("classify_abel") {
  GeneralTypeCertificate c1 = classify_abel({c(-1), c(1)}, DerivationMode::ConstantsQ);
  CHECK(c1.certified);
  c1 = classify_abel({X().inverse(), (X() + c(1)).inverse()}, DerivationMode::RationalQx);
  CHECK(c1.certified);
  c1 = classify_abel({X(), X().inverse()}, DerivationMode::RationalQx);
  CHECK_FALSE(c1.certified);
  CHECK(c1.evidence2.witness == RatFn(QPoly(Var::X, {BigRat(0), BigRat(0), q("1/2")})));
  CHECK_THROWS_AS(classify_abel({c(1)}, DerivationMode::ConstantsQ), std::invalid_argument);
  CHECK_THROWS_AS(classify_abel({X(), c(1)}, DerivationMode::ConstantsQ), std::invalid_argument);

  // agrees with certify_general on Z - sum a_i Y^i
  std::mt19937_64 rng(44);
  for (int i = 0; i < 20; ++i) {
    std::vector<RatFn> a{random_ratfn(rng, Var::X, 2), random_ratfn(rng, Var::X, 2), random_ratfn(rng, Var::X, 1)};
    std::map<Monomial, RatFn> t{{{0, 1}, c(1)}};
    for (int k = 0; k < 3; ++k) t[{k + 2, 0}] = -a[static_cast<std::size_t>(k)];
    CHECK(classify_abel(a, DerivationMode::RationalQx).certified == certify_general(qx(t)).certified);
  }
}

TEST_CASE("mobius_riccati worked examples") {
  RiccatiCoeffs r(c(1), c(0), c(0));
  CHECK(mobius_riccati(r, {c(1), c(0), c(0), c(1)}) == r);
  CHECK(mobius_riccati(r, {c(0), c(1), c(1), c(0)}) == RiccatiCoeffs(c(0), c(0), c(-1)));
  CHECK(mobius_riccati(RiccatiCoeffs(c(0), c(0), c(1)), {c(1), c(0), c(1), c(1)}) ==
        RiccatiCoeffs(c(1), c(-2), c(1)));
  CHECK_THROWS_AS(mobius_riccati(r, {c(1), c(2), c(2), c(4)}), std::invalid_argument);
  CHECK_THROWS_AS(RiccatiCoeffs(c(0), c(0), c(0)), std::invalid_argument);
}

TEST_CASE("mobius_riccati round trip with x-dependent matrices") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 50; ++i) {
    RiccatiCoeffs r(random_ratfn(rng, Var::X, 2), random_ratfn(rng, Var::X, 1), RatFn(random_rat(rng)));
    Mobius m{random_ratfn(rng, Var::X, 1), random_ratfn(rng, Var::X, 1), RatFn(random_rat(rng)),
             RatFn(random_nonzero_rat(rng)) + X()};
    if (m.det().is_zero()) continue;
    CHECK(mobius_riccati(mobius_riccati(r, m), m.inverse()) == r);
  }
}

TEST_CASE("Weierstrass validation and j-invariant") {
  CHECK(weierstrass_validate(1, 0));
  CHECK_FALSE(weierstrass_validate(0, 0));
  CHECK_FALSE(weierstrass_validate(3, 1));
  CHECK(j_invariant(1, 0) == BigRat(1728));
  CHECK(j_invariant(0, 1) == BigRat(0));
  CHECK(j_invariant(4, 1) == BigRat(1728 * 64) / BigRat(37));
  CHECK_THROWS_AS(j_invariant(3, 1), std::invalid_argument);
  CHECK(iso_over_kbar({1, 0}, {16, 0}));
  CHECK_FALSE(iso_over_kbar({1, 0}, {0, 1}));
  CHECK(iso_over_kbar({4, 1}, {4, 1}));
  CHECK_THROWS_AS(WeierstrassData(3, 1, c(1)), std::invalid_argument);
  CHECK_THROWS_AS(WeierstrassData(1, 0, c(0)), std::invalid_argument);
}

TEST_CASE("j is invariant under twists") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 50; ++i) {
    BigRat g2 = random_rat(rng), g3 = random_rat(rng), u = random_nonzero_rat(rng);
    if (!weierstrass_validate(g2, g3)) continue;
    CHECK(j_invariant(u.pow(4) * g2, u.pow(6) * g3) == j_invariant(g2, g3));
  }
}
