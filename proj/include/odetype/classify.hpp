#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "odetype/curve.hpp"
#include "odetype/exactalg.hpp"
#include "odetype/ratcalc.hpp"

namespace odetype {

// ---------------------------------------------------------------------------
// Autonomous equations y' = h(y)
// ---------------------------------------------------------------------------

enum class AutonomousType { Exact, Exponential, General, Unknown };

std::string_view autonomous_type_name(AutonomousType t);

/// Verdict for y' = h(y) with its evidence. Every field can be rechecked
/// with the ratcalc operations on `w = 1/h`.
struct AutonomousVerdict {
  AutonomousType type = AutonomousType::Unknown;
  RatFn h;
  RatFn w;
  PartialFractions partial_fractions;
  HermiteResult hermite;
  /// Exact: t with dt/dy = w, hence t' = 1 along solutions.
  std::optional<RatFn> exact_witness;
  /// Residues of w at rational poles (equal to those of the Hermite remainder).
  std::vector<RationalResidue> residues;
  /// Squarefree residue polynomial of the Hermite remainder; 1 when exact.
  QPoly residue_resultant{Var::T};
  LogDerivativeVerdict exponential;
  /// General / Unknown: the form conditions that failed and why.
  std::vector<std::string> failed_conditions;
};

/// Exact iff 1/h has no residues; Exponential iff 1/h is a constant times
/// a logarithmic derivative; General iff both fail decisively. h must be a
/// nonzero function of y (std::invalid_argument otherwise).
AutonomousVerdict classify_autonomous(const RatFn& h);

// ---------------------------------------------------------------------------
// General-type certification
// ---------------------------------------------------------------------------

struct GeneralTypeCertificate {
  bool certified = false;
  RatFn lambda2;
  RatFn lambda3;
  AntiderivativeResult evidence2;
  AntiderivativeResult evidence3;
  DerivationMode mode = DerivationMode::RationalQx;
  bool irreducibility_unverified = true;
  bool squarefree_in_z = false;
  std::string reason;
};

/// Sufficient criterion only: certified when neither lambda_2 nor
/// lambda_3 of the branch at the origin has an antiderivative. Requires
/// simple_point_tangent_Z(f).ok() (std::invalid_argument otherwise).
GeneralTypeCertificate certify_general(const BiDiffPoly& f);

/// y' = a_2 y^2 + ... + a_n y^n, n >= 3; `coeffs` starts at a_2.
GeneralTypeCertificate classify_abel(const std::vector<RatFn>& coeffs, DerivationMode mode);

// ---------------------------------------------------------------------------
// Riccati equations and Moebius transforms
// ---------------------------------------------------------------------------

/// t' = a2 t^2 + a1 t + a0, not all zero.
struct RiccatiCoeffs {
  RatFn a2, a1, a0;

  RiccatiCoeffs(RatFn a2_, RatFn a1_, RatFn a0_);
  friend bool operator==(const RiccatiCoeffs&, const RiccatiCoeffs&) = default;
};

/// y = (a t + b) / (c t + d), ad - bc != 0.
struct Mobius {
  RatFn a, b, c, d;

  RatFn det() const { return a * d - b * c; }
  Mobius inverse() const { return {d, -b, -c, a}; }
};

/// Riccati equation satisfied by y = M(t) when t satisfies r. Entries of M
/// may depend on x; their derivatives enter the result.
RiccatiCoeffs mobius_riccati(const RiccatiCoeffs& r, const Mobius& m);

// ---------------------------------------------------------------------------
// Weierstrass equations (t')^2 = alpha^2 (4 t^3 - g2 t - g3)
// ---------------------------------------------------------------------------

struct WeierstrassData {
  BigRat g2, g3;
  RatFn alpha;

  WeierstrassData(BigRat g2_, BigRat g3_, RatFn alpha_);
};

/// 27 g3^2 - g2^3.
BigRat weierstrass_discriminant(const BigRat& g2, const BigRat& g3);
bool weierstrass_validate(const BigRat& g2, const BigRat& g3);
/// 1728 g2^3 / (g2^3 - 27 g3^2); std::invalid_argument when degenerate.
BigRat j_invariant(const BigRat& g2, const BigRat& g3);
/// Isomorphic over an algebraically closed field iff the j-invariants agree.
bool iso_over_kbar(const std::array<BigRat, 2>& c1, const std::array<BigRat, 2>& c2);

}  // namespace odetype
