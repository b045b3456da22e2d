#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odetype/exactalg.hpp"
#include "odetype/ratfn.hpp"

namespace odetype {

/// Derivation on the scalars: zero (k = C) or d/dx (k = C(x)).
enum class DerivationMode { ConstantsQ, RationalQx };

std::string_view mode_name(DerivationMode m);

enum class Decision { Yes, No, Unknown };

std::string_view decision_name(Decision d);

/// d/dv. A function of a different variable counts as a constant.
RatFn derive(const RatFn& w, Var v);

/// input = derive(rational_part) + remainder, den(remainder) squarefree and
/// remainder proper. The polynomial part of the input is integrated into
/// rational_part.
struct HermiteResult {
  RatFn rational_part;
  RatFn remainder;
};

HermiteResult hermite_reduce(const RatFn& w);

/// Monic squarefree R(t) whose roots are the residues of h at its finite
/// poles: sqfree(Res_v(den, num - t*den')). Requires a proper h with
/// squarefree denominator (std::invalid_argument otherwise). Returns 1 for
/// h = 0.
QPoly rt_resultant(const RatFn& h);

enum class FactorShape { Linear, QuadraticBinomial, Other };

std::string_view shape_name(FactorShape s);

struct ShapedFactor {
  QPoly factor;
  FactorShape shape;
};

/// Outcome of the commensurability test on a residue polynomial.
///
/// Yes carries a witness: either every residue is rational (`residues`), or
/// every factor is t^2 - a_i with a_i = scale_i^2 * base (`base`,
/// `scales`), so all residues are rational multiples of sqrt(base).
struct Commensurability {
  Decision decision = Decision::Unknown;
  std::vector<ShapedFactor> factors;
  std::optional<QPoly> unfactored;
  std::string reason;
  std::vector<BigRat> residues;
  std::optional<BigRat> base;
  std::vector<BigRat> scales;
};

/// Pairwise rational ratios among the roots of R, decided from the shapes
/// of R's irreducible factors over Q. R must be squarefree and monic with
/// R(0) != 0.
Commensurability residues_commensurable(const QPoly& r);

struct ResidueProfile {
  bool poly_part_zero = false;
  bool simple_poles_only = false;
  QPoly rt_resultant{Var::T};
  Commensurability commensurable;
};

/// Full residue picture of w; the resultant is only formed when w is
/// proper with squarefree denominator.
ResidueProfile residue_profile(const RatFn& w);

struct LogDerivativeVerdict {
  Decision decision = Decision::No;
  std::string reason;
  ResidueProfile profile;
};

/// Whether w = c * sum m_i/(v - c_i) with integers m_i, i.e. w is a constant
/// multiple of a logarithmic derivative.
LogDerivativeVerdict is_log_derivative_form(const RatFn& w);

/// Residue of a simple-pole term at a rational point.
struct RationalResidue {
  BigRat pole;
  BigRat residue;
};

/// Why an element has no antiderivative.
struct NonzeroResidueEvidence {
  RatFn remainder;                 // Hermite remainder (zero in ConstantsQ mode)
  QPoly rt_resultant{Var::T};
  std::vector<QPoly> pole_factors;  // irreducible factors of den(remainder) over Q when decidable
  std::vector<RationalResidue> rational_residues;
  std::string note;
};

struct AntiderivativeResult {
  bool exists = false;
  RatFn witness;                   // derive(witness) = w when exists
  NonzeroResidueEvidence evidence;  // meaningful when !exists
};

/// RationalQx: w is a function of its own variable with derivation d/dv;
/// exists iff the Hermite remainder vanishes. ConstantsQ: w must be a
/// constant (std::invalid_argument otherwise); exists iff w = 0.
AntiderivativeResult has_antiderivative(const RatFn& w, DerivationMode mode);

/// Residues of h at the rational roots of its (squarefree) denominator.
std::vector<RationalResidue> rational_residues(const RatFn& h);

}  // namespace odetype
