#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "odetype/ratcalc.hpp"
#include "odetype/ratfn.hpp"

namespace odetype {

/// Exponent pair (deg_Y, deg_Z) of a monomial Y^i Z^j.
using Monomial = std::pair<int, int>;

/// f(Y, Z) with coefficients in the scalar field: Q (ConstantsQ, stored as
/// constant RatFns) or Q(x) (RationalQx). Z stands for y'. Never zero.
class BiDiffPoly {
 public:
  BiDiffPoly(DerivationMode mode, std::map<Monomial, RatFn> terms);

  DerivationMode mode() const { return mode_; }
  const std::map<Monomial, RatFn>& terms() const { return terms_; }
  RatFn coeff(int i, int j) const;
  int degree_y() const;
  int degree_z() const;
  bool involves_z() const { return degree_z() >= 1; }

  BiDiffPoly scaled(const RatFn& c) const;
  /// Value at scalar points (Y, Z) = (y, z).
  RatFn evaluate(const RatFn& y, const RatFn& z) const;
  /// Parseable text in y, y' and x.
  std::string to_string() const;

  friend bool operator==(const BiDiffPoly& a, const BiDiffPoly& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

 private:
  DerivationMode mode_;
  std::map<Monomial, RatFn> terms_;
};

enum class TangentStatus { Ok, NotOnCurve, Singular, TangentNotZ };

struct TangentCheck {
  TangentStatus status = TangentStatus::Ok;
  std::string reason;
  bool ok() const { return status == TangentStatus::Ok; }
};

/// (0,0) lies on f, is simple (f_Z(0,0) != 0) and the tangent is Z = 0.
TangentCheck simple_point_tangent_Z(const BiDiffPoly& f);

/// g(Y, Z) = f(Y + y0, Z + z0).
BiDiffPoly translate(const BiDiffPoly& f, const RatFn& y0, const RatFn& z0);

/// Z = sum_{i=2}^{N} lambda_i Y^i on the branch through the origin.
struct BranchExpansion {
  std::vector<RatFn> lambdas;  // lambdas[0] is lambda_2
  int order = 0;
  const RatFn& lambda(int i) const { return lambdas.at(static_cast<std::size_t>(i - 2)); }
};

/// Order-by-order undetermined coefficients; requires
/// simple_point_tangent_Z(f).ok() and order >= 3. The residual
/// f(Y, sum lambda_i Y^i) = O(Y^{N+1}) is verified before returning.
BranchExpansion branch_expand(const BiDiffPoly& f, int order = 3);

/// Cheap necessary check toward irreducibility: some specialisation
/// (x, Y) -> rationals leaves f squarefree in Z with full Z-degree, which
/// proves f has no repeated factor involving Z.
bool squarefree_in_z_verified(const BiDiffPoly& f);

}  // namespace odetype
