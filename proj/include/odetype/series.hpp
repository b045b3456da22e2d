#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "odetype/curve.hpp"
#include "odetype/truncseries.hpp"

namespace odetype {

/// Power series in x at 0 over Q.
using TruncSeries = TruncatedSeries<BigRat>;

/// Series of a rational function of x at 0; throws std::domain_error on a pole at 0.
TruncSeries series_of(const RatFn& r, std::size_t order);

/// u with u(0) = y0, u' = h(u) mod x^N. h is a rational function of y.
TruncSeries solve_series_autonomous(const RatFn& h, const BigRat& y0, std::size_t order);

/// u with u(0) = y0, u'(0) = z0 and f(u, u') = 0 mod x^N.
/// Throws std::invalid_argument when the seed is off the curve or f_Z vanishes
/// there, std::domain_error when a coefficient of f has a pole at x = 0.
TruncSeries solve_series_curve(const BiDiffPoly& f, const BigRat& y0, const BigRat& z0, std::size_t order);

/// One term p(x) * u_1^e_1 ... u_k^e_k of a relation.
struct RelationTerm {
  std::vector<int> exponents;
  QPoly coeff;
};

/// Nonzero polynomial relation among series; the first nonzero coefficient
/// (in graded monomial order, then by power of x) is 1.
struct RelationCandidate {
  std::vector<RelationTerm> terms;

  TruncSeries evaluate(const std::vector<TruncSeries>& series) const;
  /// Text in u1, u2, ... and x.
  std::string to_string() const;
};

struct DependenceResult {
  std::optional<RelationCandidate> relation;  // empty means NoneAtBounds
  int degree = 0;
  int xdegree = 0;
  std::size_t order = 0;
  std::size_t unknowns = 0;
  std::size_t nullity = 0;              // nullspace dimension at truncation N
  bool candidate_rejected = false;      // a truncation-N candidate failed at 2N

  bool found() const { return relation.has_value(); }
};

/// Produces the series truncated at the requested order.
using SeriesSource = std::function<TruncSeries(std::size_t)>;

/// Monomials of total degree <= d in k series, graded then lexicographic
/// with u1 leading.
std::vector<std::vector<int>> graded_monomials(std::size_t k, int d);

/// Bounded search for a relation of total degree <= d with coefficients in
/// Q[x]_{<= dx}, matched mod x^N and re-verified mod x^{2N}. Requires N to
/// exceed the number of unknowns by at least 10.
DependenceResult find_algebraic_relation(const std::vector<SeriesSource>& sources, int d, int dx, std::size_t order);
/// Same with precomputed series; each needs truncation >= 2N.
DependenceResult find_algebraic_relation(const std::vector<TruncSeries>& series, int d, int dx, std::size_t order);

}  // namespace odetype
