#include "odetype/curve.hpp"

#include <stdexcept>

#include "odetype/truncseries.hpp"

namespace odetype {

BiDiffPoly::BiDiffPoly(DerivationMode mode, std::map<Monomial, RatFn> terms) : mode_(mode) {
  for (auto& [m, c] : terms) {
    if (m.first < 0 || m.second < 0) throw std::invalid_argument("BiDiffPoly: negative exponent");
    if (c.is_zero()) continue;
    if (mode == DerivationMode::ConstantsQ && !c.is_constant())
      throw std::invalid_argument("BiDiffPoly: non-constant coefficient " + c.to_string() + " in const mode");
    terms_.emplace(m, c);
  }
  if (terms_.empty()) throw std::invalid_argument("BiDiffPoly: zero polynomial");
}

RatFn BiDiffPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? RatFn() : it->second;
}

int BiDiffPoly::degree_y() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BiDiffPoly::degree_z() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

BiDiffPoly BiDiffPoly::scaled(const RatFn& c) const {
  if (c.is_zero()) throw std::invalid_argument("BiDiffPoly: scaling by zero");
  std::map<Monomial, RatFn> t;
  for (const auto& [m, k] : terms_) t.emplace(m, k * c);
  return BiDiffPoly(mode_, std::move(t));
}

namespace {

BigRat binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRat(b);
}

int nonzero_terms(const QPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace

RatFn BiDiffPoly::evaluate(const RatFn& y, const RatFn& z) const {
  RatFn acc;
  for (const auto& [m, c] : terms_) acc += c * y.pow(m.first) * z.pow(m.second);
  return acc;
}

std::string BiDiffPoly::to_string() const {
  // descending total degree, then descending degree in y'
  std::vector<std::pair<Monomial, RatFn>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.second > b.first.second;
  });
  std::string s;
  for (const auto& [m, c] : ordered) {
    std::string mono;
    auto factor = [&](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    factor("y", m.first);
    factor("y'", m.second);
    bool neg = c.num().lc().sign() < 0;
    RatFn mag = neg ? -c : c;
    std::string coef;
    if (mag.is_constant()) {
      if (!mag.constant_value().is_one() || mono.empty()) coef = mag.constant_value().to_string();
    } else if (mag.is_polynomial() && nonzero_terms(mag.num()) == 1) {
      coef = mag.to_string();
    } else {
      coef = "(" + mag.to_string() + ")";
    }
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
  }
  return s;
}

TangentCheck simple_point_tangent_Z(const BiDiffPoly& f) {
  bool on = f.coeff(0, 0).is_zero();
  bool fz = !f.coeff(0, 1).is_zero();
  bool fy = !f.coeff(1, 0).is_zero();
  if (!on) return {TangentStatus::NotOnCurve, "f(0,0) = " + f.coeff(0, 0).to_string() + " is nonzero"};
  if (!fz && !fy) return {TangentStatus::Singular, "singular: both partials vanish at (0,0)"};
  if (!fz) return {TangentStatus::TangentNotZ, "df/dZ(0,0) = 0: the tangent is Y = 0"};
  if (fy) {
    RatFn a = f.coeff(1, 0), b = f.coeff(0, 1);
    return {TangentStatus::TangentNotZ,
            "tangent is (" + a.to_string() + ")*Y + (" + b.to_string() + ")*Z, not Z"};
  }
  return {TangentStatus::Ok, ""};
}

BiDiffPoly translate(const BiDiffPoly& f, const RatFn& y0, const RatFn& z0) {
  std::map<Monomial, RatFn> out;
  for (const auto& [m, c] : f.terms()) {
    auto [i, j] = m;
    for (int a = 0; a <= i; ++a) {
      RatFn ya = c * RatFn(binomial(i, a)) * y0.pow(i - a);
      if (ya.is_zero()) continue;
      for (int b = 0; b <= j; ++b) out[{a, b}] += ya * RatFn(binomial(j, b)) * z0.pow(j - b);
    }
  }
  std::map<Monomial, RatFn> nz;
  for (auto& [m, c] : out)
    if (!c.is_zero()) nz.emplace(m, c);
  if (f.mode() == DerivationMode::ConstantsQ && !(y0.is_constant() && z0.is_constant()))
    throw std::invalid_argument("translate: const-mode equation shifted by a non-constant");
  return BiDiffPoly(f.mode(), std::move(nz));
}

namespace {

// f(Y, Z(Y)) truncated at `order`, with the coefficients as constants.
TruncatedSeries<RatFn> substitute_branch(const BiDiffPoly& f, const TruncatedSeries<RatFn>& z, std::size_t order) {
  using S = TruncatedSeries<RatFn>;
  S y = S::identity(order);
  std::vector<S> ypow{S::constant(RatFn(1), order)}, zpow{S::constant(RatFn(1), order)};
  for (int i = 1; i <= f.degree_y(); ++i) ypow.push_back(ypow.back() * y);
  for (int j = 1; j <= f.degree_z(); ++j) zpow.push_back(zpow.back() * z);
  S acc(order);
  for (const auto& [m, c] : f.terms())
    acc = acc + c * (ypow[static_cast<std::size_t>(m.first)] * zpow[static_cast<std::size_t>(m.second)]);
  return acc;
}

}  // namespace

BranchExpansion branch_expand(const BiDiffPoly& f, int order) {
  if (order < 3) throw std::invalid_argument("branch_expand: order must be >= 3");
  TangentCheck tc = simple_point_tangent_Z(f);
  if (!tc.ok()) throw std::invalid_argument("branch_expand: precondition violated: " + tc.reason);
  RatFn fz = f.coeff(0, 1);
  auto n_total = static_cast<std::size_t>(order);
  TruncatedSeries<RatFn> z(n_total);
  BranchExpansion out;
  out.order = order;
  for (std::size_t n = 2; n <= n_total; ++n) {
    // Z enters the Y^n coefficient linearly through fz * lambda_n.
    RatFn c = substitute_branch(f, z.truncated(n), n)[n];
    z[n] = -(c / fz);
    out.lambdas.push_back(z[n]);
  }
  if (!substitute_branch(f, z, n_total).is_zero_series())
    throw std::logic_error("branch_expand: residual does not vanish");
  return out;
}

bool squarefree_in_z_verified(const BiDiffPoly& f) {
  int dz = f.degree_z();
  if (dz == 0) return false;
  if (dz == 1) return true;
  for (int xv = 2; xv < 9; ++xv) {
    for (int yv = 1; yv < 7; ++yv) {
      std::vector<BigRat> cs(static_cast<std::size_t>(dz) + 1, BigRat(0));
      bool ok = true;
      for (const auto& [m, c] : f.terms()) {
        if (c.den()(BigRat(xv)).is_zero()) {
          ok = false;
          break;
        }
        cs[static_cast<std::size_t>(m.second)] += c(BigRat(xv)) * BigRat(yv).pow(m.first);
      }
      if (!ok || cs.back().is_zero()) continue;
      QPoly p(Var::Z, cs);
      if (is_squarefree(p)) return true;
    }
  }
  return false;
}

}  // namespace odetype
