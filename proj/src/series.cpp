#include "odetype/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace odetype {

TruncSeries series_of(const RatFn& r, std::size_t order) {
  const QPoly& den = r.den();
  if (den.coeff(0).is_zero()) throw std::domain_error("coefficient " + r.to_string() + " has a pole at x = 0");
  TruncSeries n(order), d(order);
  for (int i = 0; i <= r.num().degree() && static_cast<std::size_t>(i) <= order; ++i)
    n[static_cast<std::size_t>(i)] = r.num().coeff(i);
  for (int i = 0; i <= den.degree() && static_cast<std::size_t>(i) <= order; ++i)
    d[static_cast<std::size_t>(i)] = den.coeff(i);
  return den.is_constant() ? (BigRat(1) / den.coeff(0)) * n : n * d.inverse();
}

namespace {

// n-th coefficient of a * b from coefficients 0..n of each.
BigRat cauchy(const std::vector<BigRat>& a, const std::vector<BigRat>& b, std::size_t n) {
  BigRat acc;
  for (std::size_t k = 0; k <= n; ++k) {
    if (a[k].is_zero()) continue;
    acc += a[k] * b[n - k];
  }
  return acc;
}

struct CurveTerm {
  int i, j;
  TruncSeries c;
};

}  // namespace

TruncSeries solve_series_curve(const BiDiffPoly& f, const BigRat& y0, const BigRat& z0, std::size_t order) {
  if (!f.involves_z()) throw std::invalid_argument("solve_series_curve: f does not involve y'");
  const std::size_t N = order;
  std::vector<CurveTerm> terms;
  for (const auto& [m, c] : f.terms()) terms.push_back({m.first, m.second, series_of(c, N)});

  BigRat f0, fz;
  for (const auto& t : terms) {
    BigRat c0 = t.c[0] * y0.pow(t.i);
    f0 += c0 * z0.pow(t.j);
    if (t.j > 0) fz += c0 * BigRat(t.j) * z0.pow(t.j - 1);
  }
  if (!f0.is_zero()) throw std::invalid_argument("seed (" + y0.to_string() + ", " + z0.to_string() + ") is not on the curve at x = 0");
  if (fz.is_zero()) throw std::invalid_argument("seed (" + y0.to_string() + ", " + z0.to_string() + ") is unsolvable: f_Z vanishes");
  if (N == 0) return TruncSeries::constant(y0, 0);

  // Coefficient n of every product is built once all inputs up to n are known.
  // At step n the unknown u'_n enters F_n affinely, through P_i[0] * Q_j[n] only.
  const int di = f.degree_y(), dj = f.degree_z();
  std::vector<BigRat> u(N + 1), up(N);
  std::vector<std::vector<BigRat>> P(static_cast<std::size_t>(di) + 1, std::vector<BigRat>(N)),
      Q(static_cast<std::size_t>(dj) + 1, std::vector<BigRat>(N));
  std::vector<std::vector<BigRat>> R(terms.size(), std::vector<BigRat>(N));
  P[0][0] = 1;
  Q[0][0] = 1;
  u[0] = y0;
  up[0] = z0;
  u[1] = z0;

  auto fill_q = [&](std::size_t n) {
    for (std::size_t j = 1; j < Q.size(); ++j) Q[j][n] = cauchy(up, Q[j - 1], n);
    for (std::size_t t = 0; t < terms.size(); ++t)
      R[t][n] = cauchy(P[static_cast<std::size_t>(terms[t].i)], Q[static_cast<std::size_t>(terms[t].j)], n);
  };
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t i = 1; i < P.size(); ++i) P[i][n] = cauchy(u, P[i - 1], n);
    fill_q(n);
    if (n == 0) continue;
    BigRat F;
    for (std::size_t t = 0; t < terms.size(); ++t)
      for (std::size_t k = 0; k <= n; ++k)
        if (!terms[t].c[k].is_zero()) F += terms[t].c[k] * R[t][n - k];
    up[n] = -F / fz;
    u[n + 1] = up[n] / BigRat(static_cast<long>(n + 1));
    fill_q(n);
  }

  TruncSeries s(std::move(u));
  TruncSeries ds = s.derivative();
  TruncSeries residual(N - 1);
  for (const auto& t : terms) {
    TruncSeries m = t.c.truncated(N - 1);
    for (int a = 0; a < t.i; ++a) m = m * s;
    for (int b = 0; b < t.j; ++b) m = m * ds;
    residual = residual + m;
  }
  if (!residual.is_zero_series()) throw std::logic_error("solve_series_curve: residual check failed");
  return s;
}

TruncSeries solve_series_autonomous(const RatFn& h, const BigRat& y0, std::size_t order) {
  if (!h.is_constant() && h.var() != Var::Y) throw std::invalid_argument("solve_series_autonomous: h must be a function of y");
  if (h.den()(y0).is_zero()) throw std::invalid_argument("h has a pole at y0 = " + y0.to_string());
  // u' = num(u)/den(u)  <=>  den(Y) Z - num(Y) = 0
  std::map<Monomial, RatFn> t;
  for (int i = 0; i <= h.den().degree(); ++i) t[{i, 1}] = RatFn(h.den().coeff(i));
  for (int i = 0; i <= h.num().degree(); ++i) t[{i, 0}] = RatFn(-h.num().coeff(i));
  return solve_series_curve(BiDiffPoly(DerivationMode::ConstantsQ, std::move(t)), y0, h(y0), order);
}

namespace {

TruncSeries times_poly(const QPoly& p, const TruncSeries& s) {
  TruncSeries r(s.order());
  for (int j = 0; j <= p.degree(); ++j) {
    if (p.coeff(j).is_zero()) continue;
    for (std::size_t k = static_cast<std::size_t>(j); k <= s.order(); ++k) r[k] += p.coeff(j) * s[k - static_cast<std::size_t>(j)];
  }
  return r;
}

std::vector<TruncSeries> monomial_series(const std::vector<std::vector<int>>& monos, const std::vector<TruncSeries>& s,
                                         std::size_t order) {
  std::map<std::vector<int>, TruncSeries> memo;
  std::vector<TruncSeries> out;
  for (const auto& e : monos) {
    auto first = std::find_if(e.begin(), e.end(), [](int v) { return v > 0; });
    TruncSeries m = TruncSeries::constant(BigRat(1), order);
    if (first != e.end()) {
      std::vector<int> prev = e;
      std::size_t i = static_cast<std::size_t>(first - e.begin());
      --prev[i];
      m = memo.at(prev) * s[i].truncated(order);
    }
    memo.emplace(e, m);
    out.push_back(std::move(m));
  }
  return out;
}

std::string monomial_string(const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "u" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

void graded(std::size_t k, int total, std::vector<int>& cur, std::size_t pos, std::vector<std::vector<int>>& out) {
  if (pos + 1 == k) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int a = total; a >= 0; --a) {
    cur[pos] = a;
    graded(k, total - a, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<std::vector<int>> graded_monomials(std::size_t k, int d) {
  if (k == 0) throw std::invalid_argument("graded_monomials: no series");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  for (int t = 0; t <= d; ++t) graded(k, t, cur, 0, out);
  return out;
}

TruncSeries RelationCandidate::evaluate(const std::vector<TruncSeries>& series) const {
  std::size_t order = series.at(0).order();
  for (const auto& s : series) order = std::min(order, s.order());
  std::vector<std::vector<int>> monos;
  for (const auto& t : terms) monos.push_back(t.exponents);
  TruncSeries acc(order);
  for (const auto& t : terms) {
    TruncSeries m = TruncSeries::constant(BigRat(1), order);
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      for (int a = 0; a < t.exponents[i]; ++a) m = m * series.at(i).truncated(order);
    acc = acc + times_poly(t.coeff, m);
  }
  return acc;
}

std::string RelationCandidate::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    std::string cs = odetype::to_string(t.coeff.with_var(Var::X)), ms = monomial_string(t.exponents), term;
    int nz = 0;
    for (const auto& c : t.coeff.coeffs()) nz += c.is_zero() ? 0 : 1;
    if (ms.empty())
      term = cs;
    else if (cs == "1")
      term = ms;
    else if (cs == "-1")
      term = "-" + ms;
    else if (nz == 1)
      term = cs + "*" + ms;
    else
      term = "(" + cs + ")*" + ms;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

// Row of rationals scaled to a primitive integer row.
std::vector<BigInt> integer_row(const std::vector<BigRat>& row) {
  BigInt l = 1;
  for (const auto& q : row) l = lcm(l, q.denominator());
  std::vector<BigInt> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.numerator() * (l / q.denominator()));
  return out;
}

void make_primitive(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& a : row) {
    if (a != 0) g = gcd(g, a);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& a : row) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

DependenceResult find_algebraic_relation(const std::vector<SeriesSource>& sources, int d, int dx, std::size_t order) {
  if (sources.empty()) throw std::invalid_argument("find_algebraic_relation: no series");
  if (d < 1 || dx < 0) throw std::invalid_argument("find_algebraic_relation: need degree >= 1 and xdegree >= 0");
  const auto monos = graded_monomials(sources.size(), d);
  const std::size_t cols = monos.size() * static_cast<std::size_t>(dx + 1);
  if (order < cols + 10)
    throw std::invalid_argument("truncation " + std::to_string(order) + " too small for " + std::to_string(cols) +
                                " unknowns (needs >= " + std::to_string(cols + 10) + ")");

  DependenceResult res;
  res.degree = d;
  res.xdegree = dx;
  res.order = order;
  res.unknowns = cols;

  std::vector<TruncSeries> series;
  for (const auto& src : sources) {
    TruncSeries s = src(order);
    if (s.order() < order) throw std::invalid_argument("find_algebraic_relation: series shorter than the truncation");
    series.push_back(s.truncated(order));
  }
  const auto ms = monomial_series(monos, series, order);

  // Column m*(dx+1)+j holds x^j * monomial m; row k matches the x^k coefficient.
  std::vector<std::vector<BigInt>> a;
  for (std::size_t k = 0; k < order; ++k) {
    std::vector<BigRat> row(cols);
    for (std::size_t m = 0; m < ms.size(); ++m)
      for (std::size_t j = 0; j <= static_cast<std::size_t>(dx) && j <= k; ++j) row[m * static_cast<std::size_t>(dx + 1) + j] = ms[m][k - j];
    a.push_back(integer_row(row));
  }

  // Fraction-free elimination to echelon form.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::optional<std::size_t> free_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) {
      if (!free_col) free_col = c;
      continue;
    }
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      BigInt s = a[r][c], t = a[i][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[i][cc] = s * a[i][cc] - t * a[r][cc];
      make_primitive(a[i]);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  res.nullity = cols - pivots.size();
  if (!free_col) return res;

  // First free column set to 1, other free columns 0; pivots after it vanish.
  std::vector<BigRat> x(cols);
  x[*free_col] = 1;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [row, c] = *it;
    if (c > *free_col) continue;
    BigRat acc;
    for (std::size_t cc = c + 1; cc < cols; ++cc)
      if (!x[cc].is_zero() && a[row][cc] != 0) acc += BigRat(a[row][cc]) * x[cc];
    x[c] = -acc / BigRat(a[row][c]);
  }
  BigRat lead;
  for (const auto& v : x)
    if (!v.is_zero()) {
      lead = v;
      break;
    }

  RelationCandidate cand;
  for (std::size_t m = 0; m < monos.size(); ++m) {
    std::vector<BigRat> pc(static_cast<std::size_t>(dx + 1));
    for (std::size_t j = 0; j < pc.size(); ++j) pc[j] = x[m * pc.size() + j] / lead;
    QPoly p(Var::X, pc);
    if (!p.is_zero()) cand.terms.push_back({monos[m], p});
  }

  std::vector<TruncSeries> longer;
  for (const auto& src : sources) longer.push_back(src(2 * order));
  TruncSeries check = cand.evaluate(longer);
  bool ok = check.order() + 1 >= 2 * order;
  for (std::size_t k = 0; ok && k < 2 * order; ++k) ok = check[k].is_zero();
  if (ok)
    res.relation = std::move(cand);
  else
    res.candidate_rejected = true;
  return res;
}

DependenceResult find_algebraic_relation(const std::vector<TruncSeries>& series, int d, int dx, std::size_t order) {
  std::vector<SeriesSource> sources;
  for (const auto& s : series) {
    if (s.order() < 2 * order)
      throw std::invalid_argument("find_algebraic_relation: precomputed series need truncation >= 2N");
    sources.push_back([s](std::size_t n) { return s.truncated(n); });
  }
  return find_algebraic_relation(sources, d, dx, order);
}

}  // namespace odetype
