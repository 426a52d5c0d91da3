#include "pert/secular.hpp"

#include <algorithm>
#include <cmath>

#include "pert/error.hpp"
#include "pert/series.hpp"

namespace pert {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly poly_scale(const mpq_class& c, const Poly& a) {
  Poly r = a;
  for (auto& v : r) v *= c;
  trim(r);
  return r;
}

Poly poly_derivative(const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

double poly_eval(const Poly& a, double x) {
  double acc = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i].get_d();
  return acc;
}

mpq_class at(const Poly& p, int i) {
  return i >= 0 && i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : mpq_class(0);
}

// Solves the square system m * x = rhs by Bareiss elimination.
std::vector<mpq_class> solve_fraction_free(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> rhs) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  mpq_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(m[piv][k]) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::InvalidArgument, "singular undetermined-coefficient system");
    std::swap(m[k], m[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = n; i-- > 0;) {
    mpq_class acc = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return x;
}

// Particular solution of u'' + u = f with no x^0 terms, from the ansatz
// sum_{j=1..D} (a_j x^j cos x + b_j x^j sin x), D = deg f + 1. On that span
// L[x^j cos] = j(j-1) x^{j-2} cos - 2j x^{j-1} sin and
// L[x^j sin] = j(j-1) x^{j-2} sin + 2j x^{j-1} cos, which is triangular.
TrigPoly particular_solution(const TrigPoly& f) {
  const int d = f.degree() + 1;
  if (d <= 0) return {};
  const auto n = static_cast<std::size_t>(2 * d);
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, mpq_class(0)));
  std::vector<mpq_class> rhs(n);
  const auto cos_row = [](int i) { return static_cast<std::size_t>(i); };
  const auto sin_row = [d](int i) { return static_cast<std::size_t>(d + i); };
  for (int i = 0; i < d; ++i) {
    rhs[cos_row(i)] = at(f.cos_part, i);
    rhs[sin_row(i)] = at(f.sin_part, i);
  }
  for (int j = 1; j <= d; ++j) {
    const auto a_col = static_cast<std::size_t>(j - 1);
    const auto b_col = static_cast<std::size_t>(d + j - 1);
    if (j >= 2) {
      m[cos_row(j - 2)][a_col] += j * (j - 1);
      m[sin_row(j - 2)][b_col] += j * (j - 1);
    }
    m[sin_row(j - 1)][a_col] += -2 * j;
    m[cos_row(j - 1)][b_col] += 2 * j;
  }
  const auto sol = solve_fraction_free(std::move(m), std::move(rhs));
  TrigPoly u;
  u.cos_part.assign(static_cast<std::size_t>(d) + 1, mpq_class(0));
  u.sin_part.assign(static_cast<std::size_t>(d) + 1, mpq_class(0));
  for (int j = 1; j <= d; ++j) {
    u.cos_part[static_cast<std::size_t>(j)] = sol[static_cast<std::size_t>(j - 1)];
    u.sin_part[static_cast<std::size_t>(j)] = sol[static_cast<std::size_t>(d + j - 1)];
  }
  trim(u.cos_part);
  trim(u.sin_part);
  return u;
}

}  // namespace

TrigPoly TrigPoly::cos_x() { return {{mpq_class(1)}, {}}; }
TrigPoly TrigPoly::sin_x() { return {{}, {mpq_class(1)}}; }

int TrigPoly::degree() const {
  return std::max(static_cast<int>(cos_part.size()), static_cast<int>(sin_part.size())) - 1;
}

double TrigPoly::operator()(double x) const {
  return poly_eval(cos_part, x) * std::cos(x) + poly_eval(sin_part, x) * std::sin(x);
}

double TrigPoly::amplitude(double x) const { return std::hypot(poly_eval(cos_part, x), poly_eval(sin_part, x)); }

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  return {poly_add(a.cos_part, b.cos_part), poly_add(a.sin_part, b.sin_part)};
}

TrigPoly operator-(const TrigPoly& a) { return mpq_class(-1) * a; }

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (-b); }

TrigPoly operator*(const mpq_class& c, const TrigPoly& a) {
  return {poly_scale(c, a.cos_part), poly_scale(c, a.sin_part)};
}

TrigPoly times_x(const TrigPoly& a) {
  TrigPoly r = a;
  if (!r.cos_part.empty()) r.cos_part.insert(r.cos_part.begin(), mpq_class(0));
  if (!r.sin_part.empty()) r.sin_part.insert(r.sin_part.begin(), mpq_class(0));
  return r;
}

// (P cos + Q sin)' = (P' + Q) cos + (Q' - P) sin
TrigPoly derivative(const TrigPoly& a) {
  return {poly_add(poly_derivative(a.cos_part), a.sin_part),
          poly_add(poly_derivative(a.sin_part), poly_scale(mpq_class(-1), a.cos_part))};
}

mpq_class value_at_zero(const TrigPoly& a) { return at(a.cos_part, 0); }

nlohmann::json to_json(const TrigPoly& a, int order) {
  const auto strings = [](const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p) arr.push_back(Coefficient(c).to_string());
    return arr;
  };
  return {{"order", order}, {"cos_poly", strings(a.cos_part)}, {"sin_poly", strings(a.sin_part)}};
}

EpsExpansion derive_expansion(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative expansion order");
  EpsExpansion e;
  e.slices.push_back(TrigPoly::cos_x());
  for (int n = 1; n <= order; ++n) {
    TrigPoly y = particular_solution(times_x(e.slices.back()));
    // The particular part has no constant terms, so y(0) = 0 already and
    // y'(0) = a_1; cancel it with a multiple of sin x.
    const mpq_class slope = value_at_zero(derivative(y));
    y = y - slope * TrigPoly::sin_x();
    e.slices.push_back(std::move(y));
  }
  return e;
}

std::vector<TrigPoly> residual_expansion(const EpsExpansion& e, int max_order) {
  if (max_order < e.order() + 1)
    throw Error(ErrorKind::InvalidArgument, "residual order must exceed the expansion order");
  std::vector<TrigPoly> out;
  const auto slice = [&e](int n) { return n >= 0 && n <= e.order() ? e.slices[static_cast<std::size_t>(n)] : TrigPoly{}; };
  for (int m = 0; m <= max_order; ++m) {
    const TrigPoly y = slice(m);
    out.push_back(derivative(derivative(y)) + y - times_x(slice(m - 1)));
  }
  return out;
}

double evaluate_expansion(const EpsExpansion& e, double eps, double x) {
  double acc = 0.0;
  for (int n = e.order(); n >= 0; --n) acc = acc * eps + e.slices[static_cast<std::size_t>(n)](x);
  return acc;
}

double expansion_residual(const EpsExpansion& e, double eps, double x) {
  // Only slice N+1 = -x y_N survives; slices 0..N vanish identically.
  const auto slices = residual_expansion(e, e.order() + 1);
  double acc = 0.0;
  for (int m = static_cast<int>(slices.size()) - 1; m >= 0; --m) acc = acc * eps + slices[static_cast<std::size_t>(m)](x);
  return acc;
}

ValidityRegion validity_region(const EpsExpansion& e, double eps, double threshold) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (!(threshold > 0.0 && threshold < 1.0)) throw Error(ErrorKind::InvalidArgument, "threshold must lie in (0, 1)");
  const int n = e.order();
  const TrigPoly lead = residual_expansion(e, n + 1).back();
  const double scale = std::pow(eps, n + 1);
  const double x_end = std::max(100.0, 10.0 / eps);

  ValidityRegion r;
  r.marker = 1.0 / std::sqrt(eps);
  r.scan_exhausted = true;
  for (long i = 1;; ++i) {
    const double x = kScanStep * static_cast<double>(i);
    if (x > x_end) break;
    if (std::abs(lead(x)) * scale > threshold * eps * x) {
      r.scan_exhausted = false;
      break;
    }
    r.x_max = x;
  }
  r.perturbation_not_small = eps * r.x_max > 1.0;
  return r;
}

double improved_solution(double eps, double x) {
  return std::exp(eps * x / 4.0) * std::cos(x - eps * x * x / 4.0);
}

double improved_residual(double eps, double x0) {
  using C = std::complex<double>;
  constexpr int order = 2;
  const std::string h = "h";
  const auto exp_s = standard_series("exp", order, h).to_complex();
  const auto cos_s = standard_series("cos", order, h).to_complex();
  const auto sin_s = standard_series("sin", order, h).to_complex();

  // Amplitude exponent eps (x0 + h) / 4 and phase (x0 + h) - eps (x0 + h)^2 / 4.
  const double a0 = eps * x0 / 4.0;
  const auto da = TruncatedSeries::complex({C(0.0), C(eps / 4.0), C(0.0)}, h);
  const double b0 = x0 - eps * x0 * x0 / 4.0;
  const auto db = TruncatedSeries::complex({C(0.0), C(1.0 - eps * x0 / 2.0), C(-eps / 4.0)}, h);

  const auto amplitude = scale(compose(exp_s, da), C(std::exp(a0)));
  const auto phase = sub(scale(compose(cos_s, db), C(std::cos(b0))), scale(compose(sin_s, db), C(std::sin(b0))));
  const auto z = mul(amplitude, phase);

  const double value = z[0].as_complex().real();
  const double second = 2.0 * z[2].as_complex().real();
  return second + (1.0 - eps * x0) * value;
}

double max_improved_residual(double eps, double x_end) {
  double best = 0.0;
  for (long i = 0;; ++i) {
    const double x = kScanStep * static_cast<double>(i);
    if (x > x_end + 1e-12) break;
    best = std::max(best, std::abs(improved_residual(eps, x)));
  }
  return best;
}

double max_expansion_residual(const EpsExpansion& e, double eps, double x_end) {
  const auto slices = residual_expansion(e, e.order() + 1);
  double best = 0.0;
  for (long i = 0;; ++i) {
    const double x = kScanStep * static_cast<double>(i);
    if (x > x_end + 1e-12) break;
    double acc = 0.0;
    for (int m = static_cast<int>(slices.size()) - 1; m >= 0; --m) acc = acc * eps + slices[static_cast<std::size_t>(m)](x);
    best = std::max(best, std::abs(acc));
  }
  return best;
}

}  // namespace pert
