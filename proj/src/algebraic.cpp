#include "pert/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pert/roots.hpp"

namespace pert {

namespace {

Coefficient in_mode(const Coefficient& c, CoefficientMode mode) {
  if (c.mode() == mode) return c;
  return Coefficient(c.to_complex());
}

TruncatedSeries in_mode(const TruncatedSeries& s, CoefficientMode mode) {
  return s.mode() == mode ? s : s.to_complex();
}

// dPhi/dx at (a0, 0) in the mode of a0.
Coefficient pivot_at(const PerturbedPolynomial& p, const Coefficient& a0) {
  const auto mode = a0.mode();
  Coefficient acc = Coefficient::zero(mode);
  for (int k = p.x_degree(); k >= 1; --k) {
    const Coefficient ck = in_mode(p.coefficient(k)[0], mode);
    const Coefficient weight = mode == CoefficientMode::Rational ? Coefficient(mpq_class(k))
                                                                 : Coefficient(std::complex<double>(k));
    acc = acc * a0 + ck * weight;
  }
  return acc;
}

bool is_real_series(const TruncatedSeries& z) {
  if (z.mode() == CoefficientMode::Rational) return true;
  return std::all_of(z.coefficients().begin(), z.coefficients().end(),
                     [](const Coefficient& c) { return c.as_complex().imag() == 0.0; });
}

double residual_magnitude(const PerturbedPolynomial& p, const TruncatedSeries& z, double eps) {
  if (z.mode() == CoefficientMode::Rational) {
    const mpq_class e = exact_rational(eps);
    const mpq_class r = evaluate_at(p, evaluate(z, e), e);
    return std::abs(r.get_d());
  }
  return std::abs(evaluate_at(p, evaluate(z, eps), eps));
}

void check_grid(std::span<const double> grid) {
  if (grid.size() < 3) throw Error(ErrorKind::InvalidArgument, "order estimation needs at least 3 grid points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid values must be positive");
    if (i > 0 && !(grid[i] < grid[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "grid must be strictly decreasing");
  }
}

}  // namespace

std::complex<double> evaluate_branch(const PerturbationSolution& s, double eps) {
  const double d = s.ramification == 1 ? eps : std::pow(eps, 1.0 / s.ramification);
  return std::pow(d, s.laurent_offset) * evaluate(s.series, d);
}

std::vector<Coefficient> zeroth_roots(const PerturbedPolynomial& p) {
  const auto c0 = p.at_zero();
  int degree = static_cast<int>(c0.size()) - 1;
  while (degree >= 0 && sgn(c0[static_cast<std::size_t>(degree)]) == 0) --degree;
  if (degree < 1) throw Error(ErrorKind::DegenerateAtZero, "Phi(x, 0) is constant");

  std::vector<std::complex<double>> coeffs;
  for (int k = 0; k <= degree; ++k) coeffs.emplace_back(c0[static_cast<std::size_t>(k)].get_d(), 0.0);
  auto roots = polynomial_roots(coeffs);

  // Rational roots have denominators dividing the leading coefficient of
  // the integer-scaled polynomial.
  mpz_class den_lcm = 1;
  for (int k = 0; k <= degree; ++k) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c0[static_cast<std::size_t>(k)].get_den_mpz_t());
  const mpz_class lead = abs(mpq_class(c0[static_cast<std::size_t>(degree)] * den_lcm).get_num());
  const double lead_d = lead.get_d();

  struct Entry {
    std::complex<double> value;
    Coefficient coeff;
  };
  std::vector<Entry> entries;
  for (const auto& r : roots) {
    const double scale = std::max(1.0, std::abs(r));
    if (std::abs(r.imag()) <= 1e-6 * scale && std::abs(r.real()) * lead_d < 0x1p52) {
      const mpq_class candidate(mpz_class(std::nearbyint(r.real() * lead_d)), lead);
      mpq_class q = candidate;
      q.canonicalize();
      mpq_class value = 0;
      for (int k = degree; k >= 0; --k) value = value * q + c0[static_cast<std::size_t>(k)];
      if (sgn(value) == 0 && std::abs(q.get_d() - r.real()) <= 1e-6 * scale) {
        entries.push_back({{q.get_d(), 0.0}, Coefficient(q)});
        continue;
      }
    }
    std::complex<double> z = r;
    if (std::abs(z.imag()) <= 1e-14 * scale) z.imag(0.0);
    entries.push_back({z, Coefficient(z)});
  }

  std::vector<std::complex<double>> values;
  for (const auto& e : entries) values.push_back(e.value);
  sort_roots(values);
  std::vector<Coefficient> out;
  std::vector<bool> used(entries.size(), false);
  for (const auto& v : values) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!used[i] && entries[i].value == v) {
        used[i] = true;
        out.push_back(entries[i].coeff);
        break;
      }
    }
  }
  return out;
}

TruncatedSeries residual_series(const PerturbedPolynomial& p, const TruncatedSeries& z, int order) {
  if (order < z.order()) throw Error(ErrorKind::InvalidArgument, "residual order must be at least the series order");
  const auto mode = z.mode();
  const auto zm = z.with_order(order);
  auto acc = in_mode(p.coefficient(p.x_degree(), order), mode).with_var(z.var());
  for (int k = p.x_degree() - 1; k >= 0; --k)
    acc = add(mul(acc, zm), in_mode(p.coefficient(k, order), mode).with_var(z.var()));
  return acc;
}

PerturbationSolution expand_root(const PerturbedPolynomial& p, const Coefficient& a0, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  const auto mode = a0.mode();

  // a0 must solve Phi(x, 0) = 0.
  {
    const auto base = residual_series(p, TruncatedSeries::constant(a0, 0, p.eps_var()), 0)[0];
    double scale = 0.0;
    for (const auto& [k, s] : p.coefficients()) scale += s[0].magnitude() * std::pow(a0.magnitude(), k);
    const bool ok = mode == CoefficientMode::Rational ? base.is_zero() : base.magnitude() <= 1e-8 * std::max(1.0, scale);
    if (!ok) throw Error(ErrorKind::InvalidArgument, "base root " + a0.to_string() + " does not solve Phi(x, 0) = 0");
  }

  const Coefficient pivot = pivot_at(p, a0);
  const bool singular = mode == CoefficientMode::Rational ? pivot.is_zero() : pivot.magnitude() <= kSimpleRootTolerance;
  if (singular)
    throw Error(ErrorKind::MultipleRoot,
                "dPhi/dx vanishes at base root " + a0.to_string() + "; the branch needs rescaling");

  std::vector<Coefficient> coeffs(static_cast<std::size_t>(order) + 1, Coefficient::zero(mode));
  coeffs[0] = a0;
  for (int n = 1; n <= order; ++n) {
    // With a_n still zero, coefficient n of the residual is r_n; a_n enters
    // linearly with factor dPhi/dx(a0, 0).
    const TruncatedSeries z(coeffs, p.eps_var());
    const Coefficient rn = residual_series(p, z.with_order(n), n)[n];
    coeffs[static_cast<std::size_t>(n)] = -(rn / pivot);
  }

  PerturbationSolution sol;
  sol.problem = p;
  sol.base_root = a0;
  sol.series = TruncatedSeries(coeffs, p.eps_var());

  // Phi(z(eps), eps) is a polynomial in eps of degree <= deg_x * N + eps_order.
  const int full = std::max(order + 1, p.x_degree() * order + p.eps_order());
  const auto delta = residual_series(p, sol.series, full);
  const int lead = leading_index(delta);
  sol.exact = lead < 0;
  sol.residual_leading_order = lead < 0 ? full + 1 : lead;
  return sol;
}

double estimate_order(const PerturbedPolynomial& p, const TruncatedSeries& z, std::span<const double> grid) {
  check_grid(grid);
  std::vector<double> residuals;
  residuals.reserve(grid.size());
  for (const double eps : grid) {
    const double r = residual_magnitude(p, z, eps);
    if (r == 0.0) throw Error(ErrorKind::ZeroResidualOnGrid, "residual vanishes on the grid; z solves Phi exactly there");
    residuals.push_back(r);
  }
  return loglog_slope(grid, residuals);
}

ConditionBound condition_bound(const PerturbedPolynomial& p, const TruncatedSeries& z, double eps) {
  const auto zval = evaluate(z, eps);
  const double deriv = std::abs(evaluate_dx(p, zval, eps));
  if (deriv <= kSimpleRootTolerance)
    throw Error(ErrorKind::IllConditioned, "dPhi/dx vanishes at the approximate root");
  ConditionBound cb;
  cb.kappa = 1.0 / deriv;
  cb.bound = cb.kappa * residual_magnitude(p, z, eps);
  return cb;
}

double oracle_root(const PerturbedPolynomial& p, double eps, double guess) {
  const auto f = [&](double x) { return evaluate_at(p, x, eps); };
  const double fg = f(guess);
  if (fg == 0.0) return guess;

  double lo = 0.0, hi = 0.0, flo = 0.0;
  bool found = false;
  double h = 1e-3 * std::max(1.0, std::abs(guess));
  for (int i = 0; i < 60 && !found; ++i, h *= 2.0) {
    const double right = f(guess + h);
    if ((fg < 0.0) != (right < 0.0) || right == 0.0) {
      lo = guess, hi = guess + h, flo = fg;
      found = true;
      break;
    }
    const double left = f(guess - h);
    if ((fg < 0.0) != (left < 0.0) || left == 0.0) {
      lo = guess - h, hi = guess, flo = left;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoBracketFound, "no sign change found near the guess");

  for (int i = 0; i < 2000; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid, flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double d = evaluate_dx(p, x, eps).real();
    if (d == 0.0) break;
    const double next = x - f(x) / d;
    if (!(std::abs(f(next)) < std::abs(f(x)))) break;
    x = next;
  }
  return x;
}

ResidualReport residual_report(const PerturbedPolynomial& p, const TruncatedSeries& z, std::span<const double> grid) {
  ResidualReport report;
  const int n = z.order();
  const int full = std::max(n + 1, p.x_degree() * n + p.eps_order());
  const auto delta = residual_series(p, z, full);
  const int lead = leading_index(delta);
  report.residual = delta.with_order(std::max(n + 1, std::min(lead, full)));

  const bool real = is_real_series(z);
  for (const double eps : grid) {
    ResidualSample s;
    s.eps = eps;
    s.residual = residual_magnitude(p, z, eps);
    try {
      const auto cb = condition_bound(p, z, eps);
      s.kappa = cb.kappa;
      s.bound = cb.bound;
    } catch (const Error&) {
    }
    if (real) {
      try {
        const double approx = evaluate(z, eps).real();
        s.oracle_root = oracle_root(p, eps, approx);
        s.oracle_error = std::abs(approx - *s.oracle_root);
      } catch (const Error&) {
      }
    }
    report.samples.push_back(s);
  }
  try {
    report.order_slope = estimate_order(p, z, grid);
  } catch (const Error&) {
  }
  return report;
}

std::vector<double> geometric_grid(double start, double ratio, int count) {
  if (!(start > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid start must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw Error(ErrorKind::InvalidArgument, "grid ratio must lie in (0, 1)");
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "grid needs at least one point");
  std::vector<double> g;
  double e = start;
  for (int i = 0; i < count; ++i, e *= ratio) g.push_back(e);
  return g;
}

std::vector<double> default_grid() { return geometric_grid(0x1p-4, 0.5, 7); }

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace pert
