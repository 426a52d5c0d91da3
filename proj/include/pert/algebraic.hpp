#pragma once

// Regular perturbation of polynomial equations Phi(x, eps) = 0.
//
// A branch is built in three steps: solve Phi(x, 0) = 0 for a simple root
// a0, fix a1..aN one at a time so that the residual Phi(z(eps), eps) vanishes
// through eps^N, then check the result a posteriori (residual order, condition
// number, independent numeric root).

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pert/problem.hpp"
#include "pert/series.hpp"

namespace pert {

struct ScalingTransform;

/// Pivot magnitude below which a float-mode base root counts as multiple.
inline constexpr double kSimpleRootTolerance = 1e-8;

struct PerturbationSolution {
  /// The problem the branch solves (the original one for rescaled branches).
  PerturbedPolynomial problem;
  Coefficient base_root;
  /// For rescaled branches x(eps) = d^laurent_offset * series(d), d = eps^(1/ramification).
  TruncatedSeries series = TruncatedSeries::zero(0, CoefficientMode::Rational);
  std::shared_ptr<const ScalingTransform> scaling;
  int laurent_offset = 0;
  int ramification = 1;
  /// First nonzero index of the residual series; lower bound when `exact`.
  int residual_leading_order = 0;
  /// Residual vanishes identically: the series is an exact root.
  bool exact = false;

  int order() const noexcept { return series.order(); }
};

/// Value of the branch at eps > 0, including Laurent offset and ramification.
std::complex<double> evaluate_branch(const PerturbationSolution& s, double eps);

struct ConditionBound {
  double kappa = 0.0;
  double bound = 0.0;
};

struct ResidualSample {
  double eps = 0.0;
  double residual = 0.0;
  std::optional<double> kappa;
  std::optional<double> bound;
  std::optional<double> oracle_root;
  std::optional<double> oracle_error;
};

struct ResidualReport {
  /// Residual series Phi(z(eps), eps), order > order(z).
  TruncatedSeries residual = TruncatedSeries::zero(0, CoefficientMode::Rational);
  std::vector<ResidualSample> samples;
  /// Log-log slope of |residual| on the grid; empty if it vanishes there.
  std::optional<double> order_slope;
};

/// All roots of Phi(x, 0), with multiplicity, sorted by real then imaginary
/// part. Exact rational roots are returned in rational mode.
std::vector<Coefficient> zeroth_roots(const PerturbedPolynomial& p);

/// Series z = a0 + a1 eps + ... + aN eps^N with Phi(z, eps) = O(eps^{N+1}).
/// Throws MultipleRoot when dPhi/dx(a0, 0) vanishes.
PerturbationSolution expand_root(const PerturbedPolynomial& p, const Coefficient& a0, int order);

/// Phi(z(eps), eps) to order M >= order(z), with z zero-extended.
TruncatedSeries residual_series(const PerturbedPolynomial& p, const TruncatedSeries& z, int order);

/// Least-squares slope of log|Phi(z(eps), eps)| against log eps. Residuals
/// of rational-mode series are computed exactly. Throws ZeroResidualOnGrid.
double estimate_order(const PerturbedPolynomial& p, const TruncatedSeries& z, std::span<const double> grid);

/// First-order error estimate |z - x| ~ kappa |Delta| with kappa = 1/|dPhi/dx|.
ConditionBound condition_bound(const PerturbedPolynomial& p, const TruncatedSeries& z, double eps);

/// Real root of Phi(., eps) near `guess`: bracket by doubling steps, bisect,
/// then polish with Newton steps. Throws NoBracketFound.
double oracle_root(const PerturbedPolynomial& p, double eps, double guess);

ResidualReport residual_report(const PerturbedPolynomial& p, const TruncatedSeries& z, std::span<const double> grid);

/// start, start*ratio, ... (count values). ratio must lie in (0, 1).
std::vector<double> geometric_grid(double start, double ratio, int count);
/// eps = 2^-4 .. 2^-10.
std::vector<double> default_grid();

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace pert
