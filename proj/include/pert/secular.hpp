#pragma once

// Regular expansion of y'' + (1 - eps x) y = 0, y(0) = 1, y'(0) = 0.
//
// Every order y_n lives in the class P(x) cos x + Q(x) sin x with rational
// polynomials P, Q, so the whole expansion (and its residual) is computed
// exactly. Forcing at the natural frequency produces secular terms: the
// polynomial degree grows by two per order and the expansion is only
// uniformly valid for x = O(eps^-1/2).

#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace pert {

/// P(x) cos x + Q(x) sin x; coefficient vectors are indexed by power and
/// carry no trailing zeros.
struct TrigPoly {
  std::vector<mpq_class> cos_part;
  std::vector<mpq_class> sin_part;

  static TrigPoly cos_x();
  static TrigPoly sin_x();

  /// max(deg P, deg Q); -1 for the zero function.
  int degree() const;
  bool is_zero() const { return cos_part.empty() && sin_part.empty(); }
  double operator()(double x) const;
  /// sqrt(P(x)^2 + Q(x)^2), the local oscillation amplitude.
  double amplitude(double x) const;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;
};

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator-(const TrigPoly& a);
TrigPoly operator*(const mpq_class& c, const TrigPoly& a);
TrigPoly times_x(const TrigPoly& a);
TrigPoly derivative(const TrigPoly& a);
/// Exact value at x = 0 (that is, P(0)).
mpq_class value_at_zero(const TrigPoly& a);

nlohmann::json to_json(const TrigPoly& a, int order);

/// Slices y_0..y_N of the regular expansion.
struct EpsExpansion {
  std::vector<TrigPoly> slices;
  int order() const { return static_cast<int>(slices.size()) - 1; }
};

/// y_0 = cos x; y_n'' + y_n = x y_{n-1} with zero initial data, solved by a
/// resonant undetermined-coefficient ansatz and fraction-free elimination.
EpsExpansion derive_expansion(int order);

/// Slices 0..M of Delta = z'' + (1 - eps x) z for z = sum eps^n y_n.
std::vector<TrigPoly> residual_expansion(const EpsExpansion& e, int max_order);

/// Numeric value of the truncated expansion and of its residual.
double evaluate_expansion(const EpsExpansion& e, double eps, double x);
double expansion_residual(const EpsExpansion& e, double eps, double x);

struct ValidityRegion {
  /// Last scan point before |Delta_{N+1}(x)| eps^{N+1} first exceeds threshold |eps x|.
  double x_max = 0.0;
  /// eps^{-1/2}, the theoretical width of the region of validity.
  double marker = 0.0;
  /// eps * x_max > 1: the perturbation itself is no longer small there.
  bool perturbation_not_small = false;
  /// No violation was seen before the end of the scan.
  bool scan_exhausted = false;
};

inline constexpr double kScanStep = 0.05;

ValidityRegion validity_region(const EpsExpansion& e, double eps, double threshold);

/// exp(eps x / 4) cos(x - eps x^2 / 4).
double improved_solution(double eps, double x);

/// z'' + (1 - eps x) z for the improved solution, by second-order
/// Taylor-mode arithmetic in x - x0 (no finite differences).
double improved_residual(double eps, double x0);

/// max |residual| over the grid 0, kScanStep, ... up to x_end.
double max_improved_residual(double eps, double x_end);
double max_expansion_residual(const EpsExpansion& e, double eps, double x_end);

}  // namespace pert
