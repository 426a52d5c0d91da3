#pragma once

// Truncated power series in a single perturbation variable.
//
// A TruncatedSeries holds c_0..c_N and represents c_0 + c_1 e + ... + c_N e^N
// modulo e^{N+1}. Coefficients are either all exact rationals (GMP) or all
// complex doubles; the two modes never mix. Binary operations on series of
// different order return a result at the smaller order.

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "pert/error.hpp"

namespace pert {

inline constexpr double kDefaultZeroTolerance = 1e-12;

enum class CoefficientMode { Rational, Complex };

std::string_view to_string(CoefficientMode mode);

class Coefficient {
 public:
  Coefficient() : value_(mpq_class(0)) {}
  Coefficient(const mpq_class& q);  // NOLINT(google-explicit-constructor)
  Coefficient(std::complex<double> z) : value_(z) {}  // NOLINT(google-explicit-constructor)
  Coefficient(long n) : Coefficient(mpq_class(n)) {}  // NOLINT(google-explicit-constructor)
  Coefficient(int n) : Coefficient(mpq_class(n)) {}  // NOLINT(google-explicit-constructor)

  static Coefficient rational(const mpz_class& num, const mpz_class& den);
  static Coefficient zero(CoefficientMode mode);
  static Coefficient one(CoefficientMode mode);

  CoefficientMode mode() const noexcept {
    return std::holds_alternative<mpq_class>(value_) ? CoefficientMode::Rational
                                                     : CoefficientMode::Complex;
  }
  bool is_rational() const noexcept { return mode() == CoefficientMode::Rational; }

  /// Throws ModeMismatch when the coefficient is complex.
  const mpq_class& as_rational() const;
  /// Throws ModeMismatch when the coefficient is rational.
  std::complex<double> as_complex() const;
  /// Numeric value regardless of mode (for evaluation only, not arithmetic).
  std::complex<double> to_complex() const;

  bool is_zero(double tol = kDefaultZeroTolerance) const;
  double magnitude() const;

  /// "num/den" (or "num") for rationals, "re+imi" for complex values.
  std::string to_string() const;

  Coefficient operator-() const;
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b);

 private:
  std::variant<mpq_class, std::complex<double>> value_;
};

class TruncatedSeries {
 public:
  /// `coeffs` must be non-empty and single-mode.
  explicit TruncatedSeries(std::vector<Coefficient> coeffs, std::string var = "eps");

  static TruncatedSeries zero(int order, CoefficientMode mode, std::string var = "eps");
  static TruncatedSeries constant(const Coefficient& c, int order, std::string var = "eps");
  /// The series `e` itself (requires order >= 1 to be non-trivial).
  static TruncatedSeries variable(int order, CoefficientMode mode, std::string var = "eps");
  static TruncatedSeries rational(std::initializer_list<mpq_class> coeffs, std::string var = "eps");
  static TruncatedSeries rational(const std::vector<mpq_class>& coeffs, std::string var = "eps");
  static TruncatedSeries complex(const std::vector<std::complex<double>>& coeffs,
                                 std::string var = "eps");

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  CoefficientMode mode() const noexcept { return coeffs_.front().mode(); }
  const std::string& var() const noexcept { return var_; }
  const Coefficient& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Coefficient>& coefficients() const noexcept { return coeffs_; }

  /// Truncate or zero-extend to order `m`.
  TruncatedSeries with_order(int m) const;
  TruncatedSeries with_var(std::string var) const;
  /// Same values in complex-float mode.
  TruncatedSeries to_complex() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<Coefficient> coeffs_;
  std::string var_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Coefficient& c);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries power(const TruncatedSeries& a, unsigned k);
TruncatedSeries invert(const TruncatedSeries& a, double tol = kDefaultZeroTolerance);
/// outer(inner(e)); the result carries inner's variable tag.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner,
                        double tol = kDefaultZeroTolerance);
TruncatedSeries differentiate(const TruncatedSeries& a);

/// Horner evaluation; rational coefficients are rounded to double first.
std::complex<double> evaluate(const TruncatedSeries& a, std::complex<double> eps);
inline std::complex<double> evaluate(const TruncatedSeries& a, double eps) { return evaluate(a, std::complex<double>(eps)); }
/// Exact evaluation of a rational-mode series.
mpq_class evaluate(const TruncatedSeries& a, const mpq_class& eps);

/// Exact Maclaurin coefficients of exp, sin, cos, or 1/(1+e) ("geometric").
TruncatedSeries standard_series(std::string_view name, int order, std::string var = "eps");

bool is_zero(const TruncatedSeries& a, double tol = kDefaultZeroTolerance);

/// Index of the first coefficient that is not zero, or -1 for the zero series.
int leading_index(const TruncatedSeries& a, double tol = kDefaultZeroTolerance);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// {"var": ..., "order": N, "mode": "rational"|"float", "coeffs": [...]}.
nlohmann::json to_json(const TruncatedSeries& a);
TruncatedSeries series_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const nlohmann::json& j);

/// Exact rational value of a finite double.
mpq_class exact_rational(double x);

}  // namespace pert
