#pragma once

// Perturbed polynomial problems Phi(x, eps) = sum_k p_k(eps) x^k and their
// textual form.
//
// Input grammar (whitespace is insignificant):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'x' | 'eps' | number | '(' expr ')' | '-' base
//   number := uint ('.' digits)? | uint '/' uint
//
// followed by an optional "= 0". Multiplication must be explicit. Unary
// minus binds tighter than '^', so "-x^2" means (-x)^2. Decimal literals are
// read as exact rationals.

#include <complex>
#include <map>
#include <string>
#include <string_view>

#include "pert/series.hpp"

namespace pert {

class PerturbedPolynomial {
 public:
  PerturbedPolynomial() = default;
  /// Drops identically-zero entries and extends every entry to the common
  /// eps-order (the largest eps power present). Entries must be rational.
  explicit PerturbedPolynomial(std::map<int, TruncatedSeries> coeffs, std::string source = {});

  const std::map<int, TruncatedSeries>& coefficients() const noexcept { return coeffs_; }
  /// Highest x-degree with a nonzero entry; 0 for the zero polynomial.
  int x_degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  int eps_order() const noexcept { return eps_order_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::string& eps_var() const noexcept { return var_; }
  const std::string& source() const noexcept { return source_; }

  /// Entry for x^k at the stored eps-order (the zero series if absent).
  TruncatedSeries coefficient(int k) const;
  /// Entry for x^k extended to eps-order `order`.
  TruncatedSeries coefficient(int k, int order) const;
  /// Rational coefficients of Phi(x, 0), index = x-degree.
  std::vector<mpq_class> at_zero() const;

  friend bool operator==(const PerturbedPolynomial& a, const PerturbedPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<int, TruncatedSeries> coeffs_;
  int eps_order_ = 0;
  std::string var_ = "eps";
  std::string source_;
};

/// Throws ParseError.
PerturbedPolynomial parse(std::string_view text);

/// Canonical text: descending x-degree, ascending eps power, explicit '*' and '^'.
std::string format(const PerturbedPolynomial& p, std::string_view x_name = "x");

double evaluate_at(const PerturbedPolynomial& p, double x, double eps);
std::complex<double> evaluate_at(const PerturbedPolynomial& p, std::complex<double> x, double eps);
mpq_class evaluate_at(const PerturbedPolynomial& p, const mpq_class& x, const mpq_class& eps);

/// d/dx Phi(x, eps).
std::complex<double> evaluate_dx(const PerturbedPolynomial& p, std::complex<double> x, double eps);

}  // namespace pert
