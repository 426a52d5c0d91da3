#include "pert/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace pert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorKind::OrderTooLow: return "OrderTooLow";
    case ErrorKind::UnknownSeries: return "UnknownSeries";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateAtZero: return "DegenerateAtZero";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::MultipleRoot: return "MultipleRoot";
    case ErrorKind::ZeroResidualOnGrid: return "ZeroResidualOnGrid";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NoBracketFound: return "NoBracketFound";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::BranchCountMismatch: return "BranchCountMismatch";
  }
  return "Error";
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ParseErrorKind::NegativeExponent: return "NegativeExponent";
    case ParseErrorKind::NonIntegerExponent: return "NonIntegerExponent";
  }
  return "ParseError";
}

std::string_view to_string(CoefficientMode mode) {
  return mode == CoefficientMode::Rational ? "rational" : "float";
}

// ---------------------------------------------------------------------------
// Coefficient

Coefficient::Coefficient(const mpq_class& q) : value_(q) {
  std::get<mpq_class>(value_).canonicalize();
}

Coefficient Coefficient::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  return Coefficient(mpq_class(num, den));
}

Coefficient Coefficient::zero(CoefficientMode mode) {
  return mode == CoefficientMode::Rational ? Coefficient(mpq_class(0))
                                           : Coefficient(std::complex<double>(0.0));
}

Coefficient Coefficient::one(CoefficientMode mode) {
  return mode == CoefficientMode::Rational ? Coefficient(mpq_class(1))
                                           : Coefficient(std::complex<double>(1.0));
}

const mpq_class& Coefficient::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorKind::ModeMismatch, "coefficient is complex-float, not rational");
}

std::complex<double> Coefficient::as_complex() const {
  if (const auto* z = std::get_if<std::complex<double>>(&value_)) return *z;
  throw Error(ErrorKind::ModeMismatch, "coefficient is rational, not complex-float");
}

std::complex<double> Coefficient::to_complex() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return {q->get_d(), 0.0};
  return std::get<std::complex<double>>(value_);
}

bool Coefficient::is_zero(double tol) const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::abs(std::get<std::complex<double>>(value_)) <= tol;
}

double Coefficient::magnitude() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return std::abs(q->get_d());
  return std::abs(std::get<std::complex<double>>(value_));
}

std::string Coefficient::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    if (q->get_den() == 1) return q->get_num().get_str();
    return q->get_num().get_str() + "/" + q->get_den().get_str();
  }
  const auto z = std::get<std::complex<double>>(value_);
  return fmt::format("{:.17g}{:+.17g}i", z.real(), z.imag());
}

namespace {

void require_same_mode(const Coefficient& a, const Coefficient& b) {
  if (a.mode() != b.mode())
    throw Error(ErrorKind::ModeMismatch, "cannot combine rational and complex-float coefficients");
}

}  // namespace

Coefficient Coefficient::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Coefficient(mpq_class(-*q));
  return Coefficient(-std::get<std::complex<double>>(value_));
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  require_same_mode(a, b);
  if (a.is_rational()) return Coefficient(mpq_class(a.as_rational() + b.as_rational()));
  return Coefficient(a.as_complex() + b.as_complex());
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
  require_same_mode(a, b);
  if (a.is_rational()) return Coefficient(mpq_class(a.as_rational() - b.as_rational()));
  return Coefficient(a.as_complex() - b.as_complex());
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  require_same_mode(a, b);
  if (a.is_rational()) return Coefficient(mpq_class(a.as_rational() * b.as_rational()));
  return Coefficient(a.as_complex() * b.as_complex());
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
  require_same_mode(a, b);
  if (a.is_rational()) {
    if (sgn(b.as_rational()) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return Coefficient(mpq_class(a.as_rational() / b.as_rational()));
  }
  return Coefficient(a.as_complex() / b.as_complex());
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.mode() != b.mode()) return false;
  if (a.is_rational()) return a.as_rational() == b.as_rational();
  return a.as_complex() == b.as_complex();
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::vector<Coefficient> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  const auto mode = coeffs_.front().mode();
  for (const auto& c : coeffs_)
    if (c.mode() != mode) throw Error(ErrorKind::ModeMismatch, "mixed coefficient modes in one series");
}

TruncatedSeries TruncatedSeries::zero(int order, CoefficientMode mode, std::string var) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  return TruncatedSeries(std::vector<Coefficient>(static_cast<std::size_t>(order) + 1, Coefficient::zero(mode)),
                         std::move(var));
}

TruncatedSeries TruncatedSeries::constant(const Coefficient& c, int order, std::string var) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  std::vector<Coefficient> v(static_cast<std::size_t>(order) + 1, Coefficient::zero(c.mode()));
  v[0] = c;
  return TruncatedSeries(std::move(v), std::move(var));
}

TruncatedSeries TruncatedSeries::variable(int order, CoefficientMode mode, std::string var) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  std::vector<Coefficient> v(static_cast<std::size_t>(order) + 1, Coefficient::zero(mode));
  if (order >= 1) v[1] = Coefficient::one(mode);
  return TruncatedSeries(std::move(v), std::move(var));
}

TruncatedSeries TruncatedSeries::rational(std::initializer_list<mpq_class> coeffs, std::string var) {
  return rational(std::vector<mpq_class>(coeffs), std::move(var));
}

TruncatedSeries TruncatedSeries::rational(const std::vector<mpq_class>& coeffs, std::string var) {
  std::vector<Coefficient> v(coeffs.begin(), coeffs.end());
  return TruncatedSeries(std::move(v), std::move(var));
}

TruncatedSeries TruncatedSeries::complex(const std::vector<std::complex<double>>& coeffs, std::string var) {
  std::vector<Coefficient> v(coeffs.begin(), coeffs.end());
  return TruncatedSeries(std::move(v), std::move(var));
}

TruncatedSeries TruncatedSeries::with_order(int m) const {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  auto v = coeffs_;
  v.resize(static_cast<std::size_t>(m) + 1, Coefficient::zero(mode()));
  return TruncatedSeries(std::move(v), var_);
}

TruncatedSeries TruncatedSeries::with_var(std::string var) const {
  return TruncatedSeries(coeffs_, std::move(var));
}

TruncatedSeries TruncatedSeries::to_complex() const {
  std::vector<Coefficient> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c.to_complex());
  return TruncatedSeries(std::move(v), var_);
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var() != b.var())
    throw Error(ErrorKind::VariableMismatch, "series in '" + a.var() + "' and '" + b.var() + "'");
  if (a.mode() != b.mode())
    throw Error(ErrorKind::ModeMismatch, "cannot combine rational and complex-float series");
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Coefficient> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v.push_back(a[k] + b[k]);
  return TruncatedSeries(std::move(v), a.var());
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Coefficient> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v.push_back(a[k] - b[k]);
  return TruncatedSeries(std::move(v), a.var());
}

TruncatedSeries negate(const TruncatedSeries& a) {
  std::vector<Coefficient> v;
  v.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) v.push_back(-c);
  return TruncatedSeries(std::move(v), a.var());
}

TruncatedSeries scale(const TruncatedSeries& a, const Coefficient& c) {
  std::vector<Coefficient> v;
  v.reserve(a.coefficients().size());
  for (const auto& x : a.coefficients()) v.push_back(x * c);
  return TruncatedSeries(std::move(v), a.var());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<Coefficient> v(static_cast<std::size_t>(n) + 1, Coefficient::zero(a.mode()));
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_rational() && a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) v[static_cast<std::size_t>(i + j)] = v[static_cast<std::size_t>(i + j)] + a[i] * b[j];
  }
  return TruncatedSeries(std::move(v), a.var());
}

TruncatedSeries power(const TruncatedSeries& a, unsigned k) {
  auto result = TruncatedSeries::constant(Coefficient::one(a.mode()), a.order(), a.var());
  auto base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries invert(const TruncatedSeries& a, double tol) {
  if (a[0].is_zero(tol)) throw Error(ErrorKind::ZeroConstantTerm, "cannot invert a series with zero constant term");
  const int n = a.order();
  std::vector<Coefficient> b;
  b.reserve(static_cast<std::size_t>(n) + 1);
  const Coefficient inv0 = Coefficient::one(a.mode()) / a[0];
  b.push_back(inv0);
  for (int k = 1; k <= n; ++k) {
    Coefficient acc = Coefficient::zero(a.mode());
    for (int j = 1; j <= k; ++j) acc = acc + a[j] * b[static_cast<std::size_t>(k - j)];
    b.push_back(-(acc * inv0));
  }
  return TruncatedSeries(std::move(b), a.var());
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner, double tol) {
  if (outer.mode() != inner.mode())
    throw Error(ErrorKind::ModeMismatch, "cannot compose rational and complex-float series");
  if (!inner[0].is_zero(tol))
    throw Error(ErrorKind::NonzeroInnerConstant, "inner series must have zero constant term");
  const int n = std::min(outer.order(), inner.order());
  const auto in = inner.with_order(n);
  auto result = TruncatedSeries::constant(outer[n], n, inner.var());
  for (int k = n - 1; k >= 0; --k) {
    result = mul(result, in);
    result = add(result, TruncatedSeries::constant(outer[k], n, inner.var()));
  }
  return result;
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
  if (a.order() < 1) throw Error(ErrorKind::OrderTooLow, "cannot differentiate an order-0 series");
  std::vector<Coefficient> v;
  v.reserve(static_cast<std::size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k) {
    const Coefficient factor =
        a.mode() == CoefficientMode::Rational ? Coefficient(mpq_class(k)) : Coefficient(std::complex<double>(k));
    v.push_back(a[k] * factor);
  }
  return TruncatedSeries(std::move(v), a.var());
}

std::complex<double> evaluate(const TruncatedSeries& a, std::complex<double> eps) {
  std::complex<double> acc = a[a.order()].to_complex();
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * eps + a[k].to_complex();
  return acc;
}

mpq_class evaluate(const TruncatedSeries& a, const mpq_class& eps) {
  mpq_class acc = a[a.order()].as_rational();
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * eps + a[k].as_rational();
  return acc;
}

TruncatedSeries standard_series(std::string_view name, int order, std::string var) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  std::vector<mpq_class> c(static_cast<std::size_t>(order) + 1, mpq_class(0));
  mpz_class fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    const auto idx = static_cast<std::size_t>(k);
    if (name == "exp") {
      c[idx] = mpq_class(mpz_class(1), fact);
    } else if (name == "sin") {
      if (k % 2 == 1) c[idx] = mpq_class(mpz_class((k / 2) % 2 == 0 ? 1 : -1), fact);
    } else if (name == "cos") {
      if (k % 2 == 0) c[idx] = mpq_class(mpz_class((k / 2) % 2 == 0 ? 1 : -1), fact);
    } else if (name == "geometric") {
      c[idx] = k % 2 == 0 ? 1 : -1;
    } else {
      throw Error(ErrorKind::UnknownSeries, "unknown standard series '" + std::string(name) + "'");
    }
    c[idx].canonicalize();
  }
  return TruncatedSeries::rational(c, std::move(var));
}

bool is_zero(const TruncatedSeries& a, double tol) {
  return std::all_of(a.coefficients().begin(), a.coefficients().end(),
                     [tol](const Coefficient& c) { return c.is_zero(tol); });
}

int leading_index(const TruncatedSeries& a, double tol) {
  for (int k = 0; k <= a.order(); ++k)
    if (!a[k].is_zero(tol)) return k;
  return -1;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const Coefficient& c) {
  if (c.is_rational()) {
    const auto& q = c.as_rational();
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
  }
  const auto z = c.as_complex();
  return {{"re", z.real()}, {"im", z.imag()}};
}

Coefficient coefficient_from_json(const nlohmann::json& j) {
  if (j.contains("num")) {
    const mpz_class num(j.at("num").get<std::string>());
    const mpz_class den(j.at("den").get<std::string>());
    if (den <= 0) throw Error(ErrorKind::InvalidArgument, "rational denominator must be positive");
    return Coefficient::rational(num, den);
  }
  return Coefficient(std::complex<double>(j.at("re").get<double>(), j.at("im").get<double>()));
}

nlohmann::json to_json(const TruncatedSeries& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.coefficients()) coeffs.push_back(to_json(c));
  return {{"var", a.var()}, {"order", a.order()}, {"mode", std::string(to_string(a.mode()))}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "rational" && mode != "float")
    throw Error(ErrorKind::InvalidArgument, "series mode must be 'rational' or 'float'");
  std::vector<Coefficient> v;
  for (const auto& c : j.at("coeffs")) v.push_back(coefficient_from_json(c));
  const int order = j.at("order").get<int>();
  if (static_cast<int>(v.size()) != order + 1)
    throw Error(ErrorKind::InvalidArgument, "coefficient count does not match order");
  TruncatedSeries s(std::move(v), j.value("var", std::string("eps")));
  if (std::string(to_string(s.mode())) != mode)
    throw Error(ErrorKind::ModeMismatch, "coefficients do not match declared mode");
  return s;
}

mpq_class exact_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "non-finite value has no rational form");
  mpq_class q(x);  // GMP converts doubles exactly
  q.canonicalize();
  return q;
}

}  // namespace pert
