#include "pert/problem.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace pert {

PerturbedPolynomial::PerturbedPolynomial(std::map<int, TruncatedSeries> coeffs, std::string source)
    : source_(std::move(source)) {
  int top = 0;
  bool have_var = false;
  for (auto& [k, s] : coeffs) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative x-degree");
    if (s.mode() != CoefficientMode::Rational)
      throw Error(ErrorKind::ModeMismatch, "problem coefficients must be exact rationals");
    if (have_var && s.var() != var_)
      throw Error(ErrorKind::VariableMismatch, "problem entries use different eps variables");
    var_ = s.var();
    have_var = true;
    for (int j = s.order(); j >= 0; --j) {
      if (!s[j].is_zero()) {
        top = std::max(top, j);
        break;
      }
    }
  }
  for (auto& [k, s] : coeffs) {
    if (pert::is_zero(s)) continue;
    coeffs_.emplace(k, s.with_order(top));
  }
  eps_order_ = top;
}

TruncatedSeries PerturbedPolynomial::coefficient(int k) const { return coefficient(k, eps_order_); }

TruncatedSeries PerturbedPolynomial::coefficient(int k, int order) const {
  const auto it = coeffs_.find(k);
  if (it == coeffs_.end()) return TruncatedSeries::zero(order, CoefficientMode::Rational, var_);
  return it->second.with_order(order);
}

std::vector<mpq_class> PerturbedPolynomial::at_zero() const {
  std::vector<mpq_class> c(static_cast<std::size_t>(x_degree()) + 1, mpq_class(0));
  for (const auto& [k, s] : coeffs_) c[static_cast<std::size_t>(k)] = s[0].as_rational();
  return c;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// Bivariate polynomial keyed by (x-degree, eps-degree).
using Bivariate = std::map<std::pair<int, int>, mpq_class>;

constexpr unsigned kMaxExponent = 1000;

void prune(Bivariate& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (sgn(it->second) == 0)
      it = p.erase(it);
    else
      ++it;
  }
}

Bivariate add(const Bivariate& a, const Bivariate& b, int sign) {
  Bivariate r = a;
  for (const auto& [key, c] : b) {
    if (sign > 0)
      r[key] += c;
    else
      r[key] -= c;
  }
  prune(r);
  return r;
}

Bivariate mul(const Bivariate& a, const Bivariate& b) {
  Bivariate r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  prune(r);
  return r;
}

Bivariate constant(const mpq_class& c) {
  Bivariate r;
  if (sgn(c) != 0) r[{0, 0}] = c;
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Bivariate parse_all() {
    Bivariate e = expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(ParseErrorKind::SyntaxError, at, "only '= 0' may follow the expression");
      const mpq_class rhs = number();
      if (sgn(rhs) != 0) throw ParseError(ParseErrorKind::SyntaxError, at, "only '= 0' may follow the expression");
      skip_ws();
    }
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(ParseErrorKind::SyntaxError, pos_, "unexpected token; multiplication needs an explicit '*'");
      throw ParseError(ParseErrorKind::SyntaxError, pos_, std::string("unexpected character '") + c + "'");
    }
    return e;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Bivariate expr() {
    Bivariate acc = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      acc = add(acc, term(), c == '+' ? 1 : -1);
    }
  }

  Bivariate term() {
    Bivariate acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = mul(acc, factor());
    }
  }

  Bivariate factor() {
    Bivariate b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    const unsigned k = exponent();
    Bivariate r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = mul(r, b);
    return r;
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '-') throw ParseError(ParseErrorKind::NegativeExponent, at, "exponents must be nonnegative");
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(ParseErrorKind::SyntaxError, at, "expected an unsigned integer exponent");
    const mpq_class value = number();
    if (value.get_den() != 1 || text_.substr(at, pos_ - at).find_first_of("./") != std::string_view::npos)
      throw ParseError(ParseErrorKind::NonIntegerExponent, at, "exponents must be integers");
    if (value > kMaxExponent) throw ParseError(ParseErrorKind::SyntaxError, at, "exponent too large");
    return static_cast<unsigned>(value.get_num().get_ui());
  }

  Bivariate base() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '\0') throw ParseError(ParseErrorKind::SyntaxError, at, "unexpected end of input");
    if (c == '-') {
      ++pos_;
      return mul(constant(-1), base());
    }
    if (c == '(') {
      ++pos_;
      Bivariate e = expr();
      skip_ws();
      if (peek() != ')') throw ParseError(ParseErrorKind::SyntaxError, pos_, "expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      const std::string_view ident = text_.substr(pos_, end - pos_);
      if (ident == "x") {
        pos_ = end;
        return Bivariate{{{1, 0}, mpq_class(1)}};
      }
      if (ident == "eps") {
        pos_ = end;
        return Bivariate{{{0, 1}, mpq_class(1)}};
      }
      throw ParseError(ParseErrorKind::UnknownIdentifier, at,
                       "unknown identifier '" + std::string(ident) + "' (only 'x' and 'eps' are allowed)");
    }
    throw ParseError(ParseErrorKind::SyntaxError, at, std::string("unexpected character '") + c + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // number := uint ('.' digits)? | uint '/' uint
  mpq_class number() {
    const std::size_t at = pos_;
    const std::string whole = digits();
    if (peek() == '.') {
      ++pos_;
      const std::string frac = digits();
      if (frac.empty()) throw ParseError(ParseErrorKind::SyntaxError, at, "digits expected after '.'");
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      mpq_class q(mpz_class(whole + frac), den);
      q.canonicalize();
      return q;
    }
    if (peek() == '/' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      const mpz_class den(digits());
      if (den == 0) throw ParseError(ParseErrorKind::SyntaxError, at, "zero denominator");
      mpq_class q(mpz_class(whole), den);
      q.canonicalize();
      return q;
    }
    return mpq_class(mpz_class(whole));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PerturbedPolynomial parse(std::string_view text) {
  const Bivariate poly = Parser(text).parse_all();
  int eps_top = 0;
  for (const auto& [key, c] : poly) eps_top = std::max(eps_top, key.second);
  std::map<int, std::vector<mpq_class>> rows;
  for (const auto& [key, c] : poly) {
    auto& row = rows[key.first];
    row.resize(static_cast<std::size_t>(eps_top) + 1, mpq_class(0));
    row[static_cast<std::size_t>(key.second)] = c;
  }
  std::map<int, TruncatedSeries> coeffs;
  for (const auto& [k, row] : rows) coeffs.emplace(k, TruncatedSeries::rational(row));
  return PerturbedPolynomial(std::move(coeffs), std::string(text));
}

// ---------------------------------------------------------------------------
// Formatting

std::string format(const PerturbedPolynomial& p, std::string_view x_name) {
  std::string out;
  bool first = true;
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const int k = it->first;
    const auto& s = it->second;
    for (int j = 0; j <= s.order(); ++j) {
      const mpq_class& c = s[j].as_rational();
      if (sgn(c) == 0) continue;
      const bool negative = sgn(c) < 0;
      const mpq_class mag = abs(c);

      std::vector<std::string> parts;
      if (mag != 1 || (j == 0 && k == 0)) parts.push_back(Coefficient(mag).to_string());
      if (j > 0) parts.push_back(j == 1 ? s.var() : s.var() + "^" + std::to_string(j));
      if (k > 0) parts.push_back(k == 1 ? std::string(x_name) : std::string(x_name) + "^" + std::to_string(k));
      std::string body;
      for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];

      if (first) {
        // A leading '-' would bind to the first factor before '^'.
        if (negative) out += parts.front().find('^') != std::string::npos ? "-1*" : "-";
        out += body;
        first = false;
      } else {
        out += negative ? " - " : " + ";
        out += body;
      }
    }
  }
  return first ? "0" : out;
}

// ---------------------------------------------------------------------------
// Evaluation

double evaluate_at(const PerturbedPolynomial& p, double x, double eps) {
  if (p.is_zero()) return 0.0;
  double acc = 0.0;
  for (int k = p.x_degree(); k >= 0; --k) {
    const auto it = p.coefficients().find(k);
    const double ck = it == p.coefficients().end() ? 0.0 : evaluate(it->second, eps).real();
    acc = acc * x + ck;
  }
  return acc;
}

std::complex<double> evaluate_at(const PerturbedPolynomial& p, std::complex<double> x, double eps) {
  std::complex<double> acc = 0.0;
  for (int k = p.x_degree(); k >= 0 && !p.is_zero(); --k) {
    const auto it = p.coefficients().find(k);
    const std::complex<double> ck = it == p.coefficients().end() ? 0.0 : evaluate(it->second, eps);
    acc = acc * x + ck;
  }
  return acc;
}

mpq_class evaluate_at(const PerturbedPolynomial& p, const mpq_class& x, const mpq_class& eps) {
  mpq_class acc = 0;
  for (int k = p.x_degree(); k >= 0 && !p.is_zero(); --k) {
    const auto it = p.coefficients().find(k);
    acc *= x;
    if (it != p.coefficients().end()) acc += evaluate(it->second, eps);
  }
  return acc;
}

std::complex<double> evaluate_dx(const PerturbedPolynomial& p, std::complex<double> x, double eps) {
  std::complex<double> acc = 0.0;
  for (int k = p.x_degree(); k >= 1; --k) {
    const auto it = p.coefficients().find(k);
    const std::complex<double> ck = it == p.coefficients().end() ? 0.0 : evaluate(it->second, eps);
    acc = acc * x + static_cast<double>(k) * ck;
  }
  return acc;
}

}  // namespace pert
