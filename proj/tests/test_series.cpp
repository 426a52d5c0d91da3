#include <doctest.h>

#include "pert/series.hpp"

using namespace pert;

namespace {

mpq_class q(long n, long d = 1) { return mpq_class(n, d); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("coefficient modes do not mix") {
  const Coefficient r = q(1, 3);
  const Coefficient z = std::complex<double>(1.0, 2.0);
  CHECK(r.mode() == CoefficientMode::Rational);
  CHECK(z.mode() == CoefficientMode::Complex);
  CHECK(kind_of([&] { return r + z; }) == ErrorKind::ModeMismatch);
  CHECK(kind_of([&] { return r.as_complex(); }) == ErrorKind::ModeMismatch);
  CHECK(kind_of([&] { return z.as_rational(); }) == ErrorKind::ModeMismatch);
  CHECK(r.to_string() == "1/3");
  CHECK(Coefficient(q(-4, 2)).to_string() == "-2");
  CHECK(z.to_string() == "1+2i");
}

TEST_CASE("series construction") {
  CHECK(kind_of([] { return TruncatedSeries(std::vector<Coefficient>{}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] {
          return TruncatedSeries(std::vector<Coefficient>{Coefficient(1), Coefficient(std::complex<double>(1.0))});
        }) == ErrorKind::ModeMismatch);
  const auto v = TruncatedSeries::variable(3, CoefficientMode::Rational);
  CHECK(v == TruncatedSeries::rational({0, 1, 0, 0}));
  CHECK(TruncatedSeries::zero(2, CoefficientMode::Rational).order() == 2);
}

TEST_CASE("mixed-order arithmetic truncates to the smaller order") {
  const auto a = TruncatedSeries::rational({1, 2, 3, 4});
  const auto b = TruncatedSeries::rational({5, 6});
  CHECK(add(a, b) == TruncatedSeries::rational({6, 8}));
  CHECK(mul(a, b) == TruncatedSeries::rational({5, 16}));
  CHECK(sub(a, a) == TruncatedSeries::zero(3, CoefficientMode::Rational));
}

TEST_CASE("different variables are rejected") {
  const auto a = TruncatedSeries::rational({1, 1});
  const auto b = TruncatedSeries::rational({1, 1}, "delta");
  CHECK(kind_of([&] { return a + b; }) == ErrorKind::VariableMismatch);
}

TEST_CASE("multiplication and powers") {
  const auto one_plus = TruncatedSeries::rational({1, 1, 0, 0, 0});
  CHECK(power(one_plus, 4) == TruncatedSeries::rational({1, 4, 6, 4, 1}));
  CHECK(power(one_plus, 0) == TruncatedSeries::rational({1, 0, 0, 0, 0}));
  CHECK(power(one_plus, 7) == TruncatedSeries::rational({1, 7, 21, 35, 35}));
}

TEST_CASE("inversion") {
  const auto g = invert(TruncatedSeries::rational({1, -1, 0, 0, 0, 0}));
  CHECK(g == TruncatedSeries::rational({1, 1, 1, 1, 1, 1}));
  // 1/(2 + e) = 1/2 - e/4 + e^2/8 - e^3/16
  CHECK(invert(TruncatedSeries::rational({2, 1, 0, 0})) ==
        TruncatedSeries::rational({q(1, 2), q(-1, 4), q(1, 8), q(-1, 16)}));
  CHECK(kind_of([] { return invert(TruncatedSeries::rational({0, 1})); }) == ErrorKind::ZeroConstantTerm);

  const auto c = TruncatedSeries::complex({{0.0, 1.0}, {1.0, 0.0}, {0.0, 0.0}});
  const auto prod = mul(c, invert(c));
  CHECK(std::abs(prod[0].as_complex() - 1.0) < 1e-15);
  CHECK(prod[1].is_zero());
  CHECK(prod[2].is_zero());
  CHECK(kind_of([] { return invert(TruncatedSeries::complex({{1e-14, 0.0}, {1.0, 0.0}})); }) ==
        ErrorKind::ZeroConstantTerm);
}

TEST_CASE("standard series") {
  CHECK(standard_series("exp", 4) == TruncatedSeries::rational({1, 1, q(1, 2), q(1, 6), q(1, 24)}));
  CHECK(standard_series("sin", 5) == TruncatedSeries::rational({0, 1, 0, q(-1, 6), 0, q(1, 120)}));
  CHECK(standard_series("cos", 4) == TruncatedSeries::rational({1, 0, q(-1, 2), 0, q(1, 24)}));
  CHECK(standard_series("geometric", 3) == TruncatedSeries::rational({1, -1, 1, -1}));
  CHECK(kind_of([] { return standard_series("tan", 3); }) == ErrorKind::UnknownSeries);
}

TEST_CASE("composition") {
  // exp(sin e) = 1 + e + e^2/2 - e^4/8 - e^5/15 + ...
  const auto r = compose(standard_series("exp", 5), standard_series("sin", 5));
  CHECK(r == TruncatedSeries::rational({1, 1, q(1, 2), 0, q(-1, 8), q(-1, 15)}));
  // sin(e)^2 + cos(e)^2 = 1 through composition with the identity.
  const auto id = TruncatedSeries::variable(6, CoefficientMode::Rational);
  const auto s = compose(standard_series("sin", 6), id);
  const auto c = compose(standard_series("cos", 6), id);
  CHECK(s * s + c * c == TruncatedSeries::rational({1, 0, 0, 0, 0, 0, 0}));
  CHECK(kind_of([] {
          return compose(standard_series("exp", 3), TruncatedSeries::rational({1, 1, 0, 0}));
        }) == ErrorKind::NonzeroInnerConstant);
  const auto inner = TruncatedSeries::rational({0, 2}, "h");
  CHECK(compose(standard_series("exp", 1), inner).var() == "h");
}

TEST_CASE("differentiation and evaluation") {
  const auto a = TruncatedSeries::rational({3, 2, 5, 7});
  CHECK(differentiate(a) == TruncatedSeries::rational({2, 10, 21}));
  CHECK(kind_of([] { return differentiate(TruncatedSeries::rational({4})); }) == ErrorKind::OrderTooLow);
  CHECK(evaluate(a, mpq_class(1, 2)) == mpq_class(3) + 1 + mpq_class(5, 4) + mpq_class(7, 8));
  CHECK(evaluate(a, 0.5).real() == doctest::Approx(6.125).epsilon(1e-15));
}

TEST_CASE("zero tests and leading index") {
  CHECK(is_zero(TruncatedSeries::zero(3, CoefficientMode::Rational)));
  CHECK(leading_index(TruncatedSeries::zero(3, CoefficientMode::Rational)) == -1);
  CHECK(leading_index(TruncatedSeries::rational({0, 0, 5})) == 2);
  const auto tiny = TruncatedSeries::complex({{1e-13, 0.0}, {0.0, 1e-3}});
  CHECK(leading_index(tiny) == 1);
  CHECK(leading_index(tiny, 1e-2) == -1);
}

TEST_CASE("json round trip") {
  const auto a = TruncatedSeries::rational({q(1, 3), q(-2, 7), 0}, "delta");
  const auto j = to_json(a);
  CHECK(j["var"] == "delta");
  CHECK(j["order"] == 2);
  CHECK(j["mode"] == "rational");
  CHECK(j["coeffs"][1]["num"] == "-2");
  CHECK(j["coeffs"][1]["den"] == "7");
  CHECK(series_from_json(j) == a);

  const auto c = TruncatedSeries::complex({{0.1, -0.2}, {1.0 / 3.0, 0.0}});
  CHECK(series_from_json(to_json(c)) == c);

  auto bad = j;
  bad["order"] = 5;
  CHECK(kind_of([&] { return series_from_json(bad); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("exact rational conversion of doubles") {
  CHECK(exact_rational(0.5) == mpq_class(1, 2));
  CHECK(exact_rational(0.1) == mpq_class("3602879701896397/36028797018963968"));
  CHECK(kind_of([] { return exact_rational(std::numeric_limits<double>::infinity()); }) ==
        ErrorKind::InvalidArgument);
}
