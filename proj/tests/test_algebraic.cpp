#include <doctest.h>

#include <cmath>

#include "pert/algebraic.hpp"

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

TEST_CASE("zeroth-order roots") {
  const auto roots = zeroth_roots(parse("x^5 + eps*x - 1"));
  REQUIRE(roots.size() == 5);
  int rational = 0;
  for (const auto& r : roots)
    if (r.mode() == CoefficientMode::Rational) {
      ++rational;
      CHECK(r == Coefficient(1));
    }
  CHECK(rational == 1);

  const auto cubic = zeroth_roots(parse("2*x^3 - x + eps"));
  REQUIRE(cubic.size() == 3);
  CHECK(cubic[1] == Coefficient(0));
  CHECK(cubic[0].mode() == CoefficientMode::Complex);
  CHECK(std::abs(cubic[0].as_complex() + std::sqrt(0.5)) < 1e-15);

  const auto thirds = zeroth_roots(parse("3*x^2 - 4*x + 1"));
  CHECK(thirds == std::vector<Coefficient>{Coefficient(q(1, 3)), Coefficient(1)});

  CHECK(kind_of([] { return zeroth_roots(parse("eps*x - 1")); }) == ErrorKind::DegenerateAtZero);
}

TEST_CASE("quintic coefficients") {
  const auto p = parse("x^5 + eps*x - 1");
  const auto s = expand_root(p, Coefficient(1), 5);
  CHECK(s.series == TruncatedSeries::rational({1, q(-1, 5), q(-1, 25), q(-1, 125), 0, q(21, 15625)}));
  CHECK(s.residual_leading_order == 6);
  CHECK_FALSE(s.exact);
  const auto delta = residual_series(p, s.series, 6);
  CHECK(delta[6] == Coefficient(q(-78, 15625)));
}

TEST_CASE("cubic with a zero base root") {
  const auto p = parse("x^3 - x + eps");
  CHECK(expand_root(p, Coefficient(0), 4).series == TruncatedSeries::rational({0, 1, 0, 1, 0}));
  CHECK(expand_root(p, Coefficient(1), 4).series ==
        TruncatedSeries::rational({1, q(-1, 2), q(-3, 8), q(-1, 2), q(-105, 128)}));
  CHECK(expand_root(p, Coefficient(-1), 4).series ==
        TruncatedSeries::rational({-1, q(-1, 2), q(3, 8), q(-1, 2), q(105, 128)}));
}

TEST_CASE("float mode matches rational mode") {
  const auto p = parse("x^3 - x + eps");
  const auto r = expand_root(p, Coefficient(1), 4);
  const auto f = expand_root(p, Coefficient(std::complex<double>(1.0)), 4);
  CHECK(f.series.mode() == CoefficientMode::Complex);
  for (int n = 0; n <= 4; ++n) CHECK(std::abs(f.series[n].as_complex() - r.series[n].to_complex()) < 1e-14);
}

TEST_CASE("exact roots are flagged") {
  const auto s = expand_root(parse("(x - 1)*(x + 2) + eps*(x - 1)"), Coefficient(1), 3);
  CHECK(s.series == TruncatedSeries::rational({1, 0, 0, 0}));
  CHECK(s.exact);
}

TEST_CASE("multiple and non-roots are rejected") {
  const auto p = parse("x^2 - 2*x + 1 + eps");
  CHECK(kind_of([&] { return expand_root(p, Coefficient(1), 2); }) == ErrorKind::MultipleRoot);
  CHECK(kind_of([&] { return expand_root(p, Coefficient(2), 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { return expand_root(p, Coefficient(std::complex<double>(1.0 + 1e-10)), 2); }) ==
        ErrorKind::MultipleRoot);
}

TEST_CASE("residual order on the default grid") {
  const auto p = parse("x^5 + eps*x - 1");
  const auto grid = default_grid();
  REQUIRE(grid.size() == 7);
  CHECK(grid.front() == 0.0625);
  CHECK(grid.back() == std::ldexp(1.0, -10));
  for (int n = 0; n <= 2; ++n) {
    const auto s = expand_root(p, Coefficient(1), n);
    CHECK(estimate_order(p, s.series, grid) == doctest::Approx(n + 1).epsilon(0.05));
  }
  // a_4 = 0, so the order-3 truncation is already good to eps^5
  CHECK(estimate_order(p, expand_root(p, Coefficient(1), 3).series, grid) == doctest::Approx(5).epsilon(0.05));
  const auto exact = expand_root(parse("x - 1 + 0*eps"), Coefficient(1), 1);
  CHECK(kind_of([&] { return estimate_order(exact.problem, exact.series, grid); }) == ErrorKind::ZeroResidualOnGrid);
  CHECK(kind_of([&] { return estimate_order(p, exact.series, std::vector<double>{0.1}); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("condition bound and oracle at eps = 1") {
  const auto p = parse("x^5 + eps*x - 1");
  const double root = oracle_root(p, 1.0, 0.8);
  CHECK(std::abs(std::pow(root, 5) + root - 1) < 1e-15);
  CHECK(root == doctest::Approx(0.7548776662466927).epsilon(1e-15));

  const auto z1 = expand_root(p, Coefficient(1), 1).series;
  const auto cb = condition_bound(p, z1, 1.0);
  // kappa = 1/(5 z^4 + 1), Delta = z^5 + z - 1 at z = 4/5
  CHECK(cb.kappa == doctest::Approx(1.0 / (5 * 0.4096 + 1)).epsilon(1e-14));
  CHECK(cb.bound == doctest::Approx(0.12768 / (5 * 0.4096 + 1)).epsilon(1e-13));

  CHECK(kind_of([&] { return condition_bound(parse("x^2 + eps"), TruncatedSeries::rational({0, 0}), 0.0); }) ==
        ErrorKind::IllConditioned);
  CHECK(kind_of([&] { return oracle_root(parse("x^2 + 1 + eps"), 0.5, 0.0); }) == ErrorKind::NoBracketFound);
}

TEST_CASE("quadratic branch against the closed form") {
  const auto p = parse("eps*x^2 + x - 1");
  const auto s = expand_root(p, Coefficient(1), 4);
  CHECK(s.series == TruncatedSeries::rational({1, -1, 2, -5, 14}));
  for (double e : {0.01, 0.02, 0.04}) {
    const double exact = (-1 + std::sqrt(1 + 4 * e)) / (2 * e);
    CHECK(std::abs(evaluate(s.series, e).real() - exact) < 50 * std::pow(e, 5));
  }
}

TEST_CASE("residual report") {
  const auto p = parse("x^5 + eps*x - 1");
  const auto z = expand_root(p, Coefficient(1), 2).series;
  const auto grid = geometric_grid(0.1, 0.5, 4);
  const auto rep = residual_report(p, z, grid);
  CHECK(rep.residual.order() >= 3);
  CHECK(leading_index(rep.residual) == 3);
  CHECK(rep.residual[3] == Coefficient(q(1, 25)));
  REQUIRE(rep.samples.size() == 4);
  for (const auto& s : rep.samples) {
    REQUIRE(s.oracle_root);
    REQUIRE(s.bound);
    CHECK(*s.oracle_error <= 1.5 * *s.bound);
  }
  REQUIRE(rep.order_slope);
  CHECK(*rep.order_slope == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("grid helpers") {
  CHECK(geometric_grid(1.0, 0.5, 3) == std::vector<double>{1.0, 0.5, 0.25});
  CHECK(kind_of([] { return geometric_grid(1.0, 1.0, 3); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { return geometric_grid(-1.0, 0.5, 3); }) == ErrorKind::InvalidArgument);
  const std::vector<double> xs{1, 2, 4, 8};
  const std::vector<double> ys{3, 12, 48, 192};
  CHECK(loglog_slope(xs, ys) == doctest::Approx(2.0));
}
