#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pert/roots.hpp"
#include "pert/singular.hpp"

using namespace pert;
using cd = std::complex<double>;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

// Numeric roots of Phi(., eps), straight from the coefficients.
std::vector<cd> numeric_roots(const PerturbedPolynomial& p, double eps) {
  std::vector<cd> c(static_cast<std::size_t>(p.x_degree()) + 1, 0.0);
  for (const auto& [k, s] : p.coefficients()) c[static_cast<std::size_t>(k)] = evaluate(s, eps);
  return polynomial_roots(c);
}

double distance_to_nearest(cd z, const std::vector<cd>& roots) {
  double best = INFINITY;
  for (const auto& r : roots) best = std::min(best, std::abs(z - r));
  return best;
}

}  // namespace

TEST_CASE("singularity diagnosis") {
  auto d = is_singular(parse("eps^4*x^5 + x - 1"));
  CHECK(d.singular);
  CHECK(d.generic_degree == 5);
  CHECK(d.degree_at_zero == 1);
  CHECK(d.roots_lost == 4);

  d = is_singular(parse("x^5 + eps*x - 1"));
  CHECK_FALSE(d.singular);
  CHECK(d.roots_lost == 0);

  d = is_singular(parse("eps*x^2 + eps"));
  CHECK(d.degree_at_zero == -1);
  CHECK(d.roots_lost == 2);
}

TEST_CASE("dominant balances") {
  CHECK(dominant_balances(parse("eps^4*x^5 + x - 1")) == std::vector<mpq_class>{0, 1});
  CHECK(dominant_balances(parse("eps*x^3 + x - 1")) == std::vector<mpq_class>{0, mpq_class(1, 2)});
  CHECK(dominant_balances(parse("eps^2*x^3 + eps*x^2 + x - 1")) == std::vector<mpq_class>{0, 1});
  CHECK(dominant_balances(parse("x^2 - eps")).empty());
}

TEST_CASE("scaling transform") {
  const auto p = parse("eps^4*x^5 + x - 1");
  const auto t = apply_scaling(p, 1);
  CHECK(t.transformed == parse("x^5 + x - eps"));
  CHECK(t.premultiplier == 1);
  CHECK(t.ramification == 1);
  CHECK(t.laurent_offset() == -1);
  CHECK_FALSE(t.is_identity());
  CHECK(apply_scaling(p, 0).is_identity());
  CHECK(kind_of([&] { return apply_scaling(p, mpq_class(1, 2)); }) == ErrorKind::InvalidExponent);

  const auto h = apply_scaling(parse("eps*x^3 + x - 1"), mpq_class(1, 2));
  CHECK(h.ramification == 2);
  CHECK(h.laurent_offset() == -1);
  CHECK(h.transformed.eps_var() == "delta");
  CHECK(format(h.transformed) == "x^3 + x - delta");
}

TEST_CASE("singular quintic branches") {
  const auto p = parse("eps^4*x^5 + x - 1");
  const auto branches = all_branches(p, 7);
  REQUIRE(branches.size() == 5);
  int finite = 0;
  for (const auto& b : branches) {
    CHECK(b.problem == p);
    if (b.laurent_offset == 0) {
      ++finite;
      CHECK(b.series == TruncatedSeries::rational({1, 0, 0, 0, -1, 0, 0, 0}));
      continue;
    }
    CHECK(b.laurent_offset == -1);
    const cd y0 = b.base_root.to_complex();
    CHECK(std::abs(std::pow(y0, 4) + 1.0) < 1e-12);
    CHECK(std::abs(b.series[1].to_complex() + 0.25) < 1e-12);
  }
  CHECK(finite == 1);
}

TEST_CASE("branches match numeric roots") {
  const auto p = parse("eps^4*x^5 + x - 1");
  const auto branches = all_branches(p, 3);
  for (double e : {0.0625, 0.03125, 0.015625}) {
    const auto roots = numeric_roots(p, e);
    for (const auto& b : branches) {
      const cd z = evaluate_branch(b, e);
      // blow-up branches carry one factor eps^-1 in front of the series
      CHECK(distance_to_nearest(z, roots) < 10 * std::pow(e, 3));
    }
  }
}

TEST_CASE("fractional balance") {
  const auto p = parse("eps*x^3 + x - 1");
  const auto branches = all_branches(p, 3);
  REQUIRE(branches.size() == 3);
  int ramified = 0;
  for (const auto& b : branches) {
    if (b.ramification != 2) continue;
    ++ramified;
    CHECK(b.laurent_offset == -1);
    CHECK(b.series.var() == "delta");
    CHECK(std::abs(std::abs(b.base_root.to_complex().imag()) - 1.0) < 1e-12);
    CHECK(std::abs(b.series[1].to_complex() + 0.5) < 1e-12);
  }
  CHECK(ramified == 2);
  for (double e : {1e-2, 1e-3}) {
    const auto roots = numeric_roots(p, e);
    for (const auto& b : branches) CHECK(distance_to_nearest(evaluate_branch(b, e), roots) < 10 * e);
  }
}

TEST_CASE("singular quadratic") {
  const auto branches = all_branches(parse("eps*x^2 + x - 1"), 2);
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].series == TruncatedSeries::rational({1, -1, 2}));
  CHECK(branches[1].laurent_offset == -1);
  CHECK(branches[1].series == TruncatedSeries::rational({-1, -1, 1}));
}

TEST_CASE("regular problems keep their branches") {
  const auto branches = all_branches(parse("x^3 - x + eps"), 2);
  CHECK(branches.size() == 3);
  for (const auto& b : branches) CHECK(b.laurent_offset == 0);
}

TEST_CASE("roots that do not come from a positive balance") {
  CHECK(kind_of([] { return all_branches(parse("x^2 - eps"), 2); }) == ErrorKind::BranchCountMismatch);
}
