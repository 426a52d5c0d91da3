#include "pert/singular.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace pert {

namespace {

struct HullPoint {
  int k;
  int order;
};

std::vector<HullPoint> newton_points(const PerturbedPolynomial& p) {
  std::vector<HullPoint> pts;
  for (const auto& [k, s] : p.coefficients()) pts.push_back({k, leading_index(s)});
  return pts;
}

// Lower convex hull by Andrew's monotone chain; collinear points are dropped
// so each edge is maximal.
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
  std::vector<HullPoint> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      const long cross = static_cast<long>(b.k - a.k) * (pt.order - a.order) -
                         static_cast<long>(b.order - a.order) * (pt.k - a.k);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  return hull;
}

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
}

}  // namespace

int ScalingTransform::laurent_offset() const {
  const mpq_class v = -exponent * ramification;
  return static_cast<int>(v.get_num().get_si());
}

SingularityDiagnosis is_singular(const PerturbedPolynomial& p) {
  SingularityDiagnosis d;
  d.generic_degree = p.x_degree();
  d.degree_at_zero = -1;
  for (const auto& [k, s] : p.coefficients())
    if (!s[0].is_zero()) d.degree_at_zero = k;
  d.roots_lost = d.generic_degree - std::max(d.degree_at_zero, 0);
  d.singular = d.degree_at_zero < d.generic_degree;
  return d;
}

std::vector<mpq_class> dominant_balances(const PerturbedPolynomial& p) {
  const auto hull = lower_hull(newton_points(p));
  std::vector<mpq_class> out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    mpq_class slope(hull[i].order - hull[i - 1].order, hull[i].k - hull[i - 1].k);
    slope.canonicalize();
    if (sgn(slope) >= 0) out.push_back(slope);
  }
  return out;
}

ScalingTransform apply_scaling(const PerturbedPolynomial& p, const mpq_class& exponent) {
  const auto balances = dominant_balances(p);
  if (std::find(balances.begin(), balances.end(), exponent) == balances.end())
    throw Error(ErrorKind::InvalidExponent,
                "exponent " + Coefficient(exponent).to_string() + " is not a dominant balance");

  struct Term {
    int k;
    mpq_class shift;
    mpq_class c;
  };
  std::vector<Term> terms;
  for (const auto& [k, s] : p.coefficients()) {
    for (int j = 0; j <= s.order(); ++j) {
      if (s[j].is_zero()) continue;
      mpq_class shift = j - exponent * k;
      shift.canonicalize();
      terms.push_back({k, shift, s[j].as_rational()});
    }
  }

  mpq_class lowest = terms.front().shift;
  for (const auto& t : terms) lowest = std::min(lowest, t.shift);

  ScalingTransform tr;
  tr.exponent = exponent;
  tr.premultiplier = -lowest;
  mpz_class q = exponent.get_den();
  for (auto& t : terms) {
    t.shift -= lowest;
    t.shift.canonicalize();
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), t.shift.get_den_mpz_t());
  }
  tr.ramification = static_cast<int>(q.get_si());
  const std::string var = tr.ramification == 1 ? p.eps_var() : std::string("delta");

  int top = 0;
  for (const auto& t : terms) top = std::max(top, static_cast<int>(mpq_class(t.shift * q).get_num().get_si()));
  std::map<int, std::vector<mpq_class>> rows;
  for (const auto& t : terms) {
    auto& row = rows[t.k];
    row.resize(static_cast<std::size_t>(top) + 1, mpq_class(0));
    row[static_cast<std::size_t>(mpq_class(t.shift * q).get_num().get_si())] += t.c;
  }
  std::map<int, TruncatedSeries> coeffs;
  for (const auto& [k, row] : rows) coeffs.emplace(k, TruncatedSeries::rational(row, var));
  tr.transformed = PerturbedPolynomial(std::move(coeffs));

  if (tr.is_identity()) {
    tr.substitution = "identity";
  } else {
    tr.substitution = fmt::format("x = y*eps^{}", rational_text(-exponent));
    if (sgn(tr.premultiplier) != 0) tr.substitution += fmt::format(", multiplied by eps^{}", rational_text(tr.premultiplier));
    if (tr.ramification > 1) tr.substitution += fmt::format(", eps = delta^{}", tr.ramification);
  }
  return tr;
}

std::vector<PerturbationSolution> all_branches(const PerturbedPolynomial& p, int order) {
  std::vector<PerturbationSolution> out;
  for (const auto& exponent : dominant_balances(p)) {
    auto tr = std::make_shared<const ScalingTransform>(apply_scaling(p, exponent));
    for (const auto& root : zeroth_roots(tr->transformed)) {
      // Zero roots of a rescaled problem belong to a shallower balance.
      if (sgn(exponent) > 0 && root.is_zero(0.0)) continue;
      auto y = expand_root(tr->transformed, root, order);

      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const PerturbationSolution& b) {
        const mpq_class b_exp = b.scaling ? b.scaling->exponent : mpq_class(0);
        if (b_exp != exponent) return false;
        const auto a = b.base_root.to_complex(), c = root.to_complex();
        return std::abs(a - c) <= 1e-6 * std::max(1.0, std::abs(a));
      });
      if (duplicate) continue;

      PerturbationSolution branch = std::move(y);
      branch.problem = p;
      branch.laurent_offset = tr->laurent_offset();
      branch.ramification = tr->ramification;
      branch.scaling = tr;
      out.push_back(std::move(branch));
    }
  }
  if (static_cast<int>(out.size()) != p.x_degree())
    throw Error(ErrorKind::BranchCountMismatch,
                fmt::format("found {} branches for a degree-{} problem (roots tending to zero like fractional "
                            "powers of eps are not covered by nonnegative balances)",
                            out.size(), p.x_degree()));
  return out;
}

}  // namespace pert
