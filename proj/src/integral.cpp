#include "pert/integral.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace pert {

namespace {

void require_nonnegative(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw Error(ErrorKind::InvalidArgument, "eps must be finite and >= 0");
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// k! eps^k exactly.
mpq_class term(const mpq_class& eps, int k) {
  mpq_class p;
  mpz_pow_ui(p.get_num_mpz_t(), eps.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(p.get_den_mpz_t(), eps.get_den_mpz_t(), static_cast<unsigned long>(k));
  p.canonicalize();
  return p * factorial(k);
}

}  // namespace

MomentSequence MomentSequence::factorial() {
  return {[](int k) { return pert::factorial(k); }, "m_k = int_0^inf x^k exp(-x) dx = k!"};
}

std::vector<Coefficient> expansion_coefficients(int order, const MomentSequence& m) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  std::vector<Coefficient> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    const mpz_class mk = m.moment(k);
    out.emplace_back(mpq_class(k % 2 == 0 ? mk : mpz_class(-mk)));
  }
  return out;
}

TruncatedValue evaluate_truncated(double eps, int order) {
  require_nonnegative(eps);
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  const mpq_class e = exact_rational(eps);
  mpq_class sum = 0;
  for (int k = 0; k <= order; ++k) {
    if (k % 2 == 0)
      sum += term(e, k);
    else
      sum -= term(e, k);
  }
  return {sum.get_d(), term(e, order + 1).get_d()};
}

double remainder_bound(double eps, int order) {
  require_nonnegative(eps);
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  return term(exact_rational(eps), order + 1).get_d();
}

OptimalTruncation optimal_truncation(double eps, int max_order) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (max_order < 1) throw Error(ErrorKind::InvalidArgument, "max_order must be at least 1");
  const mpq_class e = exact_rational(eps);
  OptimalTruncation best;
  mpq_class best_term = term(e, 1);
  for (int n = 1; n <= max_order; ++n) {
    const mpq_class t = term(e, n + 1);
    if (t < best_term) {
      best_term = t;
      best.order = n;
    }
  }
  best.still_decreasing = best.order == max_order && term(e, max_order + 2) < best_term;
  return best;
}

double quadrature_oracle(double eps) {
  require_nonnegative(eps);
  // exp(-40) < 5e-18, so the tail past 40 is below the target accuracy.
  const auto f = [eps](double x) { return std::exp(-x) / (1.0 + eps * x); };
  // The Kronrod error estimate is pessimistic; asking for 1e-15 only buys
  // maximal recursion, while 1e-14 already lands within a few ulp.
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, 40.0, 15, 1e-14);
}

DivergenceProfile divergence_profile(double eps, int max_order) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (max_order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  const mpq_class e = exact_rational(eps);
  const mpq_class limit = exact_rational(std::numeric_limits<double>::max());

  DivergenceProfile prof;
  prof.eps = eps;
  mpq_class sum = 0;
  mpq_class best;
  for (int n = 0; n <= max_order; ++n) {
    const mpq_class t = term(e, n);
    const mpq_class next = term(e, n + 1);
    if (n % 2 == 0)
      sum += t;
    else
      sum -= t;
    if (abs(t) > limit || abs(next) > limit || abs(sum) > limit) {
      prof.overflow = true;
      break;
    }
    prof.rows.push_back({n, t.get_d(), sum.get_d(), next.get_d()});
    if (n >= 1 && (n == 1 || t < best)) {
      best = t;
      prof.min_term_index = n;
    }
  }
  return prof;
}

}  // namespace pert
