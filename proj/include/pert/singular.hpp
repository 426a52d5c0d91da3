#pragma once

// Singular perturbation by dominant balance.
//
// When Phi(x, 0) has lower x-degree than Phi(x, eps), some roots escape to
// infinity as eps -> 0. Each edge of the lower convex hull of the points
// (k, ord_eps p_k) gives a scaling x = y eps^-p under which two or more
// terms balance; after multiplying by eps^m (and writing eps = d^q when p is
// fractional) the escaping roots become ordinary roots in y.

#include <memory>
#include <string>
#include <vector>

#include "pert/algebraic.hpp"
#include "pert/problem.hpp"

namespace pert {

struct SingularityDiagnosis {
  bool singular = false;
  int generic_degree = 0;
  /// x-degree of Phi(x, 0); -1 when Phi(x, 0) vanishes identically.
  int degree_at_zero = 0;
  int roots_lost = 0;
};

SingularityDiagnosis is_singular(const PerturbedPolynomial& p);

struct ScalingTransform {
  /// x = y * eps^-exponent.
  mpq_class exponent;
  /// The equation is multiplied by eps^premultiplier.
  mpq_class premultiplier;
  /// eps = d^ramification clears fractional powers (1 when none appear).
  int ramification = 1;
  std::string substitution;
  /// Problem in (y, d); the eps variable is "delta" when ramification > 1.
  PerturbedPolynomial transformed;

  bool is_identity() const { return sgn(exponent) == 0 && sgn(premultiplier) == 0; }
  /// Power of d multiplying y to give x.
  int laurent_offset() const;
};

/// Hull slopes p >= 0, ascending; p = 0 is included when Phi(x, 0) has two or more terms.
std::vector<mpq_class> dominant_balances(const PerturbedPolynomial& p);

/// Throws InvalidExponent unless `exponent` is one of dominant_balances(p).
ScalingTransform apply_scaling(const PerturbedPolynomial& p, const mpq_class& exponent);

/// Every root branch of p to order N in the (possibly ramified) eps variable.
/// Complex base roots use complex-float mode. Throws MultipleRoot for
/// defective branches and BranchCountMismatch when the balances do not
/// account for all x_degree roots.
std::vector<PerturbationSolution> all_branches(const PerturbedPolynomial& p, int order);

}  // namespace pert
