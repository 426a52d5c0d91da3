#pragma once

// Asymptotic expansion of I(eps) = int_0^inf exp(-x) / (1 + eps x) dx.
//
// Expanding 1/(1 + eps x) as a finite geometric sum plus remainder gives
//   I(eps) = sum_{k<=N} (-1)^k k! eps^k + (-eps)^{N+1} int x^{N+1} e^{-x} / (1 + eps x) dx
// and the remainder integral is bounded by (N+1)!. The series diverges for
// every eps > 0 as N grows, yet each fixed truncation is O(eps^{N+1}).

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pert/series.hpp"

namespace pert {

/// Moments m_k = int_0^inf x^k w(x) dx of the kernel; the shipped default is k!.
struct MomentSequence {
  std::function<mpz_class(int)> moment;
  std::string description;

  static MomentSequence factorial();
};

/// (-1)^k m_k for k = 0..N, exact.
std::vector<Coefficient> expansion_coefficients(int order, const MomentSequence& m = MomentSequence::factorial());

struct TruncatedValue {
  double value = 0.0;
  /// (N+1)! eps^{N+1}.
  double first_omitted = 0.0;
};

/// S_N(eps), accumulated exactly and rounded once.
TruncatedValue evaluate_truncated(double eps, int order);

/// Rigorous bound (N+1)! eps^{N+1} on |I(eps) - S_N(eps)|.
double remainder_bound(double eps, int order);

struct OptimalTruncation {
  int order = 0;
  /// The cap was reached while omitted terms were still shrinking.
  bool still_decreasing = false;
};

/// N <= max_order minimising the first omitted term; ties go to the smaller N.
OptimalTruncation optimal_truncation(double eps, int max_order);

/// I(eps) by adaptive 31-point Gauss-Kronrod quadrature on [0, 40].
double quadrature_oracle(double eps);

struct ProfileRow {
  int n = 0;
  double term = 0.0;         // n! eps^n
  double partial_sum = 0.0;  // S_n
  double bound = 0.0;        // (n+1)! eps^{n+1}
};

struct DivergenceProfile {
  double eps = 0.0;
  std::vector<ProfileRow> rows;
  /// argmin of term over n >= 1 (ties to the smaller n).
  int min_term_index = 0;
  /// Rows stop early because term magnitudes left the double range.
  bool overflow = false;
};

DivergenceProfile divergence_profile(double eps, int max_order);

}  // namespace pert
