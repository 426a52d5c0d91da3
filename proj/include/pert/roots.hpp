#pragma once

#include <complex>
#include <span>
#include <vector>

namespace pert {

struct RootOptions {
  double tolerance = 1e-12;
  int max_sweeps = 200;
};

/// All complex roots of sum_k coeffs[k] z^k (with multiplicity) by
/// Durand-Kerner simultaneous iteration started on a perturbed circle.
/// Trailing zero coefficients are ignored. Throws NoConvergence when the
/// sweeps are exhausted and the backward error is still above roundoff.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs,
                                                   const RootOptions& options = {});

/// Sort by real part, then imaginary part; parts within `tol` compare equal.
void sort_roots(std::vector<std::complex<double>>& roots, double tol = 1e-9);

}  // namespace pert
