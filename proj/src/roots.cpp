#include "pert/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pert/error.hpp"

namespace pert {

namespace {

std::complex<double> horner(std::span<const std::complex<double>> c, std::complex<double> z) {
  std::complex<double> acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

// Roundoff-level bound on |p(z)|: unit roundoff times sum |c_k| |z|^k, scaled
// by the degree to absorb Horner's accumulated error.
double backward_error_scale(std::span<const std::complex<double>> c, std::complex<double> z) {
  double acc = 0.0;
  const double r = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + std::abs(c[k]);
  return acc * 8.0 * static_cast<double>(c.size()) * std::numeric_limits<double>::epsilon();
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs,
                                                   const RootOptions& options) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no finite root set");
  const std::size_t degree = n - 1;
  if (degree == 0) return {};

  // Monic copy; roots at zero are split off exactly.
  std::size_t low = 0;
  while (coeffs[low] == 0.0) ++low;
  std::vector<std::complex<double>> monic(coeffs.begin() + static_cast<std::ptrdiff_t>(low),
                                          coeffs.begin() + static_cast<std::ptrdiff_t>(n));
  const auto lead = monic.back();
  for (auto& c : monic) c /= lead;

  std::vector<std::complex<double>> roots(low, std::complex<double>(0.0));
  const std::size_t m = monic.size() - 1;
  if (m == 0) return roots;
  if (m == 1) {
    roots.push_back(-monic[0]);
    return roots;
  }

  // Start on the circle whose radius is the geometric mean of the root moduli.
  const double radius = std::pow(std::abs(monic[0]), 1.0 / static_cast<double>(m));
  std::vector<std::complex<double>> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  bool converged = false;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      std::complex<double> denom = 1.0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == 0.0) denom = options.tolerance;
      const auto step = horner(monic, z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    converged = max_step <= options.tolerance;
  }

  if (!converged) {
    // Clustered roots stall the step size near sqrt(roundoff); accept when
    // every residual is already at roundoff level.
    for (const auto& r : z) {
      if (std::abs(horner(monic, r)) > 1e3 * backward_error_scale(monic, r))
        throw Error(ErrorKind::NoConvergence, "simultaneous iteration did not converge");
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

void sort_roots(std::vector<std::complex<double>>& roots, double tol) {
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  // Conjugate pairs often differ in the last bits of the real part; order
  // each cluster of near-equal real parts by imaginary part.
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i + 1;
    while (j < roots.size() && roots[j].real() - roots[j - 1].real() <= tol) ++j;
    std::sort(roots.begin() + static_cast<std::ptrdiff_t>(i), roots.begin() + static_cast<std::ptrdiff_t>(j),
              [](const auto& a, const auto& b) { return a.imag() < b.imag(); });
    i = j;
  }
}

}  // namespace pert
