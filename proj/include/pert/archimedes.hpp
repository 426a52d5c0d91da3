#pragma once

// Archimedes' inscribed polygons: starting from the hexagon in the unit
// circle (side 1, n = 6), doubling the number of sides maps the side s to
//
//   s' = sqrt((1 - sqrt(1 - (s/2)^2))^2 + (s/2)^2)
//
// and p = n s / 2 increases towards pi. The direct form subtracts two nearly
// equal numbers once s is small; the default form uses
// 1 - sqrt(1 - u) = u / (1 + sqrt(1 - u)) instead.
//
// The templates accept any floating type with ADL-visible sqrt (double,
// long double, boost::multiprecision types).

#include <cmath>
#include <vector>

#include "pert/error.hpp"

namespace pert {

template <class Real>
struct PolygonState {
  int k = 1;
  double sides = 6;  // 6 * 2^(k-1), exact in a double for every k we can reach
  Real side = 1;
  Real ratio = 3;    // perimeter / diameter
};

enum class ArchimedesForm { Stable, Naive };

template <class Real>
Real archimedes_step(const Real& s, ArchimedesForm form = ArchimedesForm::Stable) {
  using std::sqrt;
  if (!(s > 0) || s > 1) throw Error(ErrorKind::InvalidArgument, "side length must lie in (0, 1]");
  const Real half = s / 2;
  const Real u = half * half;
  const Real alpha = form == ArchimedesForm::Stable ? Real(u / (1 + sqrt(Real(1 - u)))) : Real(1 - sqrt(Real(1 - u)));
  return sqrt(Real(alpha * alpha + u));
}

template <class Real = double>
std::vector<PolygonState<Real>> archimedes_sequence(int steps, ArchimedesForm form = ArchimedesForm::Stable) {
  if (steps < 1) throw Error(ErrorKind::InvalidArgument, "need at least one step");
  std::vector<PolygonState<Real>> out;
  out.reserve(static_cast<std::size_t>(steps));
  PolygonState<Real> st;
  out.push_back(st);
  for (int k = 2; k <= steps; ++k) {
    st.k = k;
    st.sides *= 2;
    st.side = archimedes_step(st.side, form);
    st.ratio = Real(st.sides) * st.side / 2;
    out.push_back(st);
  }
  return out;
}

/// Rounds to 4 decimals for tabulation.
inline double round4(double v) { return std::round(v * 1e4) / 1e4; }

}  // namespace pert
