#pragma once

#include <optional>
#include <stdexcept>

#include "hitorb/orbifold.hpp"

namespace hitorb {

// Largest allowed pole order at a point of isotropy order m for a regular
// degree-d differential: floor(d - d/m).  Equals d-1 once m >= d, and is
// non-decreasing in both arguments.
inline int pole_order_bound(int d, int m) {
  if (d < 2) throw std::invalid_argument("pole_order_bound: degree must be at least 2");
  if (m < 2) throw std::invalid_argument("pole_order_bound: order must be at least 2");
  return d - (d + m - 1) / m;  // d - ceil(d/m)
}

struct DifferentialDim {
  int degree = 0;
  long long real_dim = 0;
  // set when the orbifold is orientable; then real_dim == 2 * complex_dim
  std::optional<long long> complex_dim;
};

// Real dimension of the space of regular degree-d differentials on a closed
// hyperbolic 2-orbifold:
//   -chi(|Y|)(2d - 1) + 2 * sum_i O(d, m_i) + sum_j O(d, n_j)
// with O = pole_order_bound.  Requires d >= 2.
DifferentialDim dim_regular_differentials(const OrbifoldSignature& sig, int d);

// The formula above with no validity, closedness or hyperbolicity checks;
// building block for sweeps and the classification engine.
inline long long regular_differential_dim_raw(int chi_underlying_value,
                                              const std::vector<int>& cones,
                                              const std::vector<int>& corners, int d) {
  long long dim = -(long long)chi_underlying_value * (2 * d - 1);
  for (int m : cones) dim += 2 * pole_order_bound(d, m);
  for (int n : corners) dim += pole_order_bound(d, n);
  return dim;
}

}  // namespace hitorb
