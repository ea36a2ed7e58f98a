#include "hitorb/differentials.hpp"

namespace hitorb {

DifferentialDim dim_regular_differentials(const OrbifoldSignature& sig, int d) {
  check_signature(sig);
  if (!is_closed(sig))
    throw InvalidSignature("dim_regular_differentials: signature must be closed");
  if (!is_hyperbolic(sig))
    throw InvalidSignature("dim_regular_differentials: signature must be hyperbolic");
  if (d < 2) throw std::invalid_argument("dim_regular_differentials: degree must be at least 2");
  DifferentialDim out;
  out.degree = d;
  out.real_dim =
      regular_differential_dim_raw(chi_underlying(sig), sig.cone_orders, sig.corner_orders, d);
  if (is_orientable_orbifold(sig)) out.complex_dim = out.real_dim / 2;
  return out;
}

}  // namespace hitorb
