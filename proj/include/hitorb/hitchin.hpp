#pragma once

#include <map>
#include <vector>

#include "hitorb/differentials.hpp"
#include "hitorb/liealg.hpp"
#include "hitorb/orbifold.hpp"
#include "hitorb/rational.hpp"

namespace hitorb {

struct BaseProfileEntry {
  int degree = 0;
  long long real_dim = 0;
};

// Per-degree dimensions of the differential spaces the Hitchin component
// fibers over; `total` is their sum and equals the component's dimension.
struct BaseProfile {
  std::vector<BaseProfileEntry> entries;
  long long total = 0;
};

// Requires a closed hyperbolic signature.
BaseProfile base_profile(const OrbifoldSignature& sig, const SplitGroup& g);

// Dimension of the Hitchin component for a hyperbolic signature.  Closed
// signatures use the degree-by-degree formula; signatures with boundary are
// computed both directly (boundary term 2b*floor(d/2) per degree d) and by
// passing to the mirror orbifold.  A mismatch between the two routes throws
// std::logic_error.
long long dim_hitchin(const OrbifoldSignature& sig, const SplitGroup& g);

// Independent evaluation through the coefficient form
//   -chi(|Y|) dim G + (dim G - rank)(2k + l)/2 - order corrections,
// extended to boundary via l -> l + 2b with order-2 corrections.
long long dim_hitchin_alternate(const OrbifoldSignature& sig, const SplitGroup& g);

// Coefficients of dim Hit as a function of the signature:
//   a * |chi(|Y|)| + c_k * k + c_l * l + c_b * b
//     - sum_m corrections_k[m] * #{cones of order m}
//     - sum_n corrections_l[n] * #{corners of order n}
// Corrections are zero for orders at or beyond the largest invariant degree.
struct DimensionPolynomial {
  long long a = 0;    // dim G
  long long c_k = 0;  // dim G - rank
  Rational c_l;       // (dim G - rank)/2
  long long c_b = 0;
  std::map<int, long long> corrections_k;
  std::map<int, Rational> corrections_l;
};

DimensionPolynomial dimension_polynomial(const SplitGroup& g);

// Two-sided bounds on the defect r = -chi(Y) dim G - dim Hit for closed
// hyperbolic signatures:
//   -rank * w <= r <= rank * w'   with w, w' the weighted order sums below.
struct ApproximationBounds {
  Rational lower;   // -rank * (sum (1 - 1/m) + sum (1 - 1/n)/2)
  Rational upper;   // rank * (sum (1 + 1/m) + sum (1 + 1/n)/2)
  Rational defect;  // the exact value of r
};

ApproximationBounds approximation_bounds(const OrbifoldSignature& sig, const SplitGroup& g);

// sigma(n, m) = (n + r) q + r where n = m q + r, 0 <= r < m.
long long sigma_invariant(int n, int m);

// Independent count for orientable closed hyperbolic signatures:
//   (2g - 2)(n^2 - 1) + sum_i (n^2 - sigma(n, m_i)),
// which agrees with dim_hitchin for pgl:n.
long long expected_dim_pgl(const OrbifoldSignature& sig, int n);

}  // namespace hitorb
