#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitorb/rational.hpp"

namespace hitorb {

struct InvalidSignature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Signature of a compact 2-orbifold.
//
// The underlying compact surface is orientable of genus `genus` (handles) or
// non-orientable of genus `genus` (cross-caps).  The circles bounding it are
// split into mirror circles (possibly carrying corner reflectors), boundary
// circles of the orbifold, and mixed circles alternating mirror arcs and
// boundary arcs.  `full_boundaries` counts the boundary components that are
// full 1-orbifolds: the boundary arcs lying on mixed circles, whose endpoints
// are mirror points.  Boundary circles enter the Euler characteristic only
// through chi(|Y|); each full 1-orbifold contributes an extra -1/2.
struct OrbifoldSignature {
  bool underlying_orientable = true;
  int genus = 0;
  int mirror_circles = 0;
  int boundary_circles = 0;
  int full_boundaries = 0;
  int mixed_circles = 0;
  std::vector<int> cone_orders;    // each >= 2
  std::vector<int> corner_orders;  // each >= 2, requires a mirror or mixed circle

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

// Human-readable reasons why `sig` is not a valid signature; empty if valid.
std::vector<std::string> validate(const OrbifoldSignature& sig);

inline bool is_valid(const OrbifoldSignature& sig) { return validate(sig).empty(); }

// Throws InvalidSignature (with the first reason) unless `sig` is valid.
void check_signature(const OrbifoldSignature& sig);

// Euler characteristic of the underlying surface |Y|.
int chi_underlying(const OrbifoldSignature& sig);

// Orbifold Euler characteristic: chi(|Y|) minus 1 - 1/m per cone point,
// (1 - 1/n)/2 per corner reflector, and 1/2 per full 1-orbifold.
Rational euler_characteristic(const OrbifoldSignature& sig);

bool is_hyperbolic(const OrbifoldSignature& sig);

// No boundary components at all (mirror circles are allowed).
bool is_closed(const OrbifoldSignature& sig);

// Orientable as an orbifold: orientable underlying surface and no mirrors.
bool is_orientable_orbifold(const OrbifoldSignature& sig);

// Doubles along the boundary arcs: every boundary component becomes a mirror,
// and the two endpoints of each boundary arc on a mixed circle become
// right-angle corners.  Requires a non-closed signature; preserves both Euler
// characteristics.
OrbifoldSignature mirror(const OrbifoldSignature& sig);

// Orientation double cover of a closed signature: the quotient map is 2-to-1
// away from the mirrors, cone points duplicate, corner reflectors lift to
// cone points, and chi doubles.
OrbifoldSignature orientation_double_cover(const OrbifoldSignature& sig);

// Sorts the order lists; two signatures denote the same orbifold iff their
// canonical forms are equal.
OrbifoldSignature canonicalize(const OrbifoldSignature& sig);

// Total order on signatures (field-wise on the canonical form); used for
// deterministic set handling in the classification code.
bool signature_less(const OrbifoldSignature& a, const OrbifoldSignature& b);

std::string signature_str(const OrbifoldSignature& sig);

}  // namespace hitorb
