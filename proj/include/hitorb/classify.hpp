#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hitorb/liealg.hpp"
#include "hitorb/orbifold.hpp"

namespace hitorb {

// Closed topological shell of a signature: everything except the cone and
// corner orders.
struct SurfaceShape {
  bool underlying_orientable = true;
  int genus = 0;
  int mirror_circles = 0;

  friend bool operator==(const SurfaceShape&, const SurfaceShape&) = default;
};

int shape_chi(const SurfaceShape& s);

// One cone or corner order in a family: either an exact value or the
// infinite tail "every order >= value".
struct OrderSlot {
  int value = 2;
  bool at_least = false;

  friend bool operator==(const OrderSlot&, const OrderSlot&) = default;
};

// A product-shaped set of closed signatures: fixed shape, and per-slot order
// constraints with non-decreasing slot values along each chain.
struct SignatureFamily {
  SurfaceShape shape;
  std::vector<OrderSlot> cones;
  std::vector<OrderSlot> corners;

  friend bool operator==(const SignatureFamily&, const SignatureFamily&) = default;
};

std::string family_str(const SignatureFamily& fam);

// Result of a classification run.  The families are pairwise disjoint and
// together contain exactly the signatures with the classified property inside
// the searched region (all signatures whose shape appears in shapes_searched
// with at most max_cones cones and max_corners corners).  Orders at or above
// stabilization_order are interchangeable for the property, which is what
// certifies the infinite tails.
struct FamilySet {
  std::vector<SignatureFamily> families;
  int stabilization_order = 2;
  std::vector<SurfaceShape> shapes_searched;
  int max_cones = 0;
  int max_corners = 0;
  std::string bound_note;
};

// The signature with every slot at its minimal admissible order.
OrbifoldSignature family_min_signature(const SignatureFamily& fam);

// All members of the family with orders <= horizon, canonicalized and sorted.
// Throws std::invalid_argument when the horizon cuts below a slot threshold.
std::vector<OrbifoldSignature> expand_family(const SignatureFamily& fam, int horizon);

// Union of the family expansions; throws std::logic_error if two families
// overlap, which would indicate a classification bug.
std::vector<OrbifoldSignature> expand(const FamilySet& set, int horizon);

// Brute-force enumeration region for cross-checking classifications.
struct EnumBounds {
  int max_genus = 0;
  int max_mirror_circles = 0;
  int max_cones = 0;
  int max_corners = 0;
  int max_order = 2;
  bool orientable_only = false;
};

// All valid closed signatures within the bounds (hyperbolic or not), with
// non-decreasing order lists, in a fixed deterministic order.
std::vector<OrbifoldSignature> enumerate_closed_signatures(const EnumBounds& bounds);

// Closed hyperbolic signatures Y with dim Hit(Y, g) == target.  With
// orientable_only set, only signatures orientable as orbifolds (no mirrors,
// no corners) are considered; otherwise all closed signatures are.
FamilySet classify_target_dim(const SplitGroup& g, long long target, bool orientable_only);

// Closed hyperbolic orientable orbifolds with no nonzero regular degree-d
// differential.  Requires d >= 2.
FamilySet classify_vanishing_differentials(int d);

struct DegreeFamilies {
  int degree = 0;
  FamilySet families;
};

// For each degree slot of g: the closed hyperbolic signatures whose regular
// differentials vanish in every other degree slot but not in this one.
// Requires rank >= 2.  With orientable_only cleared, the search also covers
// the two shapes a vanishing slot leaves possible besides the sphere (disk
// with mirror boundary and projective plane).
std::vector<DegreeFamilies> classify_single_differential(const SplitGroup& g,
                                                         bool orientable_only);

// Signatures whose Hitchin representations have cyclic (resp. (n-1)-cyclic)
// image in the principal PGL(n) embedding: the single-differential
// classification filtered to degree n (resp. n-1).  Defined for the families
// with a recorded embedding size (pgl, psp, podd, g2).
struct CyclicClassification {
  int n = 0;
  DegreeFamilies cyclic;         // degree n; empty when g has no such slot
  DegreeFamilies almost_cyclic;  // degree n-1
};

CyclicClassification classify_cyclic(const SplitGroup& g);

// Orientable closed hyperbolic signatures for which the Hitchin component of
// the subgroup h exhausts that of g, i.e. the differential spaces vanish in
// every degree g has beyond h.  Only the six compatible pair shapes are
// accepted: (rank-1 h, any g), (psp:m, pgl:2m), (podd:m, pgl:2m+1),
// (podd:m-1, poeven:m), (g2, pgl:7) and (g2, podd:3).
struct FullSubgroupResult {
  SplitGroup subgroup;
  SplitGroup group;
  std::vector<int> extra_degrees;
  FamilySet families;
};

FullSubgroupResult classify_zariski(const SplitGroup& h, const SplitGroup& g);

}  // namespace hitorb
