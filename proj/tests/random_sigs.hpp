#pragma once

// Shared random signature generator for the property suites.  Uses a fixed
// seed in every suite so failures are reproducible.

#include <random>

#include "hitorb/orbifold.hpp"

namespace hitorb_test {

struct SigGen {
  std::mt19937 rng;
  int max_order = 32;

  explicit SigGen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  hitorb::OrbifoldSignature closed() {
    hitorb::OrbifoldSignature sig;
    sig.underlying_orientable = uniform(0, 1) != 0;
    sig.genus = uniform(sig.underlying_orientable ? 0 : 1, 3);
    sig.mirror_circles = uniform(0, 2);
    int k = uniform(0, 5);
    for (int i = 0; i < k; ++i) sig.cone_orders.push_back(uniform(2, max_order));
    if (sig.mirror_circles > 0) {
      int l = uniform(0, 4);
      for (int j = 0; j < l; ++j) sig.corner_orders.push_back(uniform(2, max_order));
    }
    return sig;
  }

  hitorb::OrbifoldSignature closed_hyperbolic() {
    for (;;) {
      auto sig = closed();
      if (hitorb::is_hyperbolic(sig)) return sig;
    }
  }

  hitorb::OrbifoldSignature with_boundary() {
    for (;;) {
      auto sig = closed();
      sig.boundary_circles = uniform(0, 2);
      sig.mixed_circles = uniform(0, 2);
      if (sig.mixed_circles > 0) sig.full_boundaries = uniform(sig.mixed_circles, 4);
      if (sig.boundary_circles + sig.mixed_circles > 0) return sig;
    }
  }

  hitorb::OrbifoldSignature hyperbolic_with_boundary() {
    for (;;) {
      auto sig = with_boundary();
      if (hitorb::is_hyperbolic(sig)) return sig;
    }
  }
};

}  // namespace hitorb_test
