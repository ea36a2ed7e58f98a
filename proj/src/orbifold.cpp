#include "hitorb/orbifold.hpp"

#include <algorithm>
#include <tuple>

namespace hitorb {

std::vector<std::string> validate(const OrbifoldSignature& sig) {
  std::vector<std::string> errors;
  if (sig.genus < 0) errors.push_back("genus must be non-negative");
  if (!sig.underlying_orientable && sig.genus < 1)
    errors.push_back("a non-orientable surface has at least one cross-cap");
  if (sig.mirror_circles < 0) errors.push_back("mirror circle count must be non-negative");
  if (sig.boundary_circles < 0) errors.push_back("boundary circle count must be non-negative");
  if (sig.mixed_circles < 0) errors.push_back("mixed circle count must be non-negative");
  if (sig.full_boundaries < 0) errors.push_back("full boundary count must be non-negative");
  for (int m : sig.cone_orders)
    if (m < 2) { errors.push_back("cone orders must be at least 2"); break; }
  for (int n : sig.corner_orders)
    if (n < 2) { errors.push_back("corner orders must be at least 2"); break; }
  if (!sig.corner_orders.empty() && sig.mirror_circles + sig.mixed_circles == 0)
    errors.push_back("corner reflectors require a mirror or mixed circle");
  // full 1-orbifolds are the boundary arcs of mixed circles, each of which
  // carries at least one
  if (sig.full_boundaries < sig.mixed_circles)
    errors.push_back("each mixed circle carries at least one full 1-orbifold");
  if (sig.mixed_circles == 0 && sig.full_boundaries != 0)
    errors.push_back("full 1-orbifolds require mixed circles");
  return errors;
}

void check_signature(const OrbifoldSignature& sig) {
  auto errors = validate(sig);
  if (!errors.empty()) throw InvalidSignature(errors.front());
}

int chi_underlying(const OrbifoldSignature& sig) {
  int closed_part = sig.underlying_orientable ? 2 - 2 * sig.genus : 2 - sig.genus;
  return closed_part - (sig.mirror_circles + sig.boundary_circles + sig.mixed_circles);
}

Rational euler_characteristic(const OrbifoldSignature& sig) {
  check_signature(sig);
  Rational chi(chi_underlying(sig));
  for (int m : sig.cone_orders) chi -= Rational(m - 1, m);
  for (int n : sig.corner_orders) chi -= Rational(n - 1, 2 * n);
  chi -= Rational(sig.full_boundaries, 2);
  return chi;
}

bool is_hyperbolic(const OrbifoldSignature& sig) {
  return euler_characteristic(sig).is_negative();
}

bool is_closed(const OrbifoldSignature& sig) {
  return sig.boundary_circles == 0 && sig.mixed_circles == 0 && sig.full_boundaries == 0;
}

bool is_orientable_orbifold(const OrbifoldSignature& sig) {
  return sig.underlying_orientable && sig.mirror_circles == 0 && sig.mixed_circles == 0;
}

OrbifoldSignature mirror(const OrbifoldSignature& sig) {
  check_signature(sig);
  if (is_closed(sig)) throw InvalidSignature("mirror: signature has no boundary");
  OrbifoldSignature out = sig;
  out.mirror_circles += sig.boundary_circles + sig.mixed_circles;
  out.boundary_circles = 0;
  out.mixed_circles = 0;
  out.full_boundaries = 0;
  // the two endpoints of each full 1-orbifold become right-angle corners
  out.corner_orders.insert(out.corner_orders.end(), 2 * (size_t)sig.full_boundaries, 2);
  return out;
}

OrbifoldSignature orientation_double_cover(const OrbifoldSignature& sig) {
  check_signature(sig);
  if (!is_closed(sig))
    throw InvalidSignature("orientation double cover: signature must be closed");
  if (is_orientable_orbifold(sig))
    throw InvalidSignature("orientation double cover: signature is already orientable");
  OrbifoldSignature out;
  out.underlying_orientable = true;
  out.genus = 1 - chi_underlying(sig);
  for (int m : sig.cone_orders) {
    out.cone_orders.push_back(m);
    out.cone_orders.push_back(m);
  }
  // corner reflectors lift to single cone points of the same order
  for (int n : sig.corner_orders) out.cone_orders.push_back(n);
  return canonicalize(out);
}

OrbifoldSignature canonicalize(const OrbifoldSignature& sig) {
  OrbifoldSignature out = sig;
  std::sort(out.cone_orders.begin(), out.cone_orders.end());
  std::sort(out.corner_orders.begin(), out.corner_orders.end());
  return out;
}

bool signature_less(const OrbifoldSignature& a, const OrbifoldSignature& b) {
  OrbifoldSignature ca = canonicalize(a), cb = canonicalize(b);
  auto key = [](const OrbifoldSignature& s) {
    return std::tie(s.underlying_orientable, s.genus, s.mirror_circles, s.boundary_circles,
                    s.full_boundaries, s.mixed_circles, s.cone_orders, s.corner_orders);
  };
  return key(ca) < key(cb);
}

std::string signature_str(const OrbifoldSignature& sig) {
  std::string s = sig.underlying_orientable ? "orientable" : "non-orientable";
  s += " genus " + std::to_string(sig.genus);
  auto list = [](const std::vector<int>& v) {
    std::string t = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) t += ",";
      t += std::to_string(v[i]);
    }
    return t + ")";
  };
  if (sig.mirror_circles) s += ", mirror circles " + std::to_string(sig.mirror_circles);
  if (sig.boundary_circles) s += ", boundary circles " + std::to_string(sig.boundary_circles);
  if (sig.mixed_circles)
    s += ", mixed circles " + std::to_string(sig.mixed_circles) + " with " +
         std::to_string(sig.full_boundaries) + " full 1-orbifolds";
  if (!sig.cone_orders.empty()) s += ", cones " + list(canonicalize(sig).cone_orders);
  if (!sig.corner_orders.empty()) s += ", corners " + list(canonicalize(sig).corner_orders);
  return s;
}

}  // namespace hitorb
