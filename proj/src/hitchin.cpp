#include "hitorb/hitchin.hpp"

#include <stdexcept>

namespace hitorb {

namespace {

void check_closed_hyperbolic(const OrbifoldSignature& sig, const char* what) {
  check_signature(sig);
  if (!is_closed(sig)) throw InvalidSignature(std::string(what) + ": signature must be closed");
  if (!is_hyperbolic(sig))
    throw InvalidSignature(std::string(what) + ": signature must be hyperbolic");
}

long long dim_closed(const OrbifoldSignature& sig, const SplitGroup& g) {
  int chi_u = chi_underlying(sig);
  long long total = 0;
  for_each_degree(g, [&](int d) {
    total += regular_differential_dim_raw(chi_u, sig.cone_orders, sig.corner_orders, d);
  });
  return total;
}

long long dim_with_boundary_direct(const OrbifoldSignature& sig, const SplitGroup& g) {
  long long total = dim_closed(sig, g);
  long long b = sig.full_boundaries;
  for_each_degree(g, [&](int d) { total += 2 * b * (d / 2); });
  return total;
}

}  // namespace

BaseProfile base_profile(const OrbifoldSignature& sig, const SplitGroup& g) {
  check_closed_hyperbolic(sig, "base_profile");
  check_group(g);
  BaseProfile out;
  for_each_degree(g, [&](int d) {
    long long dim =
        regular_differential_dim_raw(chi_underlying(sig), sig.cone_orders, sig.corner_orders, d);
    out.entries.push_back({d, dim});
    out.total += dim;
  });
  return out;
}

long long dim_hitchin(const OrbifoldSignature& sig, const SplitGroup& g) {
  check_signature(sig);
  check_group(g);
  if (!is_hyperbolic(sig)) throw InvalidSignature("dim_hitchin: signature must be hyperbolic");
  if (is_closed(sig)) return dim_closed(sig, g);
  long long direct = dim_with_boundary_direct(sig, g);
  long long via_mirror = dim_closed(mirror(sig), g);
  if (direct != via_mirror)
    throw std::logic_error("dim_hitchin: boundary formula and mirror route disagree");
  return direct;
}

long long dim_hitchin_alternate(const OrbifoldSignature& sig, const SplitGroup& g) {
  check_signature(sig);
  check_group(g);
  if (!is_hyperbolic(sig))
    throw InvalidSignature("dim_hitchin_alternate: signature must be hyperbolic");
  long long dim_g = group_dim(g);
  long long half_reg = (dim_g - rank(g)) / 2;  // dim G - rank is twice the exponent sum
  long long k = (long long)sig.cone_orders.size();
  long long l = (long long)sig.corner_orders.size() + 2 * sig.full_boundaries;
  long long total = -(long long)chi_underlying(sig) * dim_g + half_reg * (2 * k + l);
  auto correction = [&](int order) {
    long long c = 0;
    for_each_degree(g, [&](int d) { c += (d + order - 1) / order - 1; });
    return c;
  };
  for (int m : sig.cone_orders) total -= 2 * correction(m);
  for (int n : sig.corner_orders) total -= correction(n);
  total -= 2 * (long long)sig.full_boundaries * correction(2);
  return total;
}

DimensionPolynomial dimension_polynomial(const SplitGroup& g) {
  check_group(g);
  DimensionPolynomial p;
  p.a = group_dim(g);
  p.c_k = p.a - rank(g);
  p.c_l = Rational(p.c_k, 2);
  int max_deg = max_exponent(g) + 1;
  for (int m = 2; m < max_deg; ++m) {
    long long c = 0;
    for_each_degree(g, [&](int d) { c += (d + m - 1) / m - 1; });
    if (c != 0) {
      p.corrections_k[m] = 2 * c;
      p.corrections_l[m] = Rational(c);
    }
  }
  long long c2 = p.corrections_k.count(2) ? p.corrections_k.at(2) : 0;
  p.c_b = p.c_k - c2;
  return p;
}

ApproximationBounds approximation_bounds(const OrbifoldSignature& sig, const SplitGroup& g) {
  check_closed_hyperbolic(sig, "approximation_bounds");
  check_group(g);
  Rational low(0), high(0);
  for (int m : sig.cone_orders) {
    low += Rational(m - 1, m);
    high += Rational(m + 1, m);
  }
  for (int n : sig.corner_orders) {
    low += Rational(n - 1, 2 * n);
    high += Rational(n + 1, 2 * n);
  }
  long long rk = rank(g);
  ApproximationBounds out;
  out.lower = -(Rational(rk) * low);
  out.upper = Rational(rk) * high;
  out.defect = -euler_characteristic(sig) * Rational(group_dim(g)) -
               Rational(dim_hitchin(sig, g));
  return out;
}

long long sigma_invariant(int n, int m) {
  if (n < 1 || m < 2) throw std::invalid_argument("sigma_invariant: need n >= 1 and m >= 2");
  long long q = n / m, r = n % m;
  return (n + r) * q + r;
}

long long expected_dim_pgl(const OrbifoldSignature& sig, int n) {
  check_closed_hyperbolic(sig, "expected_dim_pgl");
  if (!is_orientable_orbifold(sig))
    throw InvalidSignature("expected_dim_pgl: signature must be orientable");
  if (n < 2) throw std::invalid_argument("expected_dim_pgl: need n >= 2");
  long long nn = (long long)n * n;
  long long total = (2LL * sig.genus - 2) * (nn - 1);
  for (int m : sig.cone_orders) total += nn - sigma_invariant(n, m);
  return total;
}

}  // namespace hitorb
