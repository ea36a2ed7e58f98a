#include "hitorb/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hitorb/differentials.hpp"
#include "hitorb/rational.hpp"

namespace hitorb {

int shape_chi(const SurfaceShape& s) {
  return (s.underlying_orientable ? 2 - 2 * s.genus : 2 - s.genus) - s.mirror_circles;
}

namespace {

// Property of the order tuples being classified.  It is evaluated on
// representative tuples only and must depend on each order solely through
// min(order, stabilization_order); dimension counts have this property
// because pole_order_bound(d, m) is constant for m >= d.
using OrderProperty = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

// Enumerates the non-decreasing cone/corner order tuples of a fixed shape.
// Orders below the stabilization order D are enumerated one by one; the tail
// "all remaining orders >= D" is handled as a single branch, since the
// property cannot distinguish its members.  Tail branches on which the
// property holds are then carved along the hyperbolicity condition into
// disjoint product families with exact thresholds.
class RegionEnumerator {
 public:
  RegionEnumerator(const SurfaceShape& shape, int k, int l, int D, const OrderProperty& prop,
                   std::vector<SignatureFamily>& out)
      : shape_(shape),
        e_(shape_chi(shape)),
        k_(k),
        n_(k + l),
        D_(std::max(D, 2)),
        prop_(prop),
        out_(out),
        vals_(n_, 2),
        is_class_(n_, 0),
        minv_(n_, 0),
        at_least_(n_, 0),
        assigned_(n_, 0) {}

  void run() { rec(0); }

 private:
  bool is_corner(int i) const { return i >= k_; }
  int chain_start(int i) const { return is_corner(i) ? k_ : 0; }

  // weight * (1 - 1/v): the Euler characteristic deficiency of slot i
  Rational deficiency(int i, int v) const {
    return is_corner(i) ? Rational(v - 1, 2 * v) : Rational(v - 1, v);
  }
  Rational full_weight(int i) const { return is_corner(i) ? Rational(1, 2) : Rational(1); }

  void rec(int i) {
    if (i == n_) {
      leaf();
      return;
    }
    int cs = chain_start(i);
    bool prev_class = i > cs && is_class_[i - 1];
    int lo = i > cs ? vals_[i - 1] : 2;
    if (!prev_class) {
      for (int v = lo; v < D_; ++v) {
        vals_[i] = v;
        rec(i + 1);
      }
    }
    vals_[i] = std::max(lo, D_);
    is_class_[i] = 1;
    rec(i + 1);
    is_class_[i] = 0;
  }

  void leaf() {
    std::vector<int> cones(vals_.begin(), vals_.begin() + k_);
    std::vector<int> corners(vals_.begin() + k_, vals_.end());
    bool any_class = std::find(is_class_.begin(), is_class_.end(), 1) != is_class_.end();
    if (!any_class) {
      if (chi_exact().is_negative() && prop_(cones, corners)) emit_family();
      return;
    }
    // chi increases strictly in every order, so if even the all-orders-large
    // limit is non-negative the whole tail region is non-hyperbolic
    if (!chi_open_limit().is_negative()) return;
    if (!prop_(cones, corners)) return;
    class_slots_.clear();
    for (int i = 0; i < n_; ++i) {
      minv_[i] = vals_[i];
      at_least_[i] = 0;
      assigned_[i] = !is_class_[i];
      if (is_class_[i]) class_slots_.push_back(i);
    }
    at_least_count_ = 0;
    carve(0);
  }

  // chi with every slot at its current exact value
  Rational chi_exact() const {
    Rational chi(e_);
    for (int i = 0; i < n_; ++i) chi -= deficiency(i, vals_[i]);
    return chi;
  }

  // chi with finite slots at value and tail slots sent to infinity
  Rational chi_open_limit() const {
    Rational chi(e_);
    for (int i = 0; i < n_; ++i)
      chi -= is_class_[i] ? full_weight(i) : deficiency(i, vals_[i]);
    return chi;
  }

  // Splits the tail region (property already certified) along hyperbolicity.
  // Slots are resolved in order; each either takes a concrete value below the
  // threshold from which the remaining tail is uniformly hyperbolic, or
  // becomes an "at least" slot at that threshold.
  void carve(size_t j) {
    if (j == class_slots_.size()) {
      if (chi_min_assigned().is_negative()) emit_family();
      return;
    }
    int s = class_slots_[j];
    int lo = std::max(s > chain_start(s) ? minv_[s - 1] : 2, D_);
    // With every resolved slot at an exact value, the region is empty of
    // hyperbolic members when chi stays non-negative even in the limit.
    // (Once a slot is "at least", its own certificate already implies the
    // instantiations below are hyperbolic.)
    if (at_least_count_ == 0 && !chi_unassigned_limit().is_negative()) return;
    int tstar = lo;
    while (!chi_tail_min(s, tstar).is_negative()) {
      if (++tstar > 1000000) throw std::logic_error("classification: runaway threshold search");
    }
    assigned_[s] = 1;
    for (int v = lo; v < tstar; ++v) {
      minv_[s] = v;
      at_least_[s] = 0;
      carve(j + 1);
    }
    minv_[s] = tstar;
    at_least_[s] = 1;
    ++at_least_count_;
    carve(j + 1);
    --at_least_count_;
    at_least_[s] = 0;
    assigned_[s] = 0;
  }

  // chi with resolved slots at their minimal values and all others at infinity
  Rational chi_unassigned_limit() const {
    Rational chi(e_);
    for (int i = 0; i < n_; ++i)
      chi -= assigned_[i] ? deficiency(i, minv_[i]) : full_weight(i);
    return chi;
  }

  // Minimal instantiation of "slot s and its unresolved chain successors at
  // v, unresolved slots of the other chain at their own lower bound".
  Rational chi_tail_min(int s, int v) const {
    Rational chi(e_);
    int other_lo = -1;
    for (int i = 0; i < n_; ++i) {
      int u;
      if (assigned_[i])
        u = minv_[i];
      else if (chain_start(i) == chain_start(s))
        u = v;
      else {
        if (other_lo < 0)
          other_lo = std::max(i > chain_start(i) && assigned_[i - 1] ? minv_[i - 1] : 2, D_);
        u = other_lo;
      }
      chi -= deficiency(i, u);
    }
    return chi;
  }

  Rational chi_min_assigned() const {
    Rational chi(e_);
    for (int i = 0; i < n_; ++i) chi -= deficiency(i, minv_[i]);
    return chi;
  }

  void emit_family() {
    SignatureFamily fam;
    fam.shape = shape_;
    for (int i = 0; i < n_; ++i) {
      OrderSlot slot;
      if (is_class_[i]) {
        slot.value = minv_[i];
        slot.at_least = at_least_[i] != 0;
      } else {
        slot.value = vals_[i];
      }
      (is_corner(i) ? fam.corners : fam.cones).push_back(slot);
    }
    out_.push_back(fam);
  }

  SurfaceShape shape_;
  int e_;
  int k_;
  int n_;
  int D_;
  const OrderProperty& prop_;
  std::vector<SignatureFamily>& out_;
  std::vector<int> vals_;
  std::vector<char> is_class_;
  std::vector<int> minv_;
  std::vector<char> at_least_;
  std::vector<char> assigned_;
  std::vector<int> class_slots_;
  int at_least_count_ = 0;
};

OrbifoldSignature shape_base_signature(const SurfaceShape& sh) {
  OrbifoldSignature sig;
  sig.underlying_orientable = sh.underlying_orientable;
  sig.genus = sh.genus;
  sig.mirror_circles = sh.mirror_circles;
  return sig;
}

std::tuple<bool, int, int> shape_key(const SurfaceShape& s) {
  return {!s.underlying_orientable, s.genus, s.mirror_circles};
}

bool family_less(const SignatureFamily& a, const SignatureFamily& b) {
  auto key = [](const SignatureFamily& f) {
    std::vector<std::pair<int, int>> cones, corners;
    for (auto& s : f.cones) cones.emplace_back(s.value, s.at_least);
    for (auto& s : f.corners) corners.emplace_back(s.value, s.at_least);
    return std::make_tuple(shape_key(f.shape), cones.size(), corners.size(), cones, corners);
  };
  return key(a) < key(b);
}

struct SignatureLess {
  bool operator()(const OrbifoldSignature& a, const OrbifoldSignature& b) const {
    return signature_less(a, b);
  }
};

struct SearchSpec {
  SurfaceShape shape;
  int k = 0;
  int l = 0;
};

FamilySet run_search(const std::vector<SearchSpec>& specs,
                     const std::vector<SurfaceShape>& claimed_shapes, int D,
                     const std::function<OrderProperty(const SurfaceShape&)>& make_prop) {
  FamilySet fs;
  fs.stabilization_order = std::max(D, 2);
  fs.shapes_searched = claimed_shapes;
  for (const auto& sp : specs) {
    fs.max_cones = std::max(fs.max_cones, sp.k);
    fs.max_corners = std::max(fs.max_corners, sp.l);
    OrderProperty prop = make_prop(sp.shape);
    RegionEnumerator(sp.shape, sp.k, sp.l, D, prop, fs.families).run();
  }
  std::sort(fs.families.begin(), fs.families.end(), family_less);
  return fs;
}

// Largest k for which a sphere with k cone points can have vanishing
// degree-d differentials: 2(2d-1) >= 2k*floor(d/2).
int vanishing_cone_bound(int d) { return (2 * d - 1) / (d / 2); }

}  // namespace

OrbifoldSignature family_min_signature(const SignatureFamily& fam) {
  OrbifoldSignature sig = shape_base_signature(fam.shape);
  for (auto& s : fam.cones) sig.cone_orders.push_back(s.value);
  for (auto& s : fam.corners) sig.corner_orders.push_back(s.value);
  return canonicalize(sig);
}

std::string family_str(const SignatureFamily& fam) {
  std::string s = fam.shape.underlying_orientable ? "orientable" : "non-orientable";
  s += " genus " + std::to_string(fam.shape.genus);
  if (fam.shape.mirror_circles)
    s += ", mirror circles " + std::to_string(fam.shape.mirror_circles);
  auto list = [](const std::vector<OrderSlot>& slots) {
    std::string t = "(";
    for (size_t i = 0; i < slots.size(); ++i) {
      if (i) t += ",";
      if (slots[i].at_least) t += ">=";
      t += std::to_string(slots[i].value);
    }
    return t + ")";
  };
  if (!fam.cones.empty()) s += ", cones " + list(fam.cones);
  if (!fam.corners.empty()) s += ", corners " + list(fam.corners);
  return s;
}

std::vector<OrbifoldSignature> expand_family(const SignatureFamily& fam, int horizon) {
  auto check_slots = [&](const std::vector<OrderSlot>& slots) {
    for (auto& s : slots)
      if (s.value > horizon)
        throw std::invalid_argument("expand_family: horizon " + std::to_string(horizon) +
                                    " is below the slot bound " + std::to_string(s.value));
  };
  check_slots(fam.cones);
  check_slots(fam.corners);
  std::set<OrbifoldSignature, SignatureLess> out;
  OrbifoldSignature sig = shape_base_signature(fam.shape);
  sig.cone_orders.resize(fam.cones.size());
  sig.corner_orders.resize(fam.corners.size());
  size_t n = fam.cones.size() + fam.corners.size();
  std::function<void(size_t)> fill = [&](size_t i) {
    if (i == n) {
      out.insert(canonicalize(sig));
      return;
    }
    bool corner = i >= fam.cones.size();
    const OrderSlot& slot = corner ? fam.corners[i - fam.cones.size()] : fam.cones[i];
    int& target = corner ? sig.corner_orders[i - fam.cones.size()] : sig.cone_orders[i];
    int hi = slot.at_least ? horizon : slot.value;
    for (int v = slot.value; v <= hi; ++v) {
      target = v;
      fill(i + 1);
    }
  };
  fill(0);
  return {out.begin(), out.end()};
}

std::vector<OrbifoldSignature> expand(const FamilySet& set, int horizon) {
  std::set<OrbifoldSignature, SignatureLess> out;
  for (const auto& fam : set.families)
    for (auto& sig : expand_family(fam, horizon))
      if (!out.insert(sig).second)
        throw std::logic_error("expand: families overlap at " + signature_str(sig));
  return {out.begin(), out.end()};
}

std::vector<OrbifoldSignature> enumerate_closed_signatures(const EnumBounds& bounds) {
  std::vector<OrbifoldSignature> out;
  auto tuples = [](int count, int max_order) {
    std::vector<std::vector<int>> result;
    std::vector<int> cur(count, 2);
    std::function<void(int, int)> rec = [&](int i, int lo) {
      if (i == count) {
        result.push_back(cur);
        return;
      }
      for (int v = lo; v <= max_order; ++v) {
        cur[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 2);
    return result;
  };
  for (int ori = 1; ori >= (bounds.orientable_only ? 1 : 0); --ori) {
    for (int g = ori ? 0 : 1; g <= bounds.max_genus; ++g) {
      int mc_max = bounds.orientable_only ? 0 : bounds.max_mirror_circles;
      for (int mc = 0; mc <= mc_max; ++mc) {
        for (int k = 0; k <= bounds.max_cones; ++k) {
          for (int l = 0; l <= (mc > 0 ? bounds.max_corners : 0); ++l) {
            for (auto& cones : tuples(k, bounds.max_order)) {
              for (auto& corners : tuples(l, bounds.max_order)) {
                OrbifoldSignature sig;
                sig.underlying_orientable = ori != 0;
                sig.genus = g;
                sig.mirror_circles = mc;
                sig.cone_orders = cones;
                sig.corner_orders = corners;
                out.push_back(std::move(sig));
              }
            }
          }
        }
      }
    }
  }
  return out;
}

FamilySet classify_target_dim(const SplitGroup& g, long long target, bool orientable_only) {
  check_group(g);
  if (target < 0)
    throw std::invalid_argument("classify_target_dim: target must be non-negative");
  long long dim_g = group_dim(g);
  int D = max_exponent(g) + 1;
  // smallest contribution a cone point can make to the dimension (order 2)
  long long cone_min = 0;
  for_each_degree(g, [&](int d) { cone_min += 2 * (d / 2); });
  long long corner_min = cone_min / 2;
  // chi(|Y|) = e below e_min forces dim > target with no singular points at all
  int e_min = static_cast<int>(-(target / dim_g));
  std::vector<SearchSpec> specs;
  std::vector<SurfaceShape> shapes;
  auto add_shape = [&](const SurfaceShape& sh, int e) {
    shapes.push_back(sh);
    long long budget = target + static_cast<long long>(e) * dim_g;
    if (budget < 0) return;
    for (int k = 0; k * cone_min <= budget; ++k) {
      long long rem = budget - k * cone_min;
      int lmax = (!orientable_only && sh.mirror_circles > 0)
                     ? static_cast<int>(rem / corner_min)
                     : 0;
      for (int l = 0; l <= lmax; ++l) specs.push_back({sh, k, l});
    }
  };
  for (int e = e_min; e <= 2; ++e) {
    for (int genus = 0; 2 - 2 * genus - e >= 0; ++genus) {
      int mc = 2 - 2 * genus - e;
      if (orientable_only && mc != 0) continue;
      add_shape({true, genus, mc}, e);
    }
    if (!orientable_only) {
      for (int genus = 1; 2 - genus - e >= 0; ++genus)
        add_shape({false, genus, 2 - genus - e}, e);
    }
  }
  auto make_prop = [&](const SurfaceShape& sh) -> OrderProperty {
    int e = shape_chi(sh);
    SplitGroup grp = g;
    long long t = target;
    return [e, grp, dim_g, t](const std::vector<int>& cones, const std::vector<int>& corners) {
      long long dim = -static_cast<long long>(e) * dim_g;
      for_each_degree(grp, [&](int d) {
        for (int m : cones) dim += 2 * pole_order_bound(d, m);
        for (int n : corners) dim += pole_order_bound(d, n);
      });
      return dim == t;
    };
  };
  FamilySet fs = run_search(specs, shapes, D, make_prop);
  fs.bound_note = "chi(|Y|) >= " + std::to_string(e_min) +
                  "; each cone contributes >= " + std::to_string(cone_min) +
                  " and each corner >= " + std::to_string(corner_min) +
                  " to the dimension, bounding the counts per shape";
  return fs;
}

FamilySet classify_vanishing_differentials(int d) {
  if (d < 2)
    throw std::invalid_argument("classify_vanishing_differentials: degree must be at least 2");
  // complex dim >= genus and hyperbolicity force a sphere with >= 3 cones,
  // and 0 = dim >= 1 - 2d + k*floor(d/2) bounds the number of cones
  int kmax = vanishing_cone_bound(d);
  SurfaceShape sphere{true, 0, 0};
  std::vector<SearchSpec> specs;
  for (int k = 3; k <= kmax; ++k) specs.push_back({sphere, k, 0});
  auto make_prop = [&](const SurfaceShape&) -> OrderProperty {
    return [d](const std::vector<int>& cones, const std::vector<int>&) {
      long long dim = -2LL * (2 * d - 1);
      for (int m : cones) dim += 2 * pole_order_bound(d, m);
      return dim == 0;
    };
  };
  FamilySet fs = run_search(specs, {sphere}, d, make_prop);
  fs.bound_note = "orientable with a vanishing differential forces genus 0; cone count <= " +
                  std::to_string(kmax);
  return fs;
}

std::vector<DegreeFamilies> classify_single_differential(const SplitGroup& g,
                                                         bool orientable_only) {
  check_group(g);
  if (rank(g) < 2)
    throw std::invalid_argument("classify_single_differential: group must have rank >= 2");
  std::vector<int> degs = degrees(g);
  int D = max_exponent(g) + 1;
  std::vector<DegreeFamilies> out;
  for (size_t slot = 0; slot < degs.size(); ++slot) {
    // every other degree must vanish; the strictest of their cone bounds
    // limits the cone count (of the orientation double cover, in the
    // non-orientable search)
    int K = 1000;
    for (size_t i = 0; i < degs.size(); ++i)
      if (i != slot) K = std::min(K, vanishing_cone_bound(degs[i]));
    std::vector<SearchSpec> specs;
    std::vector<SurfaceShape> shapes;
    SurfaceShape sphere{true, 0, 0};
    shapes.push_back(sphere);
    for (int k = 3; k <= K; ++k) specs.push_back({sphere, k, 0});
    if (!orientable_only) {
      // a vanishing slot also leaves chi(|Y|) = 1 possible: a disk with
      // mirror boundary or a projective plane, with 2k + l cone points
      // upstairs in the orientation double cover
      SurfaceShape disk{true, 0, 1};
      SurfaceShape proj{false, 1, 0};
      shapes.push_back(disk);
      shapes.push_back(proj);
      for (int k = 0; 2 * k <= K; ++k) {
        for (int l = 0; 2 * k + l <= K; ++l) specs.push_back({disk, k, l});
        specs.push_back({proj, k, 0});
      }
    }
    auto make_prop = [&](const SurfaceShape& sh) -> OrderProperty {
      int e = shape_chi(sh);
      std::vector<int> other;
      for (size_t i = 0; i < degs.size(); ++i)
        if (i != slot) other.push_back(degs[i]);
      int mine = degs[slot];
      return [e, other, mine](const std::vector<int>& cones, const std::vector<int>& corners) {
        for (int d : other)
          if (regular_differential_dim_raw(e, cones, corners, d) != 0) return false;
        return regular_differential_dim_raw(e, cones, corners, mine) > 0;
      };
    };
    FamilySet fs = run_search(specs, shapes, D, make_prop);
    fs.bound_note = "vanishing slots force chi(|Y|) >= 1 and at most " + std::to_string(K) +
                    " cone points on the orientation double cover";
    out.push_back({degs[slot], std::move(fs)});
  }
  return out;
}

CyclicClassification classify_cyclic(const SplitGroup& g) {
  int n = pgl_embedding_size(g);  // also validates the family
  if (rank(g) < 2)
    throw std::invalid_argument("classify_cyclic: group must have rank >= 2");
  CyclicClassification out;
  out.n = n;
  out.cyclic.degree = n;
  out.cyclic.families.bound_note = "no invariant of degree " + std::to_string(n);
  out.almost_cyclic.degree = n - 1;
  out.almost_cyclic.families.bound_note = "no invariant of degree " + std::to_string(n - 1);
  for (auto& df : classify_single_differential(g, true)) {
    if (df.degree == n)
      out.cyclic = df;
    else if (df.degree == n - 1)
      out.almost_cyclic = df;
  }
  return out;
}

FullSubgroupResult classify_zariski(const SplitGroup& h, const SplitGroup& g) {
  check_group(h);
  check_group(g);
  bool ok = false;
  if (rank(h) == 1 && rank(g) >= 2)
    ok = true;
  else if (h.family == GroupFamily::PSpPM && g.family == GroupFamily::PGL &&
           g.param == 2 * h.param)
    ok = true;
  else if (h.family == GroupFamily::POdd && g.family == GroupFamily::PGL &&
           g.param == 2 * h.param + 1)
    ok = true;
  else if (h.family == GroupFamily::POdd && g.family == GroupFamily::POEven &&
           g.param == h.param + 1)
    ok = true;
  else if (h.family == GroupFamily::G2 && g.family == GroupFamily::PGL && g.param == 7)
    ok = true;
  else if (h.family == GroupFamily::G2 && g.family == GroupFamily::POdd && g.param == 3)
    ok = true;
  if (!ok)
    throw InvalidGroup("classify_zariski: no standard inclusion of " + group_name(h) + " in " +
                       group_name(g) + " is supported");
  FullSubgroupResult out;
  out.subgroup = h;
  out.group = g;
  // degrees of g not matched by degrees of h (multiset difference)
  std::vector<int> dg = degree_multiset(g), dh = degree_multiset(h);
  size_t i = 0;
  for (int d : dg) {
    if (i < dh.size() && dh[i] == d)
      ++i;
    else
      out.extra_degrees.push_back(d);
  }
  int D = 2, K = 1000;
  for (int d : out.extra_degrees) {
    D = std::max(D, d);
    K = std::min(K, vanishing_cone_bound(d));
  }
  SurfaceShape sphere{true, 0, 0};
  std::vector<SearchSpec> specs;
  for (int k = 3; k <= K; ++k) specs.push_back({sphere, k, 0});
  auto extras = out.extra_degrees;
  auto make_prop = [&](const SurfaceShape&) -> OrderProperty {
    return [extras](const std::vector<int>& cones, const std::vector<int>&) {
      for (int d : extras)
        if (regular_differential_dim_raw(2, cones, {}, d) != 0) return false;
      return true;
    };
  };
  out.families = run_search(specs, {sphere}, D, make_prop);
  out.families.bound_note =
      "all degrees beyond the subgroup must vanish: genus 0 with at most " + std::to_string(K) +
      " cone points";
  return out;
}

}  // namespace hitorb
