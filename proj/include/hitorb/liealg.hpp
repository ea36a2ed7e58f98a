#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hitorb {

// The nine families of adjoint split simple Lie groups handled by this
// library.  Classical families carry a parameter:
//   PGL    : PGL(n,R),        n >= 2
//   PSpPM  : PSp^+-(2m,R),    m >= 1
//   POdd   : PO(m,m+1),       m >= 1
//   POEven : PO^+-(m,m),      m >= 3
// Exceptional families take no parameter.
enum class GroupFamily { PGL, PSpPM, POdd, POEven, G2, F4, E6, E7, E8 };

struct InvalidGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SplitGroup {
  GroupFamily family = GroupFamily::PGL;
  int param = 0;  // n or m for classical families, 0 for exceptional ones

  friend bool operator==(const SplitGroup&, const SplitGroup&) = default;
};

inline bool family_has_param(GroupFamily f) {
  switch (f) {
    case GroupFamily::PGL:
    case GroupFamily::PSpPM:
    case GroupFamily::POdd:
    case GroupFamily::POEven:
      return true;
    default:
      return false;
  }
}

inline void check_group(const SplitGroup& g) {
  switch (g.family) {
    case GroupFamily::PGL:
      if (g.param < 2) throw InvalidGroup("pgl requires n >= 2");
      return;
    case GroupFamily::PSpPM:
      if (g.param < 1) throw InvalidGroup("psp requires m >= 1");
      return;
    case GroupFamily::POdd:
      if (g.param < 1) throw InvalidGroup("podd requires m >= 1");
      return;
    case GroupFamily::POEven:
      if (g.param < 3) throw InvalidGroup("poeven requires m >= 3");
      return;
    default:
      if (g.param != 0) throw InvalidGroup("exceptional groups take no parameter");
      return;
  }
}

inline SplitGroup make_group(GroupFamily f, int param = 0) {
  SplitGroup g{f, param};
  check_group(g);
  return g;
}

inline int rank(const SplitGroup& g) {
  check_group(g);
  switch (g.family) {
    case GroupFamily::PGL: return g.param - 1;
    case GroupFamily::PSpPM:
    case GroupFamily::POdd:
    case GroupFamily::POEven: return g.param;
    case GroupFamily::G2: return 2;
    case GroupFamily::F4: return 4;
    case GroupFamily::E6: return 6;
    case GroupFamily::E7: return 7;
    default: return 8;  // E8
  }
}

inline long long group_dim(const SplitGroup& g) {
  check_group(g);
  long long m = g.param;
  switch (g.family) {
    case GroupFamily::PGL: return m * m - 1;
    case GroupFamily::PSpPM:
    case GroupFamily::POdd: return m * (2 * m + 1);
    case GroupFamily::POEven: return m * (2 * m - 1);
    case GroupFamily::G2: return 14;
    case GroupFamily::F4: return 52;
    case GroupFamily::E6: return 78;
    case GroupFamily::E7: return 133;
    default: return 248;  // E8
  }
}

inline constexpr int kExponentsG2[] = {1, 5};
inline constexpr int kExponentsF4[] = {1, 5, 7, 11};
inline constexpr int kExponentsE6[] = {1, 4, 5, 7, 8, 11};
inline constexpr int kExponentsE7[] = {1, 5, 7, 9, 11, 13, 17};
inline constexpr int kExponentsE8[] = {1, 7, 11, 13, 17, 19, 23, 29};

// Visits the exponents in their canonical slot order without allocating.
template <class F>
inline void for_each_exponent(const SplitGroup& g, F&& f) {
  switch (g.family) {
    case GroupFamily::PGL:
      for (int i = 1; i < g.param; ++i) f(i);
      return;
    case GroupFamily::PSpPM:
    case GroupFamily::POdd:
      for (int i = 1; i <= g.param; ++i) f(2 * i - 1);
      return;
    case GroupFamily::POEven:
      for (int i = 1; i < g.param; ++i) f(2 * i - 1);
      f(g.param - 1);
      return;
    case GroupFamily::G2: for (int e : kExponentsG2) f(e); return;
    case GroupFamily::F4: for (int e : kExponentsF4) f(e); return;
    case GroupFamily::E6: for (int e : kExponentsE6) f(e); return;
    case GroupFamily::E7: for (int e : kExponentsE7) f(e); return;
    default:              for (int e : kExponentsE8) f(e); return;
  }
}

// Visits the invariant degrees d_alpha + 1 in slot order.
template <class F>
inline void for_each_degree(const SplitGroup& g, F&& f) {
  for_each_exponent(g, [&](int e) { f(e + 1); });
}

inline std::vector<int> exponents(const SplitGroup& g) {
  check_group(g);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(rank(g)));
  for_each_exponent(g, [&](int e) { out.push_back(e); });
  return out;
}

inline std::vector<int> degrees(const SplitGroup& g) {
  check_group(g);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(rank(g)));
  for_each_degree(g, [&](int d) { out.push_back(d); });
  return out;
}

// Degrees sorted ascending; use this when comparing degree multisets.
std::vector<int> degree_multiset(const SplitGroup& g);

inline int max_exponent(const SplitGroup& g) {
  int m = 0;
  for_each_exponent(g, [&](int e) { if (e > m) m = e; });
  return m;
}

// Size n of the projective linear group whose principal embedding the group
// factors through; defined for PGL, PSpPM, POdd and G2 only.
int pgl_embedding_size(const SplitGroup& g);

// Text form: "pgl:4", "psp:3", "podd:2", "poeven:5", "g2", ... and back.
SplitGroup parse_group(const std::string& name);
std::string group_name(const SplitGroup& g);

// All valid groups of rank <= max_rank with classical parameter <= max_param,
// in a fixed deterministic order.
std::vector<SplitGroup> groups_up_to_rank(int max_rank, int max_param = 64);

}  // namespace hitorb
