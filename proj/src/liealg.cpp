#include "hitorb/liealg.hpp"

#include <algorithm>
#include <charconv>

namespace hitorb {

std::vector<int> degree_multiset(const SplitGroup& g) {
  std::vector<int> out = degrees(g);
  std::sort(out.begin(), out.end());
  return out;
}

int pgl_embedding_size(const SplitGroup& g) {
  check_group(g);
  switch (g.family) {
    case GroupFamily::PGL: return g.param;
    case GroupFamily::PSpPM: return 2 * g.param;
    case GroupFamily::POdd: return 2 * g.param + 1;
    case GroupFamily::G2: return 7;
    default:
      throw InvalidGroup("no principal linear embedding size recorded for " + group_name(g));
  }
}

namespace {

const struct { const char* name; GroupFamily family; } kFamilyNames[] = {
    {"pgl", GroupFamily::PGL},   {"psp", GroupFamily::PSpPM},
    {"podd", GroupFamily::POdd}, {"poeven", GroupFamily::POEven},
    {"g2", GroupFamily::G2},     {"f4", GroupFamily::F4},
    {"e6", GroupFamily::E6},     {"e7", GroupFamily::E7},
    {"e8", GroupFamily::E8},
};

}  // namespace

SplitGroup parse_group(const std::string& name) {
  std::string base = name;
  int param = 0;
  bool has_param = false;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    std::string rest = name.substr(pos + 1);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), param);
    if (ec != std::errc{} || p != rest.data() + rest.size())
      throw InvalidGroup("bad group parameter in '" + name + "'");
    has_param = true;
  }
  for (const auto& e : kFamilyNames) {
    if (base == e.name) {
      if (family_has_param(e.family) != has_param)
        throw InvalidGroup(family_has_param(e.family)
                               ? "group '" + base + "' needs a parameter, e.g. " + base + ":3"
                               : "group '" + base + "' takes no parameter");
      return make_group(e.family, param);
    }
  }
  throw InvalidGroup("unknown group '" + name +
                     "'; expected pgl:<n>, psp:<m>, podd:<m>, poeven:<m>, g2, f4, e6, e7 or e8");
}

std::string group_name(const SplitGroup& g) {
  check_group(g);
  for (const auto& e : kFamilyNames) {
    if (e.family == g.family) {
      std::string s = e.name;
      if (family_has_param(g.family)) s += ":" + std::to_string(g.param);
      return s;
    }
  }
  throw InvalidGroup("unreachable");
}

std::vector<SplitGroup> groups_up_to_rank(int max_rank, int max_param) {
  std::vector<SplitGroup> out;
  for (int n = 2; n - 1 <= max_rank && n <= max_param; ++n)
    out.push_back(make_group(GroupFamily::PGL, n));
  for (int m = 1; m <= max_rank && m <= max_param; ++m)
    out.push_back(make_group(GroupFamily::PSpPM, m));
  for (int m = 1; m <= max_rank && m <= max_param; ++m)
    out.push_back(make_group(GroupFamily::POdd, m));
  for (int m = 3; m <= max_rank && m <= max_param; ++m)
    out.push_back(make_group(GroupFamily::POEven, m));
  const GroupFamily exceptional[] = {GroupFamily::G2, GroupFamily::F4, GroupFamily::E6,
                                     GroupFamily::E7, GroupFamily::E8};
  for (GroupFamily f : exceptional) {
    SplitGroup g{f, 0};
    if (rank(g) <= max_rank) out.push_back(g);
  }
  return out;
}

}  // namespace hitorb
