// Command-line front end: Euler characteristics, Hitchin component
// dimensions, differential space profiles and bounded classifications for
// compact 2-orbifolds and the split adjoint simple Lie group families.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hitorb/classify.hpp"
#include "hitorb/hitchin.hpp"
#include "hitorb/json_io.hpp"

using nlohmann::json;
using namespace hitorb;

namespace {

struct SignatureOpts {
  OrbifoldSignature sig;
  bool disk = false;
  bool sphere = false;
  bool nonorientable = false;
};

void add_signature_options(CLI::App* cmd, SignatureOpts& o) {
  cmd->add_option("--genus", o.sig.genus, "handles (orientable) or cross-caps (non-orientable)");
  cmd->add_flag("--nonorientable", o.nonorientable, "non-orientable underlying surface");
  cmd->add_option("--mirror-circles", o.sig.mirror_circles, "mirror boundary circles");
  cmd->add_option("--boundary-circles", o.sig.boundary_circles, "full boundary circles");
  cmd->add_option("--full-boundaries", o.sig.full_boundaries,
                  "boundary components that are full 1-orbifolds (arcs on mixed circles)");
  cmd->add_option("--mixed-circles", o.sig.mixed_circles,
                  "circles alternating mirror and boundary arcs");
  cmd->add_option("--cones", o.sig.cone_orders, "cone point orders (each >= 2)")
      ->delimiter(',');
  cmd->add_option("--corners", o.sig.corner_orders, "corner reflector orders (each >= 2)")
      ->delimiter(',');
  cmd->add_flag("--disk", o.disk, "shorthand: orientable genus 0 with one mirror circle");
  cmd->add_flag("--sphere", o.sphere, "shorthand: orientable genus 0, no mirrors");
}

OrbifoldSignature build_signature(const SignatureOpts& o) {
  if (o.disk && o.sphere) throw InvalidSignature("--disk and --sphere are mutually exclusive");
  OrbifoldSignature sig = o.sig;
  sig.underlying_orientable = !o.nonorientable;
  if (o.disk) {
    if (o.nonorientable) throw InvalidSignature("--disk is orientable");
    sig.underlying_orientable = true;
    sig.genus = 0;
    sig.mirror_circles = std::max(1, sig.mirror_circles);
  }
  if (o.sphere) {
    if (o.nonorientable) throw InvalidSignature("--sphere is orientable");
    sig.underlying_orientable = true;
    sig.genus = 0;
  }
  auto errors = validate(sig);
  if (!errors.empty()) throw InvalidSignature(errors.front());
  return sig;
}

int default_horizon() {
  if (const char* env = std::getenv("HITCHIN_MAX_HORIZON")) {
    int h = std::atoi(env);
    if (h >= 2) return h;
    throw std::invalid_argument("HITCHIN_MAX_HORIZON must be an integer >= 2");
  }
  return 60;
}

void emit(const std::string& format, const json& request, const json& result,
          const json& routes, const std::string& text) {
  if (format == "json") {
    json out{{"request", request},
             {"result", result},
             {"provenance", json{{"formula_routes_checked", routes}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string slots_str(const std::vector<OrderSlot>& slots, const char* sep = ",") {
  std::string t;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) t += sep;
    if (slots[i].at_least) t += ">=";
    t += std::to_string(slots[i].value);
  }
  return t;
}

std::string family_csv_row(const SignatureFamily& fam) {
  std::string row = fam.shape.underlying_orientable ? "orientable" : "nonorientable";
  row += "," + std::to_string(fam.shape.genus) + "," + std::to_string(fam.shape.mirror_circles);
  row += ",(" + slots_str(fam.cones, " ") + "),(" + slots_str(fam.corners, " ") + ")";
  return row;
}

std::string family_set_text(const FamilySet& fs) {
  std::string out;
  if (fs.families.empty()) out += "  (none)\n";
  for (auto& fam : fs.families) out += "  " + family_str(fam) + "\n";
  return out;
}

// ---- classify ----------------------------------------------------------

int run_classify(const std::string& mode, const std::string& group_name_opt,
                 const std::string& subgroup_name, long long target, int degree,
                 bool orientable_only, int horizon, bool do_expand, const std::string& format) {
  json request{{"command", "classify"}, {"mode", mode},   {"orientable_only", orientable_only},
               {"horizon", horizon},    {"format", format}};
  json result;
  std::string text;
  auto expansion_text = [&](const FamilySet& fs) {
    std::string t;
    if (!do_expand) return t;
    for (auto& sig : expand(fs, horizon)) t += "    " + signature_str(sig) + "\n";
    return t;
  };
  auto attach_expansion = [&](json& j, const FamilySet& fs) {
    if (!do_expand) return;
    json members = json::array();
    for (auto& sig : expand(fs, horizon)) members.push_back(to_json(sig));
    j["members_up_to_horizon"] = members;
  };
  if (mode == "zero-dim" || mode == "target-dim") {
    SplitGroup g = parse_group(group_name_opt);
    long long t = mode == "zero-dim" ? 0 : target;
    request["group"] = hitorb::group_name(g);
    request["target"] = t;
    FamilySet fs = classify_target_dim(g, t, orientable_only);
    result = to_json(fs);
    attach_expansion(result, fs);
    text = "signatures with dim Hit = " + std::to_string(t) + " for " + hitorb::group_name(g) +
           ":\n" + family_set_text(fs) + expansion_text(fs);
    if (format == "csv") {
      text = "orientable,genus,mirror_circles,cones,corners\n";
      for (auto& fam : fs.families) text += family_csv_row(fam) + "\n";
    }
  } else if (mode == "vanishing") {
    request["degree"] = degree;
    FamilySet fs = classify_vanishing_differentials(degree);
    result = to_json(fs);
    attach_expansion(result, fs);
    text = "orientable signatures with no regular degree-" + std::to_string(degree) +
           " differential:\n" + family_set_text(fs) + expansion_text(fs);
    if (format == "csv") {
      text = "orientable,genus,mirror_circles,cones,corners\n";
      for (auto& fam : fs.families) text += family_csv_row(fam) + "\n";
    }
  } else if (mode == "single") {
    SplitGroup g = parse_group(group_name_opt);
    request["group"] = hitorb::group_name(g);
    auto per_degree = classify_single_differential(g, orientable_only);
    result = json::array();
    text = "single non-vanishing differential for " + hitorb::group_name(g) + ":\n";
    for (auto& df : per_degree) {
      json entry{{"degree", df.degree}, {"families", to_json(df.families)}};
      attach_expansion(entry["families"], df.families);
      result.push_back(entry);
      text += " degree " + std::to_string(df.degree) + ":\n" + family_set_text(df.families) +
              expansion_text(df.families);
    }
  } else if (mode == "cyclic") {
    SplitGroup g = parse_group(group_name_opt);
    request["group"] = hitorb::group_name(g);
    CyclicClassification cc = classify_cyclic(g);
    result = json{{"n", cc.n},
                  {"cyclic", json{{"degree", cc.cyclic.degree},
                                  {"families", to_json(cc.cyclic.families)}}},
                  {"almost_cyclic", json{{"degree", cc.almost_cyclic.degree},
                                         {"families", to_json(cc.almost_cyclic.families)}}}};
    attach_expansion(result["cyclic"]["families"], cc.cyclic.families);
    attach_expansion(result["almost_cyclic"]["families"], cc.almost_cyclic.families);
    text = "principal embedding size n = " + std::to_string(cc.n) + "\n";
    text += "cyclic (degree " + std::to_string(cc.cyclic.degree) + "):\n" +
            family_set_text(cc.cyclic.families) + expansion_text(cc.cyclic.families);
    text += "(n-1)-cyclic (degree " + std::to_string(cc.almost_cyclic.degree) + "):\n" +
            family_set_text(cc.almost_cyclic.families) + expansion_text(cc.almost_cyclic.families);
  } else if (mode == "zariski") {
    SplitGroup h = parse_group(subgroup_name);
    SplitGroup g = parse_group(group_name_opt);
    request["subgroup"] = hitorb::group_name(h);
    request["group"] = hitorb::group_name(g);
    FullSubgroupResult res = classify_zariski(h, g);
    result = json{{"subgroup", hitorb::group_name(res.subgroup)},
                  {"group", hitorb::group_name(res.group)},
                  {"extra_degrees", res.extra_degrees},
                  {"families", to_json(res.families)}};
    attach_expansion(result["families"], res.families);
    text = "signatures where " + hitorb::group_name(h) + " fills the Hitchin component of " +
           hitorb::group_name(g) + ":\n" + family_set_text(res.families) +
           expansion_text(res.families);
  } else {
    throw std::invalid_argument("unknown classify mode '" + mode + "'");
  }
  emit(format, request, result, json::array({"bounded_enumeration"}), text);
  return 0;
}

// ---- table -------------------------------------------------------------

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

int run_table(int number, const std::string& format) {
  json request{{"command", "table"}, {"number", number}, {"format", format}};
  std::string text;
  json result = json::array();
  if (number == 1) {
    text = "group,dim,rank,exponents\n";
    const char* rows[] = {"pgl:n,n^2-1,n-1,1 2 ... n-1",
                          "psp:m,m(2m+1),m,1 3 ... 2m-1",
                          "podd:m,m(2m+1),m,1 3 ... 2m-1",
                          "poeven:m,m(2m-1),m,1 3 ... 2m-3 m-1",
                          "g2,14,2,1 5",
                          "f4,52,4,1 5 7 11",
                          "e6,78,6,1 4 5 7 8 11",
                          "e7,133,7,1 5 7 9 11 13 17",
                          "e8,248,8,1 7 11 13 17 19 23 29"};
    for (const char* r : rows) {
      text += std::string(r) + "\n";
      result.push_back(r);
    }
  } else if (number == 2) {
    std::vector<SplitGroup> gs;
    for (int n = 2; n <= 7; ++n) gs.push_back(make_group(GroupFamily::PGL, n));
    for (int m = 2; m <= 6; ++m) gs.push_back(make_group(GroupFamily::PSpPM, m));
    for (int m = 4; m <= 6; ++m) gs.push_back(make_group(GroupFamily::POEven, m));
    gs.push_back(make_group(GroupFamily::G2));
    gs.push_back(make_group(GroupFamily::F4));
    gs.push_back(make_group(GroupFamily::E6));
    text = "group,a,c_k,c_l,c_b,corrections_k,corrections_l\n";
    for (auto& g : gs) {
      DimensionPolynomial p = dimension_polynomial(g);
      std::string ck, cl;
      for (auto& [m, c] : p.corrections_k) ck += (ck.empty() ? "" : " ") + std::to_string(m) + ":" + std::to_string(c);
      for (auto& [n, c] : p.corrections_l) cl += (cl.empty() ? "" : " ") + std::to_string(n) + ":" + c.str();
      std::string row = group_name(g) + "," + std::to_string(p.a) + "," + std::to_string(p.c_k) +
                        "," + p.c_l.str() + "," + std::to_string(p.c_b) + "," + ck + "," + cl;
      text += row + "\n";
      result.push_back(json{{"group", group_name(g)}, {"polynomial", to_json(p)}});
    }
  } else if (number == 3) {
    std::vector<SplitGroup> gs;
    for (int n = 3; n <= 7; ++n) gs.push_back(make_group(GroupFamily::PGL, n));
    gs.push_back(make_group(GroupFamily::PSpPM, 2));
    gs.push_back(make_group(GroupFamily::PSpPM, 3));
    gs.push_back(make_group(GroupFamily::G2));
    text = "group,degree,kind,family\n";
    for (auto& g : gs) {
      CyclicClassification cc = classify_cyclic(g);
      for (auto& fam : cc.cyclic.families.families)
        text += group_name(g) + "," + std::to_string(cc.cyclic.degree) + ",cyclic,(" +
                slots_str(fam.cones, " ") + ")\n";
      for (auto& fam : cc.almost_cyclic.families.families)
        text += group_name(g) + "," + std::to_string(cc.almost_cyclic.degree) + ",(n-1)-cyclic,(" +
                slots_str(fam.cones, " ") + ")\n";
      result.push_back(json{{"group", group_name(g)},
                            {"n", cc.n},
                            {"cyclic", to_json(cc.cyclic.families)},
                            {"almost_cyclic", to_json(cc.almost_cyclic.families)}});
    }
  } else if (number == 4) {
    text = "degree,k,family\n";
    for (int d = 2; d <= 43; ++d) {
      FamilySet fs = classify_vanishing_differentials(d);
      for (auto& fam : fs.families)
        text += std::to_string(d) + "," + std::to_string(fam.cones.size()) + ",(" +
                slots_str(fam.cones, " ") + ")\n";
      result.push_back(json{{"degree", d}, {"families", to_json(fs)}});
    }
  } else if (number == 5) {
    std::vector<SplitGroup> gs;
    for (int n = 3; n <= 11; ++n) gs.push_back(make_group(GroupFamily::PGL, n));
    for (int m = 2; m <= 5; ++m) gs.push_back(make_group(GroupFamily::PSpPM, m));
    gs.push_back(make_group(GroupFamily::POEven, 4));
    gs.push_back(make_group(GroupFamily::POEven, 5));
    gs.push_back(make_group(GroupFamily::G2));
    text = "group,degree,family\n";
    for (auto& g : gs) {
      json entry{{"group", group_name(g)}, {"degrees", json::array()}};
      for (auto& df : classify_single_differential(g, true)) {
        for (auto& fam : df.families.families)
          text += group_name(g) + "," + std::to_string(df.degree) + ",(" +
                  slots_str(fam.cones, " ") + ")\n";
        entry["degrees"].push_back(
            json{{"degree", df.degree}, {"families", to_json(df.families)}});
      }
      result.push_back(entry);
    }
  } else {
    throw std::invalid_argument("table number must be between 1 and 5");
  }
  emit(format == "csv" ? "text" : format, request, result, json::array({"bounded_enumeration"}),
       text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics, Hitchin component dimensions and bounded"
               " classifications for compact 2-orbifolds"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string group_spec, subgroup_spec;
  long long target = 0;
  int degree = 2, table_number = 1;
  bool orientable_only = false, do_expand = false;
  std::string mode;
  int horizon = 0;

  SignatureOpts chi_sig, dim_sig, base_sig, bounds_sig, expected_sig;

  auto* chi_cmd = app.add_subcommand("chi", "orbifold Euler characteristic");
  add_signature_options(chi_cmd, chi_sig);
  chi_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* dim_cmd = app.add_subcommand("dim", "dimension of the Hitchin component");
  add_signature_options(dim_cmd, dim_sig);
  dim_cmd->add_option("--group", group_spec, "group, e.g. pgl:4 or g2")->required();
  dim_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* base_cmd = app.add_subcommand("base", "per-degree differential space dimensions");
  add_signature_options(base_cmd, base_sig);
  base_cmd->add_option("--group", group_spec)->required();
  base_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* bounds_cmd = app.add_subcommand("bounds", "bounds on the linear-growth defect");
  add_signature_options(bounds_cmd, bounds_sig);
  bounds_cmd->add_option("--group", group_spec)->required();
  bounds_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* expected_cmd =
      app.add_subcommand("expected", "independent projective-linear dimension count");
  add_signature_options(expected_cmd, expected_sig);
  expected_cmd->add_option("--group", group_spec, "pgl:<n> only")->required();
  expected_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "bounded classification runs");
  classify_cmd
      ->add_option("--mode", mode, "zero-dim, target-dim, vanishing, single, cyclic or zariski")
      ->required()
      ->check(CLI::IsMember({"zero-dim", "target-dim", "vanishing", "single", "cyclic", "zariski"}));
  classify_cmd->add_option("--group", group_spec);
  classify_cmd->add_option("--subgroup", subgroup_spec);
  classify_cmd->add_option("--target", target, "dimension target for target-dim");
  classify_cmd->add_option("--degree", degree, "differential degree for vanishing");
  classify_cmd->add_flag("--orientable-only", orientable_only);
  classify_cmd->add_option("--horizon", horizon, "expansion horizon (default "
                                                 "HITCHIN_MAX_HORIZON or 60)");
  classify_cmd->add_flag("--expand", do_expand, "also list members up to the horizon");
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* table_cmd = app.add_subcommand("table", "reference tables 1-5");
  table_cmd->add_option("number", table_number, "table number")->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*chi_cmd) {
      OrbifoldSignature sig = build_signature(chi_sig);
      Rational chi = euler_characteristic(sig);
      emit(format, json{{"command", "chi"}, {"signature", to_json(sig)}},
           json{{"chi", chi.str()},
                {"chi_underlying", chi_underlying(sig)},
                {"hyperbolic", chi.is_negative()}},
           json::array({"defect_sum"}),
           "chi = " + chi.str() + (chi.is_negative() ? " (hyperbolic)\n" : "\n"));
    } else if (*dim_cmd) {
      OrbifoldSignature sig = build_signature(dim_sig);
      SplitGroup g = parse_group(group_spec);
      long long dim = dim_hitchin(sig, g);
      long long alt = dim_hitchin_alternate(sig, g);
      if (dim != alt)
        throw std::logic_error("dimension formulas disagree: " + std::to_string(dim) + " vs " +
                               std::to_string(alt));
      json routes = json::array({"degree_sum", "coefficient_form"});
      if (!is_closed(sig)) routes.push_back("mirror_double");
      emit(format,
           json{{"command", "dim"}, {"group", group_name(g)}, {"signature", to_json(sig)}},
           json{{"dim", dim}}, routes,
           "dim Hit = " + std::to_string(dim) + "\n");
    } else if (*base_cmd) {
      OrbifoldSignature sig = build_signature(base_sig);
      SplitGroup g = parse_group(group_spec);
      bool via_mirror = !is_closed(sig);
      BaseProfile profile = base_profile(via_mirror ? mirror(sig) : sig, g);
      std::string text;
      for (auto& e : profile.entries)
        text += "degree " + std::to_string(e.degree) + ": real dim " +
                std::to_string(e.real_dim) + "\n";
      text += "total = " + std::to_string(profile.total) + "\n";
      json result = to_json(profile);
      result["via_mirror"] = via_mirror;
      json routes = json::array({via_mirror ? "mirror_double" : "degree_sum"});
      emit(format,
           json{{"command", "base"}, {"group", group_name(g)}, {"signature", to_json(sig)}},
           result, routes, text);
    } else if (*bounds_cmd) {
      OrbifoldSignature sig = build_signature(bounds_sig);
      SplitGroup g = parse_group(group_spec);
      ApproximationBounds b = approximation_bounds(sig, g);
      emit(format,
           json{{"command", "bounds"}, {"group", group_name(g)}, {"signature", to_json(sig)}},
           json{{"lower", b.lower.str()}, {"upper", b.upper.str()}, {"defect", b.defect.str()}},
           json::array({"degree_sum"}),
           "defect = " + b.defect.str() + " in [" + b.lower.str() + ", " + b.upper.str() + "]\n");
    } else if (*expected_cmd) {
      OrbifoldSignature sig = build_signature(expected_sig);
      SplitGroup g = parse_group(group_spec);
      if (g.family != GroupFamily::PGL)
        throw InvalidGroup("expected: only pgl:<n> groups are supported");
      long long exp_dim = expected_dim_pgl(sig, g.param);
      long long dim = dim_hitchin(sig, g);
      if (exp_dim != dim)
        throw std::logic_error("independent count disagrees: " + std::to_string(exp_dim) +
                               " vs " + std::to_string(dim));
      emit(format,
           json{{"command", "expected"}, {"group", group_name(g)}, {"signature", to_json(sig)}},
           json{{"dim", exp_dim}}, json::array({"sigma_count", "degree_sum"}),
           "dim Hit = " + std::to_string(exp_dim) + "\n");
    } else if (*classify_cmd) {
      if (horizon == 0) horizon = default_horizon();
      if (horizon < 2) throw std::invalid_argument("horizon must be at least 2");
      return run_classify(mode, group_spec, subgroup_spec, target, degree, orientable_only,
                          horizon, do_expand, format);
    } else if (*table_cmd) {
      return run_table(table_number, format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
