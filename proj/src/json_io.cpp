#include "hitorb/json_io.hpp"

#include <algorithm>

namespace hitorb {

using nlohmann::json;

json to_json(const OrbifoldSignature& sig) {
  return json{{"orientable", sig.underlying_orientable},
              {"genus", sig.genus},
              {"mirror_circles", sig.mirror_circles},
              {"boundary_circles", sig.boundary_circles},
              {"full_boundaries", sig.full_boundaries},
              {"mixed_circles", sig.mixed_circles},
              {"cones", sig.cone_orders},
              {"corners", sig.corner_orders}};
}

OrbifoldSignature signature_from_json(const json& j) {
  OrbifoldSignature sig;
  sig.underlying_orientable = j.at("orientable").get<bool>();
  sig.genus = j.at("genus").get<int>();
  sig.mirror_circles = j.value("mirror_circles", 0);
  sig.boundary_circles = j.value("boundary_circles", 0);
  sig.full_boundaries = j.value("full_boundaries", 0);
  sig.mixed_circles = j.value("mixed_circles", 0);
  sig.cone_orders = j.value("cones", std::vector<int>{});
  sig.corner_orders = j.value("corners", std::vector<int>{});
  return sig;
}

json to_json(const BaseProfile& profile) {
  json entries = json::array();
  for (auto& e : profile.entries)
    entries.push_back(json{{"degree", e.degree}, {"real_dim", e.real_dim}});
  return json{{"entries", entries}, {"total", profile.total}};
}

json to_json(const DimensionPolynomial& poly) {
  json ck = json::object(), cl = json::object();
  for (auto& [m, c] : poly.corrections_k) ck[std::to_string(m)] = c;
  for (auto& [n, c] : poly.corrections_l) cl[std::to_string(n)] = c.str();
  return json{{"a", poly.a},          {"c_k", poly.c_k},
              {"c_l", poly.c_l.str()}, {"c_b", poly.c_b},
              {"corrections_k", ck},  {"corrections_l", cl}};
}

namespace {

json slot_to_json(const OrderSlot& slot, int stabilization_order) {
  if (!slot.at_least) return json{{"slot", "finite"}, {"value", slot.value}};
  return json{{"slot", "at_least"},
              {"t", slot.value},
              {"certificate",
               json{{"stabilization_degree", stabilization_order},
                    {"checked_range",
                     json::array({slot.value, std::max(slot.value, stabilization_order)})}}}};
}

OrderSlot slot_from_json(const json& j) {
  OrderSlot slot;
  if (j.at("slot") == "finite") {
    slot.value = j.at("value").get<int>();
  } else if (j.at("slot") == "at_least") {
    slot.value = j.at("t").get<int>();
    slot.at_least = true;
  } else {
    throw std::invalid_argument("slot_from_json: unknown slot kind");
  }
  return slot;
}

json shape_to_json(const SurfaceShape& sh) {
  return json{{"orientable", sh.underlying_orientable},
              {"genus", sh.genus},
              {"mirror_circles", sh.mirror_circles}};
}

SurfaceShape shape_from_json(const json& j) {
  return SurfaceShape{j.at("orientable").get<bool>(), j.at("genus").get<int>(),
                      j.value("mirror_circles", 0)};
}

}  // namespace

json to_json(const SignatureFamily& fam, int stabilization_order) {
  json cones = json::array(), corners = json::array();
  for (auto& s : fam.cones) cones.push_back(slot_to_json(s, stabilization_order));
  for (auto& s : fam.corners) corners.push_back(slot_to_json(s, stabilization_order));
  return json{{"shape", shape_to_json(fam.shape)}, {"cones", cones}, {"corners", corners}};
}

SignatureFamily family_from_json(const json& j) {
  SignatureFamily fam;
  fam.shape = shape_from_json(j.at("shape"));
  for (auto& s : j.value("cones", json::array())) fam.cones.push_back(slot_from_json(s));
  for (auto& s : j.value("corners", json::array())) fam.corners.push_back(slot_from_json(s));
  return fam;
}

json to_json(const FamilySet& fs) {
  json families = json::array();
  for (auto& fam : fs.families) families.push_back(to_json(fam, fs.stabilization_order));
  json shapes = json::array();
  for (auto& sh : fs.shapes_searched) shapes.push_back(shape_to_json(sh));
  return json{{"stabilization_order", fs.stabilization_order},
              {"families", families},
              {"shapes_searched", shapes},
              {"max_cones", fs.max_cones},
              {"max_corners", fs.max_corners},
              {"note", fs.bound_note}};
}

FamilySet family_set_from_json(const json& j) {
  FamilySet fs;
  fs.stabilization_order = j.at("stabilization_order").get<int>();
  for (auto& f : j.at("families")) fs.families.push_back(family_from_json(f));
  for (auto& s : j.value("shapes_searched", json::array()))
    fs.shapes_searched.push_back(shape_from_json(s));
  fs.max_cones = j.value("max_cones", 0);
  fs.max_corners = j.value("max_corners", 0);
  fs.bound_note = j.value("note", std::string{});
  return fs;
}

}  // namespace hitorb
