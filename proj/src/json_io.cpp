#include "ellimod/json_io.hpp"

#include "ellimod/error.hpp"

namespace ellimod {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

std::string node_label(std::size_t root, const RootSystem& system) {
  std::string s = "[";
  const auto& v = system.roots()[root];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

Json to_json(const EPoint& p) {
  return Json::array({format_rational(p.a()), format_rational(p.b())});
}

EPoint epoint_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    malformed("E-point must be a pair of rational strings, got " + j.dump());
  return EPoint(parse_rational(j[0].get<std::string>()),
                parse_rational(j[1].get<std::string>()));
}

Json to_json(const BundleDecomp& v) {
  Json summands = Json::array();
  for (const auto& s : v.summands)
    summands.push_back({{"d", s.d}, {"lambda", to_json(s.lambda)}});
  return {{"group", to_string(v.group)}, {"n", v.n}, {"summands", summands}};
}

BundleDecomp bundle_decomp_from_json(const Json& j) {
  if (!j.is_object()) malformed("bundle decomposition must be a JSON object");
  if (!j.contains("group") || !j["group"].is_string())
    malformed("bundle decomposition needs a string field 'group'");
  if (!j.contains("n") || !j["n"].is_number_integer())
    malformed("bundle decomposition needs an integer field 'n'");
  if (!j.contains("summands") || !j["summands"].is_array())
    malformed("bundle decomposition needs an array field 'summands'");
  BundleDecomp v;
  v.group = group_tag_from_string(j["group"].get<std::string>());
  v.n = j["n"].get<std::int64_t>();
  for (const auto& s : j["summands"]) {
    if (!s.is_object() || !s.contains("d") || !s["d"].is_number_integer() ||
        !s.contains("lambda"))
      malformed("summand must be {\"d\": int, \"lambda\": [a, b]}, got " + s.dump());
    v.summands.push_back({s["d"].get<std::int64_t>(), epoint_from_json(s["lambda"])});
  }
  return v;
}

Json to_json(const SpectralFiber& fiber, bool with_involution) {
  Json points = Json::array();
  for (const auto& p : fiber.points) points.push_back({{"e", to_json(p.e)}, {"mult", p.mult}});
  Json out{{"degree", fiber.degree}, {"points", points}};
  if (with_involution) {
    Json fixed = Json::array();
    for (const auto& e : fiber.involution_fixed) fixed.push_back(to_json(e));
    out["involution_fixed"] = fixed;
    out["involution_closed"] = fiber.involution_closed;
  }
  return out;
}

Json to_json(const AdjointShape& shape) {
  Json lines = Json::array();
  for (const auto& e : shape.line_summands) lines.push_back(to_json(e));
  return {{"unipotent_blocks", shape.unipotent_blocks}, {"line_summands", lines}};
}

Json to_json(const SubsystemReport& report, const RootSystem& system) {
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json roots = Json::array();
    for (auto r : c.simple_roots) roots.push_back(node_label(r, system));
    comps.push_back({{"kind", std::string(1, to_char(c.kind))},
                     {"rank", c.rank},
                     {"simple_roots", roots}});
  }
  return {{"components", comps},
          {"total_rank", report.total_rank},
          {"num_roots", report.num_roots}};
}

Json to_json(const ParabolicData& data, const RootSystem& system) {
  Json levels = Json::object();
  for (const auto& [k, count] : data.level_counts) levels[std::to_string(k)] = count;
  return {{"marked_node", data.marked_node + 1},
          {"rule", to_string(data.rule)},
          {"mark", data.mark},
          {"level_counts", levels},
          {"levi", to_json(data.levi, system)}};
}

Json to_json(const FamilyTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) rows.push_back({{"weight", r.weight}, {"exponent", r.exponent}});
  return {{"rows", rows}};
}

Json to_json(const OrbitCanonicalForm& form) {
  return {{"representative", form.representative.to_string()},
          {"stabilizer_order", form.stabilizer_order}};
}

Json to_json(const IntVector& v) { return Json(v); }

}  // namespace ellimod
