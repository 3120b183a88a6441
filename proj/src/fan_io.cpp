#include "json_support.hpp"
#include "torusfan/io.hpp"

namespace torusfan {

using nlohmann::json;

std::string emit_fan(const Fan& fan, const FanMeta& meta) {
  json doc;
  doc["rank"] = fan.ambient_dim();
  doc["lineality"] = detail::vectors_json(fan.lineality());
  doc["rays"] = detail::vectors_json(fan.rays());
  json cones = json::array();
  for (const auto& idx : fan.cone_indices()) cones.push_back(idx);
  doc["maximal_cones"] = cones;
  json m = json::object();
  if (!meta.which.empty()) m["which"] = meta.which;
  if (meta.bound) m["bound"] = *meta.bound;
  if (meta.stabilized) m["stabilized"] = *meta.stabilized;
  doc["meta"] = m;
  return doc.dump(2) + "\n";
}

FanFile parse_fan(std::string_view text) {
  const json doc = detail::parse_json(text);
  if (!doc.is_object()) throw InputError("fan file: expected a JSON object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer() || doc["rank"].get<long>() < 0)
    throw InputError("fan file: 'rank' must be a non-negative integer");
  const auto n = static_cast<std::size_t>(doc["rank"].get<long>());
  auto field = [&doc](const char* key) -> const json& {
    if (!doc.contains(key)) throw InputError(std::string("fan file: missing '") + key + "'");
    return doc[key];
  };
  const auto lineality = detail::json_vectors(field("lineality"), n, "lineality");
  const auto rays = detail::json_vectors(field("rays"), n, "rays");
  const json& cones = field("maximal_cones");
  if (!cones.is_array()) throw InputError("fan file: 'maximal_cones' must be a list");
  std::vector<std::vector<std::size_t>> indices;
  for (const auto& c : cones) {
    if (!c.is_array()) throw InputError("fan file: each maximal cone must be a list of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& i : c) {
      if (!i.is_number_unsigned()) throw InputError("fan file: ray indices must be non-negative integers");
      idx.push_back(i.get<std::size_t>());
    }
    indices.push_back(std::move(idx));
  }

  FanFile out;
  try {
    out.fan = Fan::from_ray_indices(n, lineality, rays, indices, true);
  } catch (const std::runtime_error& e) {
    throw InputError(std::string("fan file: ") + e.what());
  }
  if (doc.contains("meta")) {
    const json& m = doc["meta"];
    if (!m.is_object()) throw InputError("fan file: 'meta' must be an object");
    if (m.contains("which")) {
      if (!m["which"].is_string()) throw InputError("fan file: meta.which must be a string");
      out.meta.which = m["which"].get<std::string>();
    }
    if (m.contains("bound")) {
      if (!m["bound"].is_number_integer()) throw InputError("fan file: meta.bound must be an integer");
      out.meta.bound = m["bound"].get<int>();
    }
    if (m.contains("stabilized")) {
      if (!m["stabilized"].is_boolean()) throw InputError("fan file: meta.stabilized must be a boolean");
      out.meta.stabilized = m["stabilized"].get<bool>();
    }
  }
  return out;
}

}  // namespace torusfan
