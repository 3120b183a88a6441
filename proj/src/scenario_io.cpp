#include "json.hpp"
#include "json_support.hpp"
#include "torusfan/io.hpp"

namespace torusfan {

using nlohmann::json;

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  const std::string s(first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1));
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InputError("not a rational number: '" + s + "'");
  Int n(num[0] == '+' ? num.substr(1) : num), d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

namespace detail {

Rat json_rat(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

RatVector json_vector(const json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  if (j.size() != dim) throw InputError(what + ": expected " + std::to_string(dim) + " entries");
  RatVector v;
  for (const auto& x : j) v.push_back(json_rat(x));
  return v;
}

std::vector<RatVector> json_vectors(const json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected a list of vectors");
  std::vector<RatVector> out;
  for (const auto& row : j) out.push_back(json_vector(row, dim, what));
  return out;
}

json int_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json vector_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(q.get_den() == 1 ? int_json(q.get_num()) : json(rat_to_string(q)));
  return out;
}

json vectors_json(const std::vector<RatVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

Scenario parse_scenario(std::string_view text) {
  const json doc = detail::parse_json(text);
  if (!doc.is_object()) throw InputError("scenario: expected a JSON object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer() || doc["rank"].get<long>() < 1)
    throw InputError("scenario: 'rank' must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["rank"].get<long>());

  const bool by_rays = doc.contains("sigma_rays"), by_ineq = doc.contains("sigma_inequalities");
  if (by_rays == by_ineq) throw InputError("scenario: give exactly one of 'sigma_rays' and 'sigma_inequalities'");
  const auto sigma_input = by_rays ? detail::json_vectors(doc["sigma_rays"], n, "sigma_rays")
                                   : detail::json_vectors(doc["sigma_inequalities"], n, "sigma_inequalities");
  for (const auto& v : sigma_input)
    if (!is_integer(v)) throw InputError("scenario: sigma must be given by integer vectors");
  Cone sigma = dd_convert(n, by_rays ? ConeInput::generators : ConeInput::inequalities, sigma_input);

  if (!doc.contains("subtorus_weights")) throw InputError("scenario: missing 'subtorus_weights'");
  const auto weights = detail::json_vectors(doc["subtorus_weights"], n, "subtorus_weights");
  if (weights.empty()) throw InputError("scenario: 'subtorus_weights' is empty");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("scenario: 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  try {
    return {name, TorusDowngrade(std::move(sigma), RatMatrix::from_columns(weights, n))};
  } catch (const DowngradeError& e) {
    throw InputError(std::string("scenario: ") + e.what());
  }
}

}  // namespace torusfan
