#pragma once

// JSON helpers shared by the readers and writers.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "torusfan/exactlin.hpp"

namespace torusfan::detail {

Rat json_rat(const nlohmann::json& j);
RatVector json_vector(const nlohmann::json& j, std::size_t dim, const std::string& what);
std::vector<RatVector> json_vectors(const nlohmann::json& j, std::size_t dim, const std::string& what);

nlohmann::json int_json(const Int& x);
nlohmann::json vector_json(const RatVector& v);
nlohmann::json vectors_json(const std::vector<RatVector>& vs);

nlohmann::json parse_json(std::string_view text);

}  // namespace torusfan::detail
