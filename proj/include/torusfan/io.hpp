#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusfan/fans.hpp"
#include "torusfan/gitfan.hpp"

namespace torusfan {

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario files are JSON:
//   {"name": "...", "rank": n,
//    "sigma_rays": [[...], ...]            (or "sigma_inequalities"),
//    "subtorus_weights": [[w_1..w_n], ...]}  one row per weight vector.
// Numbers are JSON integers or "p/q" strings.
struct Scenario {
  std::string name;
  TorusDowngrade downgrade;
};

Scenario parse_scenario(std::string_view text);

struct FanMeta {
  std::string which;
  std::optional<int> bound;
  std::optional<bool> stabilized;
  bool operator==(const FanMeta&) const = default;
};

// Fan files are JSON with keys rank, lineality, rays, maximal_cones, meta.
// Output is canonical: equal fans give byte-identical text.
std::string emit_fan(const Fan& fan, const FanMeta& meta = {});

struct FanFile {
  Fan fan;
  FanMeta meta;
};

FanFile parse_fan(std::string_view text);

/// Rationals as "p/q" (or "p"); integer vectors as JSON arrays.
std::string rat_to_string(const Rat& q);
Rat parse_rat(std::string_view text);

// ------------------------------------------------------------------- slices

struct SliceCell {
  std::vector<RatVector> vertices;  // points in the ambient space
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct SliceLabel {
  RatVector point;
  std::string text;
};

struct FanSlice {
  std::vector<SliceCell> cells;
  std::vector<SliceLabel> labels;
};

/// Cuts every maximal cone with <normal, x> = level. Throws InputError when
/// the hyperplane misses the support or a cut is unbounded.
FanSlice slice_fan(const Fan& fan, const RatVector& normal, const Rat& level);

/// Standalone SVG 1.1 drawing of slice_fan (ambient rank 2, 3 or 4).
std::string svg_slice(const Fan& fan, const RatVector& normal, const Rat& level);

}  // namespace torusfan
