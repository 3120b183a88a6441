#include "torusfan/fans.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torusfan {

namespace {

std::vector<Cone> keep_maximal(std::vector<Cone> cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  // Sorted by dimension first, so a cone can only be contained in a later one.
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool contained = false;
    for (std::size_t j = i + 1; j < cones.size() && !contained; ++j)
      contained = cones[j].dim() > cones[i].dim() && cones[j].contains(cones[i]);
    if (!contained) out.push_back(std::move(cones[i]));
  }
  return out;
}

}  // namespace

Fan Fan::from_cones(std::size_t dim, std::vector<Cone> cones, bool validate) {
  for (const auto& c : cones)
    if (c.ambient_dim() != dim) throw FanError("Fan: cone dimension mismatch");
  Fan f;
  f.dim_ = dim;
  if (cones.empty()) cones.push_back(Cone::zero(dim));
  cones = keep_maximal(std::move(cones));
  f.lineality_ = cones.front().lineality();
  for (const auto& c : cones)
    if (c.lineality() != f.lineality_) throw FanError("Fan: cones do not share a lineality space");

  std::set<RatVector, decltype(&lex_less)> rays(&lex_less);
  for (const auto& c : cones) rays.insert(c.rays().begin(), c.rays().end());
  f.rays_.assign(rays.begin(), rays.end());

  std::vector<std::pair<std::vector<std::size_t>, Cone>> indexed;
  for (auto& c : cones) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays())
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(f.rays_.begin(), f.rays_.end(), r, lex_less) - f.rays_.begin()));
    std::sort(idx.begin(), idx.end());
    indexed.emplace_back(std::move(idx), std::move(c));
  }
  std::sort(indexed.begin(), indexed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [idx, c] : indexed) {
    f.indices_.push_back(std::move(idx));
    f.maximal_.push_back(std::move(c));
  }
  if (validate) f.validate();
  return f;
}

Fan Fan::from_cone(const Cone& c) { return from_cones(c.ambient_dim(), {c}, false); }

Fan Fan::from_ray_indices(std::size_t dim, const std::vector<RatVector>& lineality,
                          const std::vector<RatVector>& rays, const std::vector<std::vector<std::size_t>>& cones,
                          bool validate) {
  std::vector<Cone> built;
  for (const auto& idx : cones) {
    std::vector<RatVector> gens;
    for (std::size_t i : idx) {
      if (i >= rays.size()) throw FanError("Fan: ray index out of range");
      gens.push_back(rays[i]);
    }
    built.push_back(Cone::from_generators(dim, gens, lineality));
  }
  return from_cones(dim, std::move(built), validate);
}

std::vector<Cone> Fan::cones() const {
  std::set<Cone> all;
  for (const auto& c : maximal_)
    for (auto& face : faces(c)) all.insert(std::move(face));
  return {all.begin(), all.end()};
}

void Fan::validate() const {
  for (std::size_t i = 0; i < maximal_.size(); ++i)
    for (std::size_t j = i + 1; j < maximal_.size(); ++j) {
      const Cone meet = intersect(maximal_[i], maximal_[j]);
      if (!meet.is_face_of(maximal_[i]) || !meet.is_face_of(maximal_[j]))
        throw FanError("Fan: maximal cones " + std::to_string(i) + " and " + std::to_string(j) +
                       " do not meet in a common face");
    }
}

// ---------------------------------------------------------------- operations

Fan normal_fan(const Polyhedron& p) {
  if (p.is_empty()) throw FanError("normal_fan: empty polyhedron");
  const std::size_t n = p.ambient_dim();
  std::vector<RatVector> lin;
  for (const auto& h : p.hyperplanes()) lin.push_back(h.normal);
  std::vector<Cone> cones;
  for (const auto& v : p.vertices()) {
    std::vector<RatVector> tight;
    for (const auto& h : p.halfspaces())
      if (dot(h.normal, v) == h.offset) tight.push_back(h.normal);
    cones.push_back(Cone::from_generators(n, tight, lin));
  }
  return Fan::from_cones(n, std::move(cones), false);
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw FanError("common_refinement: dimension mismatch");
  std::vector<Cone> cones;
  for (const auto& c : a.maximal_cones())
    for (const auto& d : b.maximal_cones()) cones.push_back(intersect(c, d));
  return Fan::from_cones(a.ambient_dim(), std::move(cones), false);
}

Fan common_refinement(const std::vector<Fan>& fans) {
  if (fans.empty()) throw FanError("common_refinement: no fans");
  Fan out = fans.front();
  for (std::size_t i = 1; i < fans.size(); ++i) out = common_refinement(out, fans[i]);
  return out;
}

Fan preimage_quasifan(const Fan& f, const RatMatrix& alpha) {
  if (alpha.rows() != f.ambient_dim()) throw FanError("preimage_quasifan: dimension mismatch");
  if (rank(alpha) != alpha.rows()) throw FanError("preimage_quasifan: map is not surjective");
  std::vector<Cone> cones;
  for (const auto& c : f.maximal_cones()) cones.push_back(map_cone(c, alpha, MapDirection::preimage));
  return Fan::from_cones(alpha.cols(), std::move(cones), false);
}

Fan refine_with_cone(const Fan& f, const Cone& sigma) {
  if (sigma.ambient_dim() != f.ambient_dim()) throw FanError("refine_with_cone: dimension mismatch");
  std::vector<Cone> cones;
  for (const auto& c : f.maximal_cones()) cones.push_back(intersect(c, sigma));
  return Fan::from_cones(f.ambient_dim(), std::move(cones), false);
}

bool covers(const Fan& f, const Cone& c) {
  if (f.ambient_dim() != c.ambient_dim()) throw FanError("covers: dimension mismatch");
  std::vector<Cone> pieces;
  for (const auto& d : f.maximal_cones()) {
    Cone piece = intersect(c, d);
    if (piece.dim() == c.dim()) pieces.push_back(std::move(piece));
  }
  if (pieces.empty()) return false;

  // The pieces subdivide their union. It is all of c iff every wall that
  // reaches into the relative interior of c has a piece on both sides.
  std::map<Cone, int> walls;
  for (const auto& piece : pieces)
    for (std::size_t i = 0; i < piece.facets().size(); ++i) {
      Cone wall = piece.facet_face(i);
      const bool on_boundary = std::any_of(c.facets().begin(), c.facets().end(), [&](const RatVector& h) {
        return std::all_of(wall.rays().begin(), wall.rays().end(),
                           [&](const RatVector& r) { return sgn(dot(h, r)) == 0; });
      });
      if (!on_boundary) ++walls[std::move(wall)];
    }
  return std::all_of(walls.begin(), walls.end(), [](const auto& w) { return w.second == 2; });
}

bool support_contains(const Fan& outer, const Fan& inner) {
  return std::all_of(inner.maximal_cones().begin(), inner.maximal_cones().end(),
                     [&](const Cone& c) { return covers(outer, c); });
}

bool supports_equal(const Fan& a, const Fan& b) { return support_contains(a, b) && support_contains(b, a); }

std::optional<Cone> support(const Fan& f) {
  Cone hull = Cone::from_generators(f.ambient_dim(), f.rays(), f.lineality());
  if (!covers(f, hull)) return std::nullopt;
  return hull;
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_dim() != coarse.ambient_dim()) throw FanError("is_refinement: dimension mismatch");
  for (const auto& c : fine.maximal_cones()) {
    const bool inside = std::any_of(coarse.maximal_cones().begin(), coarse.maximal_cones().end(),
                                    [&](const Cone& d) { return d.contains(c); });
    if (!inside) return false;
  }
  return supports_equal(fine, coarse);
}

bool fans_equal(const Fan& a, const Fan& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw FanError("fans_equal: dimension mismatch");
  return a == b;
}

bool check_compatible(const RatMatrix& m, const Fan& f1, const Fan& f2) {
  if (m.cols() != f1.ambient_dim() || m.rows() != f2.ambient_dim())
    throw FanError("check_compatible: dimension mismatch");
  for (const auto& c : f1.maximal_cones()) {
    const Cone image = map_cone(c, m, MapDirection::image);
    const bool inside = std::any_of(f2.maximal_cones().begin(), f2.maximal_cones().end(),
                                    [&](const Cone& d) { return d.contains(image); });
    if (!inside) return false;
  }
  return true;
}

bool check_proper(const RatMatrix& m, const Fan& f1, const Fan& f2) {
  if (!check_compatible(m, f1, f2)) throw FanError("check_proper: map is not compatible with the fans");
  std::vector<Cone> pulled;
  for (const auto& d : f2.maximal_cones()) pulled.push_back(map_cone(d, m, MapDirection::preimage));
  // Compatibility already gives |f1| ⊆ m^{-1}|f2|.
  return std::all_of(pulled.begin(), pulled.end(),
                     [&](const Cone& c) { return covers(f1, c); });
}

}  // namespace torusfan
