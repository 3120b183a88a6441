#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "torusfan/exactlin.hpp"

namespace torusfan {

enum class Membership { outside, boundary, relative_interior };

/// A rational polyhedral cone carrying both representations.
///
/// Canonical form: the lineality and equation bases are RREF rows scaled to
/// primitive integers; rays are projected onto the orthogonal complement of
/// the lineality space, made primitive and sorted lexicographically; facet
/// normals are projected onto span(C) (i.e. reduced modulo the equations) in
/// the same way. Two cones are equal iff their canonical data agree.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t dim, const std::vector<RatVector>& rays,
                              const std::vector<RatVector>& lineality = {});
  /// {x : <a, x> >= 0 for a in normals, <e, x> = 0 for e in equations}
  static Cone from_inequalities(std::size_t dim, const std::vector<RatVector>& normals,
                                const std::vector<RatVector>& equations = {});
  static Cone whole_space(std::size_t dim);
  static Cone zero(std::size_t dim);
  static Cone orthant(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return dim_ - equations_.size(); }
  std::size_t lineality_dim() const { return lineality_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  const std::vector<RatVector>& rays() const { return rays_; }
  const std::vector<RatVector>& lineality() const { return lineality_; }
  const std::vector<RatVector>& facets() const { return facets_; }
  const std::vector<RatVector>& equations() const { return equations_; }

  Membership classify(const RatVector& v) const;
  bool contains(const RatVector& v) const { return classify(v) != Membership::outside; }
  bool contains(const Cone& other) const;

  /// Sum of the canonical ray generators; lies in the relative interior.
  RatVector relint_point() const;

  /// The face cut out by a facet normal (which must be one of facets()).
  Cone facet_face(std::size_t facet_index) const;

  /// Smallest face containing the point `v` (which must lie in the cone).
  Cone minimal_face_containing(const RatVector& v) const;

  bool is_face_of(const Cone& other) const;

  bool operator==(const Cone& other) const;
  std::strong_ordering operator<=>(const Cone& other) const;

 private:
  static Cone canonical(std::size_t dim, std::vector<RatVector> rays, std::vector<RatVector> lineality,
                        std::vector<RatVector> facets, std::vector<RatVector> equations);

  std::size_t dim_ = 0;
  std::vector<RatVector> rays_;
  std::vector<RatVector> lineality_;
  std::vector<RatVector> facets_;
  std::vector<RatVector> equations_;

  friend Cone dual_cone(const Cone& c);
};

/// Converts either description to a canonical cone holding both.
enum class ConeInput { generators, inequalities };
Cone dd_convert(std::size_t dim, ConeInput kind, const std::vector<RatVector>& vectors,
                const std::vector<RatVector>& linear_part = {});

/// {m : <m, c> >= 0 for all c in C}
Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);

enum class MapDirection { image, preimage };
/// image: cone generated by {M g}; preimage: {x : M x in C}.
Cone map_cone(const Cone& c, const RatMatrix& m, MapDirection direction);

/// All faces, ordered by dimension and then by canonical rays.
std::vector<Cone> faces(const Cone& c);

RatVector relint_point(const Cone& c);
Membership contains_point(const Cone& c, const RatVector& v);

}  // namespace torusfan
