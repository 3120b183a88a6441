#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torusfan/cones.hpp"
#include "torusfan/polyhedra.hpp"

namespace torusfan {

class FanError : public std::runtime_error {
 public:
  explicit FanError(const std::string& what) : std::runtime_error(what) {}
};

/// A fan, or a quasifan when the common lineality space is nonzero.
///
/// Stored by its maximal cones. Rays are the canonical ray generators of all
/// maximal cones (reduced modulo the lineality, primitive, lex-sorted), and
/// each maximal cone is a sorted list of indices into that list. Maximal
/// cones are sorted by index list, so == is canonical equality.
class Fan {
 public:
  Fan() = default;

  /// Drops cones contained in other cones of the list. With `validate` every
  /// pair of remaining cones must meet in a common face.
  static Fan from_cones(std::size_t dim, std::vector<Cone> cones, bool validate = true);
  /// The fan of all faces of c.
  static Fan from_cone(const Cone& c);
  /// Maximal cones given as ray index lists over `rays`, plus a lineality basis.
  static Fan from_ray_indices(std::size_t dim, const std::vector<RatVector>& lineality,
                              const std::vector<RatVector>& rays,
                              const std::vector<std::vector<std::size_t>>& cones, bool validate = true);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<RatVector>& lineality() const { return lineality_; }
  const std::vector<RatVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& cone_indices() const { return indices_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  bool is_pointed() const { return lineality_.empty(); }

  /// Every cone of the fan (faces of maximal cones), sorted and deduplicated.
  std::vector<Cone> cones() const;

  /// Throws FanError unless maximal cones pairwise meet in common faces.
  void validate() const;

  bool operator==(const Fan& other) const {
    return dim_ == other.dim_ && lineality_ == other.lineality_ && rays_ == other.rays_ &&
           indices_ == other.indices_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RatVector> lineality_;
  std::vector<RatVector> rays_;
  std::vector<std::vector<std::size_t>> indices_;
  std::vector<Cone> maximal_;
};

/// Inner normal fan: the cone at a vertex is generated by the facet normals
/// tight there, so it holds the functionals minimized at that vertex.
Fan normal_fan(const Polyhedron& p);

Fan common_refinement(const std::vector<Fan>& fans);
Fan common_refinement(const Fan& a, const Fan& b);

/// {alpha^{-1}(c)}; alpha must be surjective.
Fan preimage_quasifan(const Fan& f, const RatMatrix& alpha);

/// {c ∩ sigma}.
Fan refine_with_cone(const Fan& f, const Cone& sigma);

/// Exact test of c ⊆ |F|.
bool covers(const Fan& f, const Cone& c);
bool support_contains(const Fan& outer, const Fan& inner);
bool supports_equal(const Fan& a, const Fan& b);

/// The support as a cone when it is convex, otherwise nullopt.
std::optional<Cone> support(const Fan& f);

/// Every cone of fine lies in a cone of coarse and the supports agree.
bool is_refinement(const Fan& fine, const Fan& coarse);
bool fans_equal(const Fan& a, const Fan& b);

/// For every cone c of f1, m(c) lies in some cone of f2.
bool check_compatible(const RatMatrix& m, const Fan& f1, const Fan& f2);
/// m^{-1}(|f2|) == |f1|. Throws FanError when the map is not compatible.
bool check_proper(const RatMatrix& m, const Fan& f1, const Fan& f2);

}  // namespace torusfan
