#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "torusfan/cones.hpp"
#include "torusfan/exactlin.hpp"

namespace torusfan {

/// <normal, x> >= offset
struct AffineHalfspace {
  RatVector normal;
  Rat offset;
  bool operator==(const AffineHalfspace&) const = default;
};

/// <normal, x> = offset
struct AffineHyperplane {
  RatVector normal;
  Rat offset;
  bool operator==(const AffineHyperplane&) const = default;
};

class PolyhedronError : public std::runtime_error {
 public:
  explicit PolyhedronError(const std::string& what) : std::runtime_error(what) {}
};

/// Rational polyhedron stored through its homogenization
/// {(t, x) : t >= 0, (t, x) in cone(P)} in Q^{1+n}. Empty polyhedra are
/// ordinary values (is_empty()).
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron empty(std::size_t dim);
  static Polyhedron from_inequalities(std::size_t dim, const std::vector<AffineHalfspace>& halfspaces,
                                      const std::vector<AffineHyperplane>& hyperplanes = {});
  static Polyhedron from_generators(std::size_t dim, const std::vector<RatVector>& vertices,
                                    const std::vector<RatVector>& rays = {},
                                    const std::vector<RatVector>& lineality = {});
  static Polyhedron from_cone(const Cone& c);

  std::size_t ambient_dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }
  /// Affine dimension; -1 for the empty polyhedron.
  int dim() const;

  /// Canonical vertices (modulo lineality), lexicographically sorted.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<RatVector>& rays() const { return rays_; }
  const std::vector<RatVector>& lineality() const { return lineality_; }
  /// Irredundant facet inequalities.
  const std::vector<AffineHalfspace>& halfspaces() const { return halfspaces_; }
  /// Canonical basis of the affine hull equations.
  const std::vector<AffineHyperplane>& hyperplanes() const { return hyperplanes_; }
  const Cone& homogenization() const { return homog_; }

  bool contains(const RatVector& x) const;
  Polyhedron translated(const RatVector& shift) const;

  bool operator==(const Polyhedron& other) const { return dim_ == other.dim_ && homog_ == other.homog_; }

 private:
  static Polyhedron from_homogenization(std::size_t dim, Cone homog);

  std::size_t dim_ = 0;
  Cone homog_;
  std::vector<RatVector> vertices_;
  std::vector<RatVector> rays_;
  std::vector<RatVector> lineality_;
  std::vector<AffineHalfspace> halfspaces_;
  std::vector<AffineHyperplane> hyperplanes_;
};

Cone recession_cone(const Polyhedron& p);
Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);

/// min <m, x> over P; nullopt when unbounded below. Throws on empty P.
std::optional<Rat> support_value(const Polyhedron& p, const RatVector& m);

/// Integer box, inclusive bounds per coordinate.
using IntBox = std::vector<std::pair<Int, Int>>;

/// Integer points of P, sorted lexicographically. Unbounded P needs a box.
std::vector<RatVector> lattice_points(const Polyhedron& p, const std::optional<IntBox>& box = std::nullopt);
std::size_t count_lattice_points(const Polyhedron& p, const std::optional<IntBox>& box = std::nullopt);

/// conv(P ∩ Z^n) + rec(P). The recession cone must be rational (always true here).
Polyhedron integer_hull(const Polyhedron& p);

/// P_chi = beta^{-1}(chi) ∩ sigma^vee, held in coordinates u of ker(beta)
/// with respect to `kernel_basis` (rows) around `basepoint`:
/// m = basepoint + kernel_basis^T u.
struct FiberPolyhedron {
  Polyhedron polytope;
  RatVector basepoint;
  RatMatrix kernel_basis;
  /// aligned: the basepoint is integral and kernel_basis is a lattice basis,
  /// so lattice points in u-coordinates are exactly lattice points of P_chi.
  /// no_lattice_points: beta m = chi has no integral solution at all.
  enum class Lattice { aligned, no_lattice_points, unknown };
  Lattice lattice = Lattice::unknown;

  RatVector to_ambient(const RatVector& u) const;
  std::vector<RatVector> ambient_vertices() const;
};

/// `kernel_basis` rows must form a basis of ker(beta). When `lattice_basis`
/// is set the rows are also assumed to be a basis of ker(beta) ∩ Z^n, and an
/// integral basepoint is used when one exists.
FiberPolyhedron fiber_polyhedron(const Cone& sigma_dual, const RatMatrix& beta, const RatVector& chi,
                                 const RatMatrix& kernel_basis, bool lattice_basis = true);

/// Integer hull of a fiber, taken with respect to the lattice of characters.
Polyhedron integer_hull(const FiberPolyhedron& fiber);

}  // namespace torusfan
