#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusfan/cones.hpp"
#include "torusfan/exactlin.hpp"
#include "torusfan/fans.hpp"
#include "torusfan/polyhedra.hpp"

namespace torusfan {

class DowngradeError : public std::runtime_error {
 public:
  explicit DowngradeError(const std::string& what) : std::runtime_error(what) {}
};

/// An affine toric variety X_sigma with the action of a subtorus T of the big
/// torus. Columns of `weights` span the one-parameter lattice of T; the
/// characters of T are read in the dual basis, so beta = weights^T.
class TorusDowngrade {
 public:
  /// sigma must be pointed and full-dimensional; weights is n x d of rank d.
  /// A non-saturated lattice is replaced by its saturation (see warning()).
  TorusDowngrade(Cone sigma, const RatMatrix& weights);

  std::size_t rank() const { return sigma_.ambient_dim(); }
  std::size_t subtorus_rank() const { return weights_.cols(); }
  std::size_t quotient_rank() const { return alpha_.rows(); }

  const Cone& sigma() const { return sigma_; }
  const Cone& sigma_dual() const { return sigma_dual_; }
  const RatMatrix& weights() const { return weights_; }
  /// Restriction of characters, d x n.
  const RatMatrix& beta() const { return beta_; }
  /// Projection onto the quotient lattice, (n-d) x n, with alpha * weights = 0.
  const RatMatrix& alpha() const { return alpha_; }
  /// Integral n x (n-d) with alpha * section = I.
  const RatMatrix& section() const { return section_; }
  const std::optional<std::string>& warning() const { return warning_; }

  /// P_chi in coordinates of the quotient character lattice.
  FiberPolyhedron fiber(const RatVector& chi) const;

  /// Faces of sigma paired with the orbit cones beta(F*) of their dual faces.
  struct FaceData {
    Cone face;
    Cone orbit_cone;
  };
  const std::vector<FaceData>& face_data() const { return face_data_; }

 private:
  Cone sigma_;
  Cone sigma_dual_;
  RatMatrix weights_;
  RatMatrix beta_;
  RatMatrix alpha_;
  RatMatrix section_;
  std::optional<std::string> warning_;
  std::vector<FaceData> face_data_;
};

struct GitFan {
  Cone weight_cone;
  std::vector<Cone> orbit_cones;
  /// Every GIT cone, sorted.
  std::vector<Cone> git_cones;
  Fan fan;
  /// GIT cones meeting the relative interior of the weight cone.
  std::vector<Cone> q0;
};

Cone weight_cone(const TorusDowngrade& d);
std::vector<Cone> orbit_cones(const TorusDowngrade& d);
/// Intersection of the orbit cones containing chi. Throws if chi is outside
/// the weight cone.
Cone git_cone(const TorusDowngrade& d, const RatVector& chi);
GitFan git_fan(const TorusDowngrade& d);

/// Faces F of sigma with chi in beta(F*), sorted.
std::vector<Cone> semistable_faces(const TorusDowngrade& d, const RatVector& chi);
/// Faces F of sigma with beta(F*) containing the weight cone, sorted.
std::vector<Cone> stable_faces(const TorusDowngrade& d);

}  // namespace torusfan
