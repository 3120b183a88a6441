#include "torusfan/gitfan.hpp"

#include <algorithm>
#include <set>

namespace torusfan {

TorusDowngrade::TorusDowngrade(Cone sigma, const RatMatrix& weights) : sigma_(std::move(sigma)) {
  const std::size_t n = sigma_.ambient_dim();
  if (!sigma_.is_pointed()) throw DowngradeError("sigma must be pointed");
  if (!sigma_.is_full_dimensional()) throw DowngradeError("sigma must be full-dimensional");
  if (weights.rows() != n) throw DowngradeError("subtorus weights must have length " + std::to_string(n));
  if (!weights.is_integer()) throw DowngradeError("subtorus weights must be integral");
  if (torusfan::rank(weights) != weights.cols()) throw DowngradeError("subtorus weights are linearly dependent");

  QuotientCoords qc = quotient_coords(weights);
  weights_ = weights;
  if (qc.warning) {
    weights_ = qc.saturated;
    warning_ = qc.warning;
  }
  beta_ = weights_.transpose();
  alpha_ = qc.alpha;
  section_ = qc.section;
  sigma_dual_ = dual_cone(sigma_);

  for (auto& face : faces(sigma_)) {
    std::vector<RatVector> eqs = sigma_dual_.equations();
    eqs.push_back(face.relint_point());
    const Cone dual_face = Cone::from_inequalities(n, sigma_dual_.facets(), eqs);
    face_data_.push_back({std::move(face), map_cone(dual_face, beta_, MapDirection::image)});
  }
}

FiberPolyhedron TorusDowngrade::fiber(const RatVector& chi) const {
  if (chi.size() != subtorus_rank()) throw DowngradeError("character has wrong length");
  return fiber_polyhedron(sigma_dual_, beta_, chi, alpha_);
}

Cone weight_cone(const TorusDowngrade& d) { return map_cone(d.sigma_dual(), d.beta(), MapDirection::image); }

std::vector<Cone> orbit_cones(const TorusDowngrade& d) {
  std::set<Cone> out;
  for (const auto& fd : d.face_data()) out.insert(fd.orbit_cone);
  return {out.begin(), out.end()};
}

namespace {

Cone git_cone_from(const std::vector<Cone>& orbits, const Cone& omega, const RatVector& chi) {
  if (!omega.contains(chi)) throw DowngradeError("character " + to_string(chi) + " lies outside the weight cone");
  std::vector<RatVector> normals, eqs;
  for (const auto& w : orbits) {
    if (!w.contains(chi)) continue;
    normals.insert(normals.end(), w.facets().begin(), w.facets().end());
    eqs.insert(eqs.end(), w.equations().begin(), w.equations().end());
  }
  return Cone::from_inequalities(omega.ambient_dim(), normals, eqs);
}

}  // namespace

Cone git_cone(const TorusDowngrade& d, const RatVector& chi) {
  if (chi.size() != d.subtorus_rank()) throw DowngradeError("character has wrong length");
  return git_cone_from(orbit_cones(d), weight_cone(d), chi);
}

GitFan git_fan(const TorusDowngrade& d) {
  GitFan g;
  g.weight_cone = weight_cone(d);
  g.orbit_cones = orbit_cones(d);

  // Close the orbit cones under intersection; every GIT cone is a member.
  std::set<Cone> closure(g.orbit_cones.begin(), g.orbit_cones.end());
  std::vector<Cone> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Cone> next;
    for (const auto& a : frontier)
      for (const auto& b : g.orbit_cones) {
        Cone c = intersect(a, b);
        if (closure.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }

  std::set<Cone> git;
  for (const auto& c : closure) git.insert(git_cone_from(g.orbit_cones, g.weight_cone, c.relint_point()));
  g.git_cones.assign(git.begin(), git.end());
  g.fan = Fan::from_cones(d.subtorus_rank(), g.git_cones, false);
  for (const auto& c : g.git_cones)
    if (g.weight_cone.classify(c.relint_point()) == Membership::relative_interior) g.q0.push_back(c);
  return g;
}

std::vector<Cone> semistable_faces(const TorusDowngrade& d, const RatVector& chi) {
  if (chi.size() != d.subtorus_rank()) throw DowngradeError("character has wrong length");
  std::vector<Cone> out;
  for (const auto& fd : d.face_data())
    if (fd.orbit_cone.contains(chi)) out.push_back(fd.face);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> stable_faces(const TorusDowngrade& d) {
  const Cone omega = weight_cone(d);
  std::vector<Cone> out;
  for (const auto& fd : d.face_data())
    if (fd.orbit_cone.contains(omega)) out.push_back(fd.face);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace torusfan
