#include "torusfan/polyhedra.hpp"

#include <algorithm>
#include <utility>

namespace torusfan {

namespace {

RatVector lift(const Rat& t, const RatVector& x) {
  RatVector out;
  out.reserve(x.size() + 1);
  out.push_back(t);
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

RatVector tail(const RatVector& v) { return RatVector(v.begin() + 1, v.end()); }

}  // namespace

Polyhedron Polyhedron::empty(std::size_t dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.homog_ = Cone::zero(dim + 1);
  return p;
}

Polyhedron Polyhedron::from_homogenization(std::size_t dim, Cone homog) {
  Polyhedron p;
  p.dim_ = dim;
  for (const auto& r : homog.rays()) {
    if (sgn(r[0]) > 0)
      p.vertices_.push_back((1 / r[0]) * tail(r));
    else
      p.rays_.push_back(primitive(tail(r)));
  }
  if (p.vertices_.empty()) return empty(dim);
  for (const auto& l : homog.lineality()) p.lineality_.push_back(tail(l));
  p.lineality_ = canonical_basis(p.lineality_, dim);
  std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less);
  std::sort(p.rays_.begin(), p.rays_.end(), lex_less);

  for (const auto& f : homog.facets()) {
    bool touches_vertex = false;
    for (const auto& r : homog.rays())
      if (sgn(r[0]) > 0 && sgn(dot(f, r)) == 0) touches_vertex = true;
    if (!touches_vertex) continue;  // the face at infinity
    p.halfspaces_.push_back({tail(f), -f[0]});
  }
  for (const auto& e : homog.equations()) p.hyperplanes_.push_back({tail(e), -e[0]});
  p.homog_ = std::move(homog);
  return p;
}

Polyhedron Polyhedron::from_inequalities(std::size_t dim, const std::vector<AffineHalfspace>& halfspaces,
                                         const std::vector<AffineHyperplane>& hyperplanes) {
  std::vector<RatVector> normals{unit_vector(dim + 1, 0)};
  std::vector<RatVector> eqs;
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw PolyhedronError("Polyhedron::from_inequalities: dimension mismatch");
    normals.push_back(lift(-h.offset, h.normal));
  }
  for (const auto& h : hyperplanes) {
    if (h.normal.size() != dim) throw PolyhedronError("Polyhedron::from_inequalities: dimension mismatch");
    eqs.push_back(lift(-h.offset, h.normal));
  }
  return from_homogenization(dim, Cone::from_inequalities(dim + 1, normals, eqs));
}

Polyhedron Polyhedron::from_generators(std::size_t dim, const std::vector<RatVector>& vertices,
                                       const std::vector<RatVector>& rays,
                                       const std::vector<RatVector>& lineality) {
  if (vertices.empty()) return empty(dim);
  std::vector<RatVector> gens, lin;
  for (const auto& v : vertices) {
    if (v.size() != dim) throw PolyhedronError("Polyhedron::from_generators: dimension mismatch");
    gens.push_back(lift(1, v));
  }
  for (const auto& r : rays) {
    if (r.size() != dim) throw PolyhedronError("Polyhedron::from_generators: dimension mismatch");
    gens.push_back(lift(0, r));
  }
  for (const auto& l : lineality) {
    if (l.size() != dim) throw PolyhedronError("Polyhedron::from_generators: dimension mismatch");
    lin.push_back(lift(0, l));
  }
  return from_homogenization(dim, Cone::from_generators(dim + 1, gens, lin));
}

Polyhedron Polyhedron::from_cone(const Cone& c) {
  return from_generators(c.ambient_dim(), {zero_vector(c.ambient_dim())}, c.rays(), c.lineality());
}

int Polyhedron::dim() const {
  if (is_empty()) return -1;
  return static_cast<int>(homog_.dim()) - 1;
}

bool Polyhedron::contains(const RatVector& x) const {
  if (x.size() != dim_) throw PolyhedronError("Polyhedron::contains: dimension mismatch");
  if (is_empty()) return false;
  return homog_.contains(lift(1, x));
}

Polyhedron Polyhedron::translated(const RatVector& shift) const {
  if (is_empty()) return *this;
  std::vector<RatVector> verts;
  for (const auto& v : vertices_) verts.push_back(v + shift);
  return from_generators(dim_, verts, rays_, lineality_);
}

Cone recession_cone(const Polyhedron& p) {
  if (p.is_empty()) throw PolyhedronError("recession_cone: empty polyhedron");
  return Cone::from_generators(p.ambient_dim(), p.rays(), p.lineality());
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw PolyhedronError("minkowski_sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.ambient_dim());
  std::vector<RatVector> verts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) verts.push_back(a + b);
  std::vector<RatVector> rays = p.rays();
  rays.insert(rays.end(), q.rays().begin(), q.rays().end());
  std::vector<RatVector> lin = p.lineality();
  lin.insert(lin.end(), q.lineality().begin(), q.lineality().end());
  return Polyhedron::from_generators(p.ambient_dim(), verts, rays, lin);
}

std::optional<Rat> support_value(const Polyhedron& p, const RatVector& m) {
  if (p.is_empty()) throw PolyhedronError("support_value: empty polyhedron");
  if (m.size() != p.ambient_dim()) throw PolyhedronError("support_value: dimension mismatch");
  for (const auto& r : p.rays())
    if (sgn(dot(m, r)) < 0) return std::nullopt;
  for (const auto& l : p.lineality())
    if (sgn(dot(m, l)) != 0) return std::nullopt;
  Rat best = dot(m, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::min(best, Rat(dot(m, v)));
  return best;
}

// -------------------------------------------------------------------- fibers

RatVector FiberPolyhedron::to_ambient(const RatVector& u) const {
  return basepoint + kernel_basis.transpose() * u;
}

std::vector<RatVector> FiberPolyhedron::ambient_vertices() const {
  std::vector<RatVector> out;
  for (const auto& v : polytope.vertices()) out.push_back(to_ambient(v));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

FiberPolyhedron fiber_polyhedron(const Cone& sigma_dual, const RatMatrix& beta, const RatVector& chi,
                                 const RatMatrix& kernel_basis, bool lattice_basis) {
  const std::size_t n = sigma_dual.ambient_dim();
  if (beta.cols() != n || kernel_basis.cols() != n || chi.size() != beta.rows())
    throw PolyhedronError("fiber_polyhedron: dimension mismatch");
  const std::size_t k = kernel_basis.rows();

  FiberPolyhedron fiber;
  fiber.kernel_basis = kernel_basis;
  std::optional<RatVector> base;
  if (lattice_basis) {
    base = solve_integer(beta, chi);
    fiber.lattice = base ? FiberPolyhedron::Lattice::aligned : FiberPolyhedron::Lattice::no_lattice_points;
  }
  if (!base) base = solve_rational(beta, chi);
  if (!base) {
    fiber.basepoint = zero_vector(n);
    fiber.polytope = Polyhedron::empty(k);
    return fiber;
  }
  fiber.basepoint = *base;

  std::vector<AffineHalfspace> halfspaces;
  for (const auto& f : sigma_dual.facets()) halfspaces.push_back({kernel_basis * f, -dot(f, fiber.basepoint)});
  std::vector<AffineHyperplane> hyperplanes;
  for (const auto& e : sigma_dual.equations())
    hyperplanes.push_back({kernel_basis * e, -dot(e, fiber.basepoint)});
  fiber.polytope = Polyhedron::from_inequalities(k, halfspaces, hyperplanes);
  return fiber;
}

}  // namespace torusfan
