#include "torusfan/pdivisor.hpp"

namespace torusfan {

PolyhedralDivisor downgrade_divisor(const TorusDowngrade& d, const Fan& chow, const RatMatrix& section) {
  const std::size_t n = d.rank(), k = d.subtorus_rank(), q = d.quotient_rank();
  if (chow.ambient_dim() != q) throw DowngradeError("downgrade_divisor: base fan has the wrong dimension");
  if (section.rows() != n || section.cols() != q) throw DowngradeError("downgrade_divisor: section has the wrong shape");
  if (!section.is_integer() || !(d.alpha() * section == RatMatrix::identity(q)))
    throw DowngradeError("downgrade_divisor: not an integral section of alpha");

  const RatMatrix& s = d.weights();
  const RatMatrix beta = d.beta();
  PolyhedralDivisor pd;
  pd.base = chow;
  pd.section = section;
  pd.tail = map_cone(d.sigma(), s, MapDirection::preimage);
  for (const auto& v : chow.rays()) {
    const RatVector lifted = section * v;
    std::vector<AffineHalfspace> halfspaces;
    for (const auto& f : d.sigma().facets()) halfspaces.push_back({beta * f, -dot(f, lifted)});
    pd.coefficients.push_back(Polyhedron::from_inequalities(k, halfspaces));
  }
  return pd;
}

QDivisor evaluate_divisor(const PolyhedralDivisor& pd, const RatVector& chi) {
  QDivisor out;
  for (const auto& delta : pd.coefficients) {
    if (delta.is_empty()) throw DowngradeError("evaluate_divisor: empty coefficient");
    auto h = support_value(delta, chi);
    if (!h) throw DowngradeError("evaluate_divisor: character " + to_string(chi) + " gives an infinite value");
    out.coefficients.push_back(*h);
  }
  return out;
}

Polyhedron section_polyhedron(const Fan& base, const QDivisor& qd) {
  if (qd.coefficients.size() != base.rays().size()) throw DowngradeError("section_polyhedron: coefficient count mismatch");
  std::vector<AffineHalfspace> halfspaces;
  for (std::size_t i = 0; i < qd.coefficients.size(); ++i)
    halfspaces.push_back({base.rays()[i], Rat(-floor_of(qd.coefficients[i]))});
  std::vector<AffineHyperplane> hyperplanes;
  for (const auto& l : base.lineality()) hyperplanes.push_back({l, 0});
  return Polyhedron::from_inequalities(base.ambient_dim(), halfspaces, hyperplanes);
}

SectionCount section_count_check(const TorusDowngrade& d, const PolyhedralDivisor& pd, const RatVector& chi) {
  const FiberPolyhedron fiber = d.fiber(chi);
  if (!fiber.polytope.is_bounded()) throw DowngradeError("section_count_check: P_chi is unbounded");
  const Polyhedron sections = section_polyhedron(pd.base, evaluate_divisor(pd, chi));
  if (!sections.is_bounded()) throw DowngradeError("section_count_check: section polyhedron is unbounded");
  SectionCount c;
  c.lhs = count_lattice_points(sections);
  c.rhs = fiber.lattice == FiberPolyhedron::Lattice::aligned ? count_lattice_points(fiber.polytope) : 0;
  c.equal = c.lhs == c.rhs;
  return c;
}

RatMatrix random_section(const TorusDowngrade& d, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  RatMatrix k(d.subtorus_rank(), d.quotient_rank());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) k(i, j) = dist(rng);
  return d.section() + d.weights() * k;
}

}  // namespace torusfan
