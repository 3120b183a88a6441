#include "torusfan/cones.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "double_description.hpp"

namespace torusfan {

namespace {

using detail::integerize;
using detail::IntVector;
using detail::to_rat;

void require_dim(const std::vector<RatVector>& vs, std::size_t dim, const char* what) {
  for (const auto& v : vs)
    if (v.size() != dim) throw LinAlgError(std::string(what) + ": dimension mismatch");
}

std::vector<RatVector> reduce_modulo(const std::vector<RatVector>& vectors,
                                     const std::vector<RatVector>& subspace, std::size_t dim) {
  ComplementProjector project(subspace, dim);
  std::vector<RatVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    RatVector p = project(v);
    if (!is_zero(p)) out.push_back(primitive(p));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::strong_ordering compare_lists(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lex_less(a[i], b[i])) return std::strong_ordering::less;
    if (lex_less(b[i], a[i])) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<RatVector> concat(std::vector<RatVector> a, const std::vector<RatVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Cone Cone::canonical(std::size_t dim, std::vector<RatVector> rays, std::vector<RatVector> lineality,
                     std::vector<RatVector> facets, std::vector<RatVector> equations) {
  Cone c;
  c.dim_ = dim;
  c.lineality_ = canonical_basis(lineality, dim);
  c.equations_ = canonical_basis(equations, dim);
  c.rays_ = reduce_modulo(rays, c.lineality_, dim);
  c.facets_ = reduce_modulo(facets, c.equations_, dim);
  return c;
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<RatVector>& normals,
                             const std::vector<RatVector>& equations) {
  require_dim(normals, dim, "Cone::from_inequalities");
  require_dim(equations, dim, "Cone::from_inequalities");
  std::vector<IntVector> constraints;
  for (const auto& a : normals) constraints.push_back(integerize(a));
  for (const auto& e : equations) {
    IntVector v = integerize(e);
    constraints.push_back(v);
    for (auto& x : v) x = -x;
    constraints.push_back(std::move(v));
  }
  detail::DdResult dd = detail::double_description(dim, constraints);
  std::vector<RatVector> rays, lin;
  for (const auto& r : dd.rays) rays.push_back(to_rat(r));
  for (const auto& l : dd.lineality) lin.push_back(to_rat(l));

  std::vector<RatVector> eqs = orthogonal_complement(concat(rays, lin), dim);
  const std::size_t cone_dim = dim - eqs.size();
  std::vector<RatVector> facets;
  for (const auto& a : normals) {
    if (is_zero(a)) continue;
    std::vector<RatVector> tight = lin;
    bool vanishes = true;
    for (const auto& r : rays) {
      if (sgn(dot(a, r)) == 0)
        tight.push_back(r);
      else
        vanishes = false;
    }
    if (vanishes) continue;
    if (rank(tight, dim) + 1 == cone_dim) facets.push_back(a);
  }
  return canonical(dim, std::move(rays), std::move(lin), std::move(facets), std::move(eqs));
}

Cone Cone::from_generators(std::size_t dim, const std::vector<RatVector>& rays,
                           const std::vector<RatVector>& lineality) {
  require_dim(rays, dim, "Cone::from_generators");
  require_dim(lineality, dim, "Cone::from_generators");
  std::vector<IntVector> constraints;
  for (const auto& g : rays) constraints.push_back(integerize(g));
  for (const auto& l : lineality) {
    IntVector v = integerize(l);
    constraints.push_back(v);
    for (auto& x : v) x = -x;
    constraints.push_back(std::move(v));
  }
  detail::DdResult dd = detail::double_description(dim, constraints);
  std::vector<RatVector> facets, eqs;
  for (const auto& f : dd.rays) facets.push_back(to_rat(f));
  for (const auto& e : dd.lineality) eqs.push_back(to_rat(e));

  std::vector<RatVector> lin = orthogonal_complement(concat(facets, eqs), dim);
  std::vector<RatVector> extreme;
  for (const auto& g : rays) {
    std::vector<RatVector> tight = eqs;
    for (const auto& f : facets)
      if (sgn(dot(f, g)) == 0) tight.push_back(f);
    if (rank(tight, dim) + lin.size() + 1 == dim) extreme.push_back(g);
  }
  return canonical(dim, std::move(extreme), std::move(lin), std::move(facets), std::move(eqs));
}

Cone Cone::whole_space(std::size_t dim) { return from_generators(dim, {}, RatMatrix::identity(dim).row_list()); }

Cone Cone::zero(std::size_t dim) { return from_generators(dim, {}); }

Cone Cone::orthant(std::size_t dim) { return from_generators(dim, RatMatrix::identity(dim).row_list()); }

Membership Cone::classify(const RatVector& v) const {
  if (v.size() != dim_) throw LinAlgError("Cone::classify: dimension mismatch");
  for (const auto& e : equations_)
    if (sgn(dot(e, v)) != 0) return Membership::outside;
  bool strict = true;
  for (const auto& f : facets_) {
    const int s = sgn(dot(f, v));
    if (s < 0) return Membership::outside;
    if (s == 0) strict = false;
  }
  return strict ? Membership::relative_interior : Membership::boundary;
}

bool Cone::contains(const Cone& other) const {
  if (other.dim_ != dim_) throw LinAlgError("Cone::contains: dimension mismatch");
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_) {
    for (const auto& e : equations_)
      if (sgn(dot(e, l)) != 0) return false;
    for (const auto& f : facets_)
      if (sgn(dot(f, l)) != 0) return false;
  }
  return true;
}

RatVector Cone::relint_point() const {
  RatVector p(dim_);
  for (const auto& r : rays_) p = p + r;
  return p;
}

Cone Cone::facet_face(std::size_t facet_index) const {
  const RatVector& f = facets_.at(facet_index);
  std::vector<RatVector> tight;
  for (const auto& r : rays_)
    if (sgn(dot(f, r)) == 0) tight.push_back(r);
  return from_generators(dim_, tight, lineality_);
}

Cone Cone::minimal_face_containing(const RatVector& v) const {
  std::vector<const RatVector*> tight_facets;
  for (const auto& f : facets_)
    if (sgn(dot(f, v)) == 0) tight_facets.push_back(&f);
  std::vector<RatVector> tight_rays;
  for (const auto& r : rays_) {
    bool on_all = std::all_of(tight_facets.begin(), tight_facets.end(),
                              [&](const RatVector* f) { return sgn(dot(*f, r)) == 0; });
    if (on_all) tight_rays.push_back(r);
  }
  return from_generators(dim_, tight_rays, lineality_);
}

bool Cone::is_face_of(const Cone& other) const {
  if (!other.contains(*this)) return false;
  return other.minimal_face_containing(relint_point()) == *this;
}

bool Cone::operator==(const Cone& other) const {
  return dim_ == other.dim_ && lineality_ == other.lineality_ && rays_ == other.rays_;
}

std::strong_ordering Cone::operator<=>(const Cone& other) const {
  if (auto c = dim_ <=> other.dim_; c != 0) return c;
  if (auto c = dim() <=> other.dim(); c != 0) return c;
  if (auto c = compare_lists(lineality_, other.lineality_); c != 0) return c;
  return compare_lists(rays_, other.rays_);
}

// ------------------------------------------------------------ free functions

Cone dd_convert(std::size_t dim, ConeInput kind, const std::vector<RatVector>& vectors,
                const std::vector<RatVector>& linear_part) {
  return kind == ConeInput::generators ? Cone::from_generators(dim, vectors, linear_part)
                                       : Cone::from_inequalities(dim, vectors, linear_part);
}

Cone dual_cone(const Cone& c) {
  Cone d;
  d.dim_ = c.dim_;
  d.rays_ = c.facets_;
  d.lineality_ = c.equations_;
  d.facets_ = c.rays_;
  d.equations_ = c.lineality_;
  return d;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw LinAlgError("intersect: dimension mismatch");
  return Cone::from_inequalities(a.ambient_dim(), concat(a.facets(), b.facets()),
                                 concat(a.equations(), b.equations()));
}

Cone map_cone(const Cone& c, const RatMatrix& m, MapDirection direction) {
  if (direction == MapDirection::image) {
    if (m.cols() != c.ambient_dim()) throw LinAlgError("map_cone: dimension mismatch");
    std::vector<RatVector> rays, lin;
    for (const auto& r : c.rays()) rays.push_back(m * r);
    for (const auto& l : c.lineality()) lin.push_back(m * l);
    return Cone::from_generators(m.rows(), rays, lin);
  }
  if (m.rows() != c.ambient_dim()) throw LinAlgError("map_cone: dimension mismatch");
  const RatMatrix mt = m.transpose();
  std::vector<RatVector> normals, eqs;
  for (const auto& f : c.facets()) normals.push_back(mt * f);
  for (const auto& e : c.equations()) eqs.push_back(mt * e);
  return Cone::from_inequalities(m.cols(), normals, eqs);
}

std::vector<Cone> faces(const Cone& c) {
  const std::size_t nr = c.rays().size();
  std::vector<std::vector<bool>> tight(c.facets().size(), std::vector<bool>(nr));
  for (std::size_t f = 0; f < c.facets().size(); ++f)
    for (std::size_t r = 0; r < nr; ++r) tight[f][r] = sgn(dot(c.facets()[f], c.rays()[r])) == 0;

  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(nr, true)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& t : tight) {
      std::vector<bool> next(nr);
      for (std::size_t r = 0; r < nr; ++r) next[r] = queue[head][r] && t[r];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Cone> out;
  out.reserve(queue.size());
  for (const auto& subset : queue) {
    std::vector<RatVector> rays;
    for (std::size_t r = 0; r < nr; ++r)
      if (subset[r]) rays.push_back(c.rays()[r]);
    out.push_back(Cone::from_generators(c.ambient_dim(), rays, c.lineality()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RatVector relint_point(const Cone& c) { return c.relint_point(); }

Membership contains_point(const Cone& c, const RatVector& v) { return c.classify(v); }

}  // namespace torusfan
