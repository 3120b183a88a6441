#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "torusfan/polyhedra.hpp"

using namespace torusfan;
using oracle::v;

namespace {

// A box [-3,3]^dim cut by a few random halfspaces; may be empty.
std::vector<AffineHalfspace> random_polytope_constraints(std::mt19937_64& rng, std::size_t dim) {
  std::vector<AffineHalfspace> hs;
  for (std::size_t i = 0; i < dim; ++i) {
    hs.push_back({unit_vector(dim, i), Rat(-3)});
    hs.push_back({-unit_vector(dim, i), Rat(-3)});
  }
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<long> off(-4, 2);
  std::uniform_int_distribution<long> den(1, 3);
  for (int k = count(rng); k > 0; --k) {
    RatVector a = oracle::random_point(rng, dim, 3);
    if (is_zero(a)) continue;
    Rat b(off(rng), den(rng));
    b.canonicalize();
    hs.push_back({a, b});
  }
  return hs;
}

Polyhedron random_polytope(std::mt19937_64& rng, std::size_t dim) {
  while (true) {
    Polyhedron p = Polyhedron::from_inequalities(dim, random_polytope_constraints(rng, dim));
    if (!p.is_empty()) return p;
  }
}

// P_chi for sigma = orthant in Q^3 and weights (1,1,2), in ambient coordinates.
Polyhedron p_chi_112(long chi) {
  return Polyhedron::from_inequalities(3, {{v({1, 0, 0}), 0}, {v({0, 1, 0}), 0}, {v({0, 0, 1}), 0}},
                                       {{v({1, 1, 2}), Rat(chi)}});
}

}  // namespace

TEST_CASE("vertices against subset enumeration") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 2 + t % 2;
    const auto hs = random_polytope_constraints(rng, dim);
    const Polyhedron p = Polyhedron::from_inequalities(dim, hs);
    const auto expected = oracle::polytope_vertices(dim, hs);
    CHECK(p.is_empty() == expected.empty());
    CHECK(p.vertices() == expected);
    if (!p.is_empty()) {
      CHECK(p.is_bounded());
      CHECK(Polyhedron::from_generators(dim, p.vertices()) == p);
    }
  }
}

TEST_CASE("recession cone") {
  const Polyhedron tri = Polyhedron::from_generators(2, {v({0, 0}), v({1, 0}), v({0, 1})});
  CHECK(recession_cone(tri) == Cone::zero(2));

  const Polyhedron p0 = Polyhedron::from_inequalities(
      4, {{v({1, 0, 0, 0}), 0}, {v({0, 1, 0, 0}), 0}, {v({0, 0, 1, 0}), 0}, {v({0, 0, 0, 1}), 0}},
      {{v({1, 1, -1, -1}), 0}});
  CHECK(p0.vertices() == std::vector<RatVector>{v({0, 0, 0, 0})});
  const Cone rec = recession_cone(p0);
  CHECK(rec.rays() == std::vector<RatVector>{v({0, 1, 0, 1}), v({0, 1, 1, 0}), v({1, 0, 0, 1}), v({1, 0, 1, 0})});
  CHECK(Polyhedron::from_cone(rec) == p0);

  const Polyhedron half = Polyhedron::from_inequalities(1, {{v({1}), 0}});
  CHECK(recession_cone(half) == Cone::from_generators(1, {v({1})}));
  CHECK_THROWS(recession_cone(Polyhedron::empty(2)));
}

TEST_CASE("minkowski sums and support values") {
  const Polyhedron seg = Polyhedron::from_generators(2, {v({1, 0}), v({0, 1})});
  CHECK(minkowski_sum(seg, Polyhedron::from_generators(2, {v({0, 0})})) == seg);
  CHECK(minkowski_sum(seg, seg) == Polyhedron::from_generators(2, {v({2, 0}), v({0, 2})}));

  CHECK(*support_value(seg, v({0, 0})) == 0);
  const Polyhedron ray1 = Polyhedron::from_generators(1, {v({1})}, {v({1})});
  CHECK(*support_value(ray1, v({5})) == 5);
  CHECK_FALSE(support_value(ray1, v({-1})));
  CHECK(*support_value(p_chi_112(2), v({1, 1, 1})) == 1);
  CHECK_THROWS(support_value(Polyhedron::empty(1), v({1})));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Polyhedron p = random_polytope(rng, 2), q = random_polytope(rng, 2);
    const Polyhedron s = minkowski_sum(p, q);
    // vertices of the sum are sums of vertices
    for (const auto& w : s.vertices()) {
      bool found = false;
      for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) found = found || a + b == w;
      CHECK(found);
    }
    for (int k = 0; k < 10; ++k) {
      const RatVector m1 = oracle::random_point(rng, 2, 3), m2 = oracle::random_point(rng, 2, 3);
      CHECK(*support_value(s, m1) == *support_value(p, m1) + *support_value(q, m1));
      // superadditivity
      CHECK(*support_value(p, m1 + m2) >= *support_value(p, m1) + *support_value(p, m2));
    }
  }
}

TEST_CASE("fiber polyhedra of the (1,1,2) action") {
  const Cone sigma_dual = Cone::orthant(3);
  const RatMatrix beta = RatMatrix::from_ints({{1, 1, 2}}, 3);
  const QuotientCoords qc = quotient_coords(beta.transpose());

  const FiberPolyhedron f2 = fiber_polyhedron(sigma_dual, beta, v({2}), qc.alpha);
  CHECK(f2.lattice == FiberPolyhedron::Lattice::aligned);
  auto amb = f2.ambient_vertices();
  std::sort(amb.begin(), amb.end(), lex_less);
  CHECK(amb == std::vector<RatVector>{v({0, 0, 1}), v({0, 2, 0}), v({2, 0, 0})});

  const FiberPolyhedron f3 = fiber_polyhedron(sigma_dual, beta, v({3}), qc.alpha);
  amb = f3.ambient_vertices();
  std::sort(amb.begin(), amb.end(), lex_less);
  CHECK(amb == std::vector<RatVector>{RatVector{0, 0, Rat(3, 2)}, v({0, 3, 0}), v({3, 0, 0})});

  CHECK(fiber_polyhedron(sigma_dual, beta, v({-1}), qc.alpha).polytope.is_empty());

  // the basepoint only translates
  const FiberPolyhedron f3b = fiber_polyhedron(sigma_dual, beta, v({3}), qc.alpha, false);
  CHECK(f3b.polytope.vertices().size() == 3);
  std::vector<RatVector> amb_b = f3b.ambient_vertices();
  std::sort(amb_b.begin(), amb_b.end(), lex_less);
  CHECK(amb_b == amb);

  // 4.1 at chi = 0: the cone P_0
  const RatMatrix beta4 = RatMatrix::from_ints({{1, 1, -1, -1}}, 4);
  const QuotientCoords q4 = quotient_coords(beta4.transpose());
  const FiberPolyhedron p0 = fiber_polyhedron(Cone::orthant(4), beta4, v({0}), q4.alpha);
  CHECK(p0.polytope.vertices().size() == 1);
  CHECK(p0.polytope.rays().size() == 4);
}

TEST_CASE("lattice points") {
  const Polyhedron p3 = p_chi_112(3);
  CHECK(lattice_points(p3) == std::vector<RatVector>{v({0, 1, 1}), v({0, 3, 0}), v({1, 0, 1}), v({1, 2, 0}), v({2, 1, 0}),
                                          v({3, 0, 0})});
  CHECK(lattice_points(Polyhedron::empty(2)).empty());
  CHECK(lattice_points(Polyhedron::from_generators(1, {v({0}), v({1})})) == std::vector<RatVector>{v({0}), v({1})});
  CHECK_THROWS(lattice_points(Polyhedron::from_inequalities(1, {{v({1}), 0}})));
  CHECK(lattice_points(Polyhedron::from_inequalities(1, {{v({1}), 0}}), IntBox{{Int(-2), Int(2)}}).size() == 3);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t dim = 2 + t % 2;
    const auto hs = random_polytope_constraints(rng, dim);
    const Polyhedron p = Polyhedron::from_inequalities(dim, hs);
    CHECK(lattice_points(p) == oracle::lattice_points(dim, hs, {}, -3, 3));
    CHECK(count_lattice_points(p) == oracle::lattice_points(dim, hs, {}, -3, 3).size());
  }

  // larger coordinates go through the exact path
  const Polyhedron big = Polyhedron::from_generators(1, {RatVector{Rat("3000000000")}, RatVector{Rat("3000000002")}});
  CHECK(lattice_points(big).size() == 3);
}

TEST_CASE("integer hulls") {
  CHECK(integer_hull(p_chi_112(2)) == p_chi_112(2));
  const Polyhedron trapezoid =
      Polyhedron::from_generators(3, {v({3, 0, 0}), v({0, 3, 0}), v({1, 0, 1}), v({0, 1, 1})});
  CHECK(integer_hull(p_chi_112(3)) == trapezoid);
  const Polyhedron cone = Polyhedron::from_cone(Cone::from_generators(2, {v({1, 2}), v({3, -1})}));
  CHECK(integer_hull(cone) == cone);
  CHECK(integer_hull(Polyhedron::from_generators(1, {RatVector{Rat(1, 3)}, RatVector{Rat(2, 3)}})).is_empty());

  std::mt19937_64 rng(4);
  for (int t = 0; t < 150; ++t) {
    const std::size_t dim = 2 + t % 2;
    const auto hs = random_polytope_constraints(rng, dim);
    const Polyhedron p = Polyhedron::from_inequalities(dim, hs);
    const auto pts = oracle::lattice_points(dim, hs, {}, -3, 3);
    const Polyhedron hull = integer_hull(p);
    if (pts.empty()) {
      CHECK(hull.is_empty());
      continue;
    }
    CHECK(hull == Polyhedron::from_generators(dim, pts));
    for (const auto& w : hull.vertices()) CHECK(is_integer(w));
  }

  // unbounded: {y >= x/2, y >= -x/2 + 1/3} has lattice hull with integral vertices
  const Polyhedron wedge = Polyhedron::from_inequalities(2, {{RatVector{Rat(-1, 2), 1}, 0}, {RatVector{Rat(1, 2), 1}, Rat(1, 3)}});
  const Polyhedron wh = integer_hull(wedge);
  CHECK(recession_cone(wh) == recession_cone(wedge));
  for (const auto& w : wh.vertices()) CHECK(is_integer(w));
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) CHECK(wedge.contains(v({x, y})) == wh.contains(v({x, y})));
}
