#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "torusfan/pdivisor.hpp"
#include "torusfan/quotients.hpp"

using namespace torusfan;
using oracle::v;

namespace {

std::size_t ray_index(const Fan& f, const RatVector& r) {
  for (std::size_t i = 0; i < f.rays().size(); ++i)
    if (f.rays()[i] == r) return i;
  FAIL("ray not in fan: " << to_string(r));
  return 0;
}

// Points of P_chi counted with the plain box scan: P_chi ⊂ [0, chi]^n for
// the orthant with positive weights.
std::size_t brute_fiber_count(const TorusDowngrade& d, long chi) {
  std::vector<AffineHalfspace> hs;
  for (const auto& r : d.sigma().rays()) hs.push_back({r, 0});
  std::vector<AffineHyperplane> eq;
  for (std::size_t i = 0; i < d.beta().rows(); ++i) eq.push_back({d.beta().row(i), Rat(chi)});
  return oracle::lattice_points(d.rank(), hs, eq, 0, chi).size();
}

}  // namespace

TEST_CASE("blow-up of the plane: coefficients and values") {
  const TorusDowngrade d = oracle::example_blowup(2);
  const RatMatrix& a = d.alpha();
  RatMatrix s(2, 1);
  s(0, 0) = a(0, 0) == 1 ? 1 : -1;
  REQUIRE(a * s == RatMatrix::identity(1));
  const PolyhedralDivisor pd = downgrade_divisor(d, chow_quotient_fan(d), s);
  REQUIRE(pd.coefficients.size() == 2);
  const std::size_t i1 = ray_index(pd.base, primitive(a * v({1, 0})));
  const std::size_t i2 = ray_index(pd.base, primitive(a * v({0, 1})));
  CHECK(pd.coefficients[i1] == Polyhedron::from_generators(1, {v({0})}, {v({1})}));
  CHECK(pd.coefficients[i2] == Polyhedron::from_generators(1, {v({1})}, {v({1})}));
  CHECK(pd.tail == Cone::from_generators(1, {v({1})}));
  for (const auto& c : pd.coefficients) CHECK(recession_cone(c) == pd.tail);

  const QDivisor q5 = evaluate_divisor(pd, v({5}));
  CHECK(q5.coefficients[i1] == 0);
  CHECK(q5.coefficients[i2] == 5);
  for (const Rat& x : evaluate_divisor(pd, v({0})).coefficients) CHECK(x == 0);
  CHECK_THROWS(evaluate_divisor(pd, v({-1})));

  const Polyhedron sp = section_polyhedron(pd.base, q5);
  CHECK(count_lattice_points(sp) == 6);

  const SectionCount c = section_count_check(d, pd, v({5}));
  CHECK(c.lhs == 6);
  CHECK(c.rhs == 6);
  CHECK(c.equal);
  CHECK(section_count_check(d, pd, v({0})).lhs == 1);
}

TEST_CASE("invalid sections are rejected") {
  const TorusDowngrade d = oracle::example_blowup(2);
  RatMatrix bad(2, 1);
  bad(0, 0) = 1;
  bad(1, 0) = 1;  // alpha * bad = 0
  CHECK_THROWS(downgrade_divisor(d, chow_quotient_fan(d), bad));
  RatMatrix frac(2, 1);
  frac(0, 0) = Rat(1, 2);
  frac(1, 0) = Rat(-1, 2);
  if (d.alpha() * frac == RatMatrix::identity(1)) CHECK_THROWS(downgrade_divisor(d, chow_quotient_fan(d), frac));
}

TEST_CASE("counts agree with brute force for several sections") {
  struct Case {
    TorusDowngrade d;
    std::vector<std::size_t> expected;  // chi = 0..6, empty to skip the closed form
  };
  std::vector<Case> cases{
      {oracle::example_blowup(2), {1, 2, 3, 4, 5, 6, 7}},
      {oracle::example_blowup(3), {1, 3, 6, 10, 15, 21, 28}},
      {oracle::example_weighted_112(), {1, 2, 4, 6, 9, 12, 16}},
      {oracle::orthant_downgrade({{2, 3, 5}}), {}},
  };
  std::mt19937_64 rng(5);
  for (const auto& c : cases) {
    const Fan chow = chow_quotient_fan(c.d);
    std::vector<RatMatrix> sections{c.d.section()};
    for (int k = 0; k < 3; ++k) sections.push_back(random_section(c.d, rng));
    for (const RatMatrix& s : sections) {
      CHECK(s.is_integer());
      CHECK(c.d.alpha() * s == RatMatrix::identity(c.d.quotient_rank()));
      const PolyhedralDivisor pd = downgrade_divisor(c.d, chow, s);
      for (long chi = 0; chi <= 6; ++chi) {
        const SectionCount sc = section_count_check(c.d, pd, v({chi}));
        CHECK(sc.equal);
        CHECK(sc.rhs == brute_fiber_count(c.d, chi));
        if (!c.expected.empty()) CHECK(sc.lhs == c.expected[chi]);
      }
    }
  }
}

TEST_CASE("superadditivity and the tail") {
  const TorusDowngrade d = oracle::orthant_downgrade({{1, 2, 3}});
  const PolyhedralDivisor pd = downgrade_divisor(d, chow_quotient_fan(d), d.section());
  for (const auto& c : pd.coefficients) CHECK(recession_cone(c) == pd.tail);
  CHECK(pd.tail == map_cone(d.sigma(), d.weights(), MapDirection::preimage));
  for (long a = 0; a <= 5; ++a)
    for (long b = 0; b <= 5; ++b) {
      const auto qa = evaluate_divisor(pd, v({a})), qb = evaluate_divisor(pd, v({b})),
                 qab = evaluate_divisor(pd, v({a + b}));
      for (std::size_t i = 0; i < qab.coefficients.size(); ++i)
        CHECK(qab.coefficients[i] >= qa.coefficients[i] + qb.coefficients[i]);
    }
}

TEST_CASE("big torus: empty divisor over a point") {
  const TorusDowngrade full(Cone::orthant(2), RatMatrix::identity(2));
  const PolyhedralDivisor pd = downgrade_divisor(full, chow_quotient_fan(full), full.section());
  CHECK(pd.coefficients.empty());
  CHECK(pd.tail == Cone::orthant(2));
  const SectionCount c = section_count_check(full, pd, v({2, 3}));
  CHECK(c.lhs == 1);
  CHECK(c.rhs == 1);
}

TEST_CASE("random downgrades with bounded fibers") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 25; ++t) {
    const auto sc = oracle::random_scenario(rng, 3);
    const TorusDowngrade d(sc.sigma, sc.weights);
    const Cone w = weight_cone(d);
    if (!w.is_pointed()) continue;  // unbounded fibers
    const RatVector chi0 = w.relint_point();
    if (!d.fiber(chi0).polytope.is_bounded()) continue;
    INFO(sc.describe());
    ++checked;
    const PolyhedralDivisor pd = downgrade_divisor(d, chow_quotient_fan(d), random_section(d, rng));
    for (long k = 0; k <= 3; ++k) CHECK(section_count_check(d, pd, Rat(k) * chi0).equal);
    for (const auto& r : w.rays()) CHECK(section_count_check(d, pd, r + chi0).equal);
  }
  CHECK(checked >= 10);
}
