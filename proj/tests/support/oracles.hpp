#pragma once

// Brute-force references used by the tests. None of these go through the
// double description code: vertices and rays come from enumerating
// constraint subsets, lattice points from a plain box scan.

#include <random>
#include <string>
#include <vector>

#include "torusfan/fans.hpp"
#include "torusfan/gitfan.hpp"
#include "torusfan/polyhedra.hpp"

namespace oracle {

using torusfan::Rat;
using torusfan::RatVector;

/// Vertices of {x : <a,x> >= b} ∩ {<e,x> = c} by solving every square subsystem.
std::vector<RatVector> polytope_vertices(std::size_t dim, const std::vector<torusfan::AffineHalfspace>& halfspaces,
                                         const std::vector<torusfan::AffineHyperplane>& hyperplanes = {});

/// Extreme rays of the pointed cone {x : <a,x> >= 0}, primitive and sorted.
std::vector<RatVector> cone_rays(std::size_t dim, const std::vector<RatVector>& normals);

/// Facet normals of the full-dimensional cone generated by gens, primitive and sorted.
std::vector<RatVector> cone_facets(std::size_t dim, const std::vector<RatVector>& gens);

/// Lattice points of {x : <a,x> >= b, <e,x> = c} inside [lo, hi]^dim, lex order.
std::vector<RatVector> lattice_points(std::size_t dim, const std::vector<torusfan::AffineHalfspace>& halfspaces,
                                      const std::vector<torusfan::AffineHyperplane>& hyperplanes, long lo, long hi);

/// Point lies in some maximal cone.
bool in_support(const torusfan::Fan& f, const RatVector& x);

/// The cone of the fan whose relative interior holds x (exists when x is in the support).
torusfan::Cone carrier(const torusfan::Fan& f, const RatVector& x);

RatVector random_point(std::mt19937_64& rng, std::size_t dim, long spread);

std::vector<RatVector> sorted_primitive(std::vector<RatVector> vs);

/// Small random downgrade: rank 2..4, sigma spanned by random rays and
/// weights of rank 1..n-1, entries in [-3, 3].
struct RandomScenario {
  torusfan::Cone sigma;
  torusfan::RatMatrix weights;
  std::string describe() const;
};
RandomScenario random_scenario(std::mt19937_64& rng, std::size_t max_rank = 4);

/// Fan from explicit generator lists, each vector pushed through m first
/// (rows of m x columns), and made primitive.
torusfan::Fan fan_from_lists(const torusfan::RatMatrix& m, const std::vector<std::vector<RatVector>>& cones);

RatVector v(std::initializer_list<long> xs);

/// sigma = positive orthant of Q^n, one weight vector per entry of `weights`.
torusfan::TorusDowngrade orthant_downgrade(const std::vector<std::vector<long>>& weights);
/// t.(x1,x2,x3,x4) = (t x1, t x2, t^-1 x3, t^-1 x4)
torusfan::TorusDowngrade example_antidiagonal();
/// t.(x1,x2,x3) = (t x1, t x2, t^2 x3)
torusfan::TorusDowngrade example_weighted_112();
/// scalar action on A^n
torusfan::TorusDowngrade example_blowup(std::size_t n);

}  // namespace oracle
