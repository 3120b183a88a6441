#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace oracle {

using namespace torusfan;

namespace {

// Calls f on every k-subset of {0..n-1}.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

RatVector v(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.push_back(Rat(x));
  return out;
}

std::vector<RatVector> sorted_primitive(std::vector<RatVector> vs) {
  for (auto& x : vs) x = primitive(x);
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<RatVector> polytope_vertices(std::size_t dim, const std::vector<AffineHalfspace>& halfspaces,
                                         const std::vector<AffineHyperplane>& hyperplanes) {
  std::vector<RatVector> out;
  auto feasible = [&](const RatVector& x) {
    for (const auto& h : halfspaces)
      if (dot(h.normal, x) < h.offset) return false;
    for (const auto& h : hyperplanes)
      if (dot(h.normal, x) != h.offset) return false;
    return true;
  };
  for (std::size_t k = 0; k <= std::min(dim, halfspaces.size()); ++k)
    for_each_subset(halfspaces.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<RatVector> rows;
      RatVector rhs;
      for (const auto& h : hyperplanes) {
        rows.push_back(h.normal);
        rhs.push_back(h.offset);
      }
      for (std::size_t i : idx) {
        rows.push_back(halfspaces[i].normal);
        rhs.push_back(halfspaces[i].offset);
      }
      if (rows.empty()) {
        if (dim == 0) out.push_back({});
        return;
      }
      const RatMatrix a = RatMatrix::from_rows(rows, dim);
      if (rank(a) != dim) return;
      auto x = solve_rational(a, rhs);
      if (x && feasible(*x)) out.push_back(*x);
    });
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatVector> cone_rays(std::size_t dim, const std::vector<RatVector>& normals) {
  std::vector<RatVector> out;
  for_each_subset(normals.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> rows;
    for (std::size_t i : idx) rows.push_back(normals[i]);
    const auto null = nullspace(RatMatrix::from_rows(rows, dim));
    if (null.size() != 1) return;
    for (const RatVector& cand : {null[0], -null[0]}) {
      bool ok = std::all_of(normals.begin(), normals.end(), [&](const RatVector& a) { return sgn(dot(a, cand)) >= 0; });
      if (ok) out.push_back(cand);
    }
  });
  return sorted_primitive(out);
}

std::vector<RatVector> cone_facets(std::size_t dim, const std::vector<RatVector>& gens) {
  std::vector<RatVector> out;
  for_each_subset(gens.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> rows;
    for (std::size_t i : idx) rows.push_back(gens[i]);
    const auto null = nullspace(RatMatrix::from_rows(rows, dim));
    if (null.size() != 1) return;
    for (const RatVector& cand : {null[0], -null[0]}) {
      bool ok = std::all_of(gens.begin(), gens.end(), [&](const RatVector& g) { return sgn(dot(g, cand)) >= 0; });
      if (ok) out.push_back(cand);
    }
  });
  return sorted_primitive(out);
}

std::vector<RatVector> lattice_points(std::size_t dim, const std::vector<AffineHalfspace>& halfspaces,
                                      const std::vector<AffineHyperplane>& hyperplanes, long lo, long hi) {
  std::vector<RatVector> out;
  std::vector<long> x(dim, lo);
  while (true) {
    RatVector p;
    for (long c : x) p.push_back(Rat(c));
    bool ok = true;
    for (const auto& h : halfspaces) ok = ok && dot(h.normal, p) >= h.offset;
    for (const auto& h : hyperplanes) ok = ok && dot(h.normal, p) == h.offset;
    if (ok) out.push_back(p);
    std::size_t j = dim;
    while (j > 0 && x[j - 1] == hi) x[--j] = lo;
    if (j == 0) break;
    ++x[j - 1];
  }
  return out;
}

bool in_support(const Fan& f, const RatVector& x) {
  return std::any_of(f.maximal_cones().begin(), f.maximal_cones().end(), [&](const Cone& c) { return c.contains(x); });
}

Cone carrier(const Fan& f, const RatVector& x) {
  for (const auto& c : f.maximal_cones())
    if (c.contains(x)) return c.minimal_face_containing(x);
  throw std::logic_error("carrier: point outside the support");
}

RatVector random_point(std::mt19937_64& rng, std::size_t dim, long spread) {
  std::uniform_int_distribution<long> d(-spread, spread);
  RatVector p;
  for (std::size_t i = 0; i < dim; ++i) p.push_back(Rat(d(rng)));
  return p;
}

std::string RandomScenario::describe() const {
  std::ostringstream s;
  s << "sigma rays";
  for (const auto& r : sigma.rays()) s << ' ' << to_string(r);
  s << " weights";
  for (std::size_t j = 0; j < weights.cols(); ++j) s << ' ' << to_string(weights.col(j));
  return s.str();
}

RandomScenario random_scenario(std::mt19937_64& rng, std::size_t max_rank) {
  std::uniform_int_distribution<std::size_t> rank_dist(2, max_rank);
  std::uniform_int_distribution<long> entry(-3, 3);
  const std::size_t n = rank_dist(rng);
  while (true) {
    std::uniform_int_distribution<std::size_t> extra(0, 2);
    const std::size_t k = n + extra(rng);
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < k; ++i) {
      RatVector g;
      for (std::size_t j = 0; j < n; ++j) g.push_back(Rat(entry(rng)));
      if (!is_zero(g)) gens.push_back(g);
    }
    Cone sigma = Cone::from_generators(n, gens);
    if (!sigma.is_pointed() || !sigma.is_full_dimensional()) continue;

    std::uniform_int_distribution<std::size_t> d_dist(1, n - 1);
    const std::size_t d = d_dist(rng);
    std::vector<RatVector> cols;
    for (std::size_t i = 0; i < d; ++i) {
      RatVector w;
      for (std::size_t j = 0; j < n; ++j) w.push_back(Rat(entry(rng)));
      cols.push_back(w);
    }
    RatMatrix weights = RatMatrix::from_columns(cols, n);
    if (rank(weights) != d) continue;
    return {std::move(sigma), std::move(weights)};
  }
}

Fan fan_from_lists(const RatMatrix& m, const std::vector<std::vector<RatVector>>& cones) {
  std::vector<Cone> built;
  for (const auto& gens : cones) {
    std::vector<RatVector> mapped;
    for (const auto& g : gens) mapped.push_back(primitive(m * g));
    built.push_back(Cone::from_generators(m.rows(), mapped));
  }
  return Fan::from_cones(m.rows(), std::move(built), true);
}

TorusDowngrade orthant_downgrade(const std::vector<std::vector<long>>& weights) {
  const std::size_t n = weights.front().size();
  std::vector<RatVector> cols;
  for (const auto& w : weights) cols.push_back(from_ints(w));
  return TorusDowngrade(Cone::orthant(n), RatMatrix::from_columns(cols, n));
}

TorusDowngrade example_antidiagonal() { return orthant_downgrade({{1, 1, -1, -1}}); }
TorusDowngrade example_weighted_112() { return orthant_downgrade({{1, 1, 2}}); }
TorusDowngrade example_blowup(std::size_t n) { return orthant_downgrade({std::vector<long>(n, 1)}); }

}  // namespace oracle
