#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>

#include "double_description.hpp"
#include "torusfan/kernels.hpp"
#include "torusfan/polyhedra.hpp"

namespace torusfan {

namespace {

constexpr std::size_t kBatch = 512;
const Int kMaxBoxPoints = Int(200'000'000);

struct IntegerRows {
  std::vector<std::vector<Int>> normals;
  std::vector<Int> offsets;
};

// a.x >= b scaled to integers; hyperplanes become two opposite rows.
IntegerRows integer_rows(const Polyhedron& p) {
  IntegerRows rows;
  auto push = [&rows](const RatVector& a, const Rat& b) {
    RatVector both = a;
    both.push_back(b);
    Int den_lcm = 1;
    for (const Rat& q : both) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> row(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) row[j] = a[j].get_num() * (den_lcm / a[j].get_den());
    rows.normals.push_back(std::move(row));
    rows.offsets.push_back(b.get_num() * (den_lcm / b.get_den()));
  };
  for (const auto& h : p.halfspaces()) push(h.normal, h.offset);
  for (const auto& h : p.hyperplanes()) {
    push(h.normal, h.offset);
    push(-h.normal, -h.offset);
  }
  return rows;
}

IntBox vertex_box(const Polyhedron& p) {
  const std::size_t n = p.ambient_dim();
  IntBox box(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat lo = p.vertices().front()[j], hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    box[j] = {ceil_of(lo), floor_of(hi)};
  }
  return box;
}

bool fits_int32(const Int& x) { return x >= INT32_MIN && x <= INT32_MAX; }

// Visits every lattice point of p inside box in lexicographic order.
void enumerate(const Polyhedron& p, const IntBox& box, const std::function<void(const std::vector<Int>&)>& visit) {
  const std::size_t n = p.ambient_dim();
  Int volume = 1;
  for (const auto& [lo, hi] : box) {
    if (lo > hi) return;
    volume *= hi - lo + 1;
  }
  if (volume > kMaxBoxPoints) throw PolyhedronError("lattice point enumeration: search box too large");
  if (n == 0) {
    if (p.contains({})) visit({});
    return;
  }

  const IntegerRows rows = integer_rows(p);

  // Exactness check for the 32-bit kernels.
  bool fast = true;
  std::vector<Int> magnitude(n);
  for (std::size_t j = 0; j < n; ++j) {
    magnitude[j] = std::max(abs(box[j].first), abs(box[j].second));
    fast = fast && fits_int32(box[j].first) && fits_int32(box[j].second);
  }
  for (std::size_t r = 0; r < rows.normals.size() && fast; ++r) {
    Int bound = abs(rows.offsets[r]);
    for (std::size_t j = 0; j < n; ++j) bound += abs(rows.normals[r][j]) * magnitude[j];
    fast = fits_int32(bound);
  }

  std::vector<Int> point(n);
  for (std::size_t j = 0; j < n; ++j) point[j] = box[j].first;
  auto advance = [&]() {
    for (std::size_t j = n; j-- > 0;) {
      if (point[j] < box[j].second) {
        ++point[j];
        return true;
      }
      point[j] = box[j].first;
    }
    return false;
  };

  if (!fast) {
    do {
      bool ok = true;
      for (std::size_t r = 0; r < rows.normals.size() && ok; ++r) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += rows.normals[r][j] * point[j];
        ok = acc >= rows.offsets[r];
      }
      if (ok) visit(point);
    } while (advance());
    return;
  }

  std::vector<std::int32_t> normals, offsets;
  for (std::size_t r = 0; r < rows.normals.size(); ++r) {
    for (const Int& a : rows.normals[r]) normals.push_back(static_cast<std::int32_t>(a.get_si()));
    offsets.push_back(static_cast<std::int32_t>(rows.offsets[r].get_si()));
  }
  const kernels::HalfspaceRows krows{normals.data(), offsets.data(), rows.normals.size(), n};
  const kernels::HalfspaceFilterFn filter = kernels::halfspace_filter(kernels::selected_isa());

  std::vector<std::int32_t> coords(n * kBatch);
  std::vector<std::uint8_t> mask(kBatch);
  std::vector<std::int32_t> cur(n);
  for (std::size_t j = 0; j < n; ++j) cur[j] = static_cast<std::int32_t>(box[j].first.get_si());
  std::vector<std::int32_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = static_cast<std::int32_t>(box[j].first.get_si());
    hi[j] = static_cast<std::int32_t>(box[j].second.get_si());
  }
  bool more = true;
  std::vector<Int> out(n);
  while (more) {
    std::size_t count = 0;
    while (more && count < kBatch) {
      for (std::size_t j = 0; j < n; ++j) coords[j * kBatch + count] = cur[j];
      ++count;
      more = false;
      for (std::size_t j = n; j-- > 0;) {
        if (cur[j] < hi[j]) {
          ++cur[j];
          more = true;
          break;
        }
        cur[j] = lo[j];
      }
    }
    filter(krows, coords.data(), kBatch, count, mask.data());
    for (std::size_t i = 0; i < count; ++i) {
      if (!mask[i]) continue;
      for (std::size_t j = 0; j < n; ++j) out[j] = coords[j * kBatch + i];
      visit(out);
    }
  }
}

IntBox resolve_box(const Polyhedron& p, const std::optional<IntBox>& box) {
  if (box) {
    if (box->size() != p.ambient_dim()) throw PolyhedronError("lattice_points: box dimension mismatch");
    if (!p.is_bounded()) return *box;
    IntBox tight = vertex_box(p);
    for (std::size_t j = 0; j < tight.size(); ++j) {
      tight[j].first = std::max(tight[j].first, (*box)[j].first);
      tight[j].second = std::min(tight[j].second, (*box)[j].second);
    }
    return tight;
  }
  if (!p.is_bounded()) throw PolyhedronError("lattice_points: unbounded polyhedron needs a bounding box");
  return vertex_box(p);
}

RatVector to_rat(const std::vector<Int>& v) {
  RatVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j];
  return out;
}

}  // namespace

std::vector<RatVector> lattice_points(const Polyhedron& p, const std::optional<IntBox>& box) {
  if (p.is_empty()) return {};
  std::vector<RatVector> out;
  enumerate(p, resolve_box(p, box), [&out](const std::vector<Int>& x) { out.push_back(to_rat(x)); });
  return out;
}

std::size_t count_lattice_points(const Polyhedron& p, const std::optional<IntBox>& box) {
  if (p.is_empty()) return 0;
  std::size_t count = 0;
  enumerate(p, resolve_box(p, box), [&count](const std::vector<Int>&) { ++count; });
  return count;
}

Polyhedron integer_hull(const Polyhedron& p) {
  const std::size_t n = p.ambient_dim();
  if (p.is_empty()) return Polyhedron::empty(n);

  // Every lattice point of P reduces, by integer multiples of recession
  // generators, into conv(vertices) + zonotope(generators).
  std::vector<RatVector> gens = p.rays();
  for (const auto& l : p.lineality()) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  IntBox box(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat lo = p.vertices().front()[j], hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    for (const auto& g : gens) {
      if (sgn(g[j]) < 0) lo += g[j];
      if (sgn(g[j]) > 0) hi += g[j];
    }
    box[j] = {ceil_of(lo), floor_of(hi)};
  }

  // Points come in lexicographic order, so runs along the last coordinate are
  // contiguous; only the ends of each run can be vertices.
  std::vector<RatVector> candidates;
  std::vector<Int> run_first, run_last;
  bool open = false;
  auto flush = [&]() {
    if (!open) return;
    candidates.push_back(to_rat(run_first));
    if (run_last != run_first) candidates.push_back(to_rat(run_last));
    open = false;
  };
  enumerate(p, box, [&](const std::vector<Int>& x) {
    if (open && std::equal(x.begin(), x.end() - 1, run_last.begin()) && x.back() == run_last.back() + 1) {
      run_last = x;
      return;
    }
    flush();
    run_first = run_last = x;
    open = true;
  });
  flush();
  if (candidates.empty()) return Polyhedron::empty(n);
  return Polyhedron::from_generators(n, candidates, p.rays(), p.lineality());
}

Polyhedron integer_hull(const FiberPolyhedron& fiber) {
  switch (fiber.lattice) {
    case FiberPolyhedron::Lattice::aligned:
      return integer_hull(fiber.polytope);
    case FiberPolyhedron::Lattice::no_lattice_points:
      return Polyhedron::empty(fiber.polytope.ambient_dim());
    case FiberPolyhedron::Lattice::unknown:
      break;
  }
  throw PolyhedronError("integer_hull: fiber is not expressed in lattice coordinates");
}

}  // namespace torusfan
