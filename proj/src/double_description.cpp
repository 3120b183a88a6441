#include "double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <utility>

namespace torusfan::detail {

namespace {

using Bits = boost::dynamic_bitset<>;

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVector& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// s*a - t*b, made primitive
IntVector combine(const Int& s, const IntVector& a, const Int& t, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] - t * b[i];
  make_primitive(out);
  return out;
}

bool is_zero(const IntVector& v) {
  for (const Int& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

struct Ray {
  IntVector v;
  Bits tight;
};

}  // namespace

IntVector integerize(const RatVector& v) {
  Int den_lcm = 1;
  for (const Rat& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (den_lcm / v[i].get_den());
  make_primitive(out);
  return out;
}

RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

DdResult double_description(std::size_t dim, const std::vector<IntVector>& inequalities) {
  const std::size_t m = inequalities.size();
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVector& a = inequalities[k];
    if (is_zero(a)) {
      for (Ray& r : rays) r.tight.set(k);
      continue;
    }

    // A lineality direction not orthogonal to `a` becomes a ray.
    std::size_t hit = lineality.size();
    Int hit_val;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      hit_val = dot(a, lineality[i]);
      if (sgn(hit_val) != 0) {
        hit = i;
        break;
      }
    }
    if (hit < lineality.size()) {
      IntVector l = lineality[hit];
      if (sgn(hit_val) < 0) {
        for (Int& x : l) x = -x;
        hit_val = -hit_val;
      }
      std::vector<IntVector> next_lin;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == hit) continue;
        Int t = dot(a, lineality[i]);
        if (sgn(t) == 0)
          next_lin.push_back(lineality[i]);
        else
          next_lin.push_back(combine(hit_val, lineality[i], t, l));
      }
      for (Ray& r : rays) {
        Int t = dot(a, r.v);
        if (sgn(t) != 0) r.v = combine(hit_val, r.v, t, l);
        r.tight.set(k);
      }
      Bits tight(m);
      for (std::size_t j = 0; j < k; ++j) tight.set(j);
      rays.push_back({std::move(l), std::move(tight)});
      lineality = std::move(next_lin);
      continue;
    }

    std::vector<Int> vals(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(a, rays[i].v);
      const int s = sgn(vals[i]);
      if (s > 0) pos.push_back(i);
      if (s < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (sgn(vals[i]) == 0) rays[i].tight.set(k);
      continue;
    }

    const std::size_t pointed_dim = dim - lineality.size();
    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int s = sgn(vals[i]);
      if (s < 0) continue;
      Ray r = rays[i];
      if (s == 0) r.tight.set(k);
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if (common.is_subset_of(rays[o].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        // vals[p] > 0 > vals[q]: vals[p]*q - vals[q]*p is tight on `a`
        IntVector v = combine(vals[p], rays[q].v, vals[q], rays[p].v);
        common.set(k);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  DdResult out;
  out.lineality = std::move(lineality);
  out.rays.reserve(rays.size());
  for (Ray& r : rays)
    if (!is_zero(r.v)) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace torusfan::detail
