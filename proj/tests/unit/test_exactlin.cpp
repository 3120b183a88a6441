#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "torusfan/exactlin.hpp"

using namespace torusfan;
using oracle::v;

namespace {

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long spread) {
  std::uniform_int_distribution<long> d(-spread, spread);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Leibniz expansion, independent of elimination.
Rat leibniz_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// gcd of all k x k minors.
Int determinantal_divisor(const RatMatrix& m, std::size_t k) {
  Int g = 0;
  std::vector<bool> rs(m.rows()), cs(m.cols());
  std::fill(rs.begin(), rs.begin() + k, true);
  do {
    std::fill(cs.begin(), cs.end(), false);
    std::fill(cs.begin(), cs.begin() + k, true);
    do {
      RatMatrix sub(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rs[i]) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (cs[j]) sub(a, b++) = m(i, j);
        ++a;
      }
      const Rat d = leibniz_det(sub);
      g = gcd(g, Int(abs(d.get_num())));
    } while (std::prev_permutation(cs.begin(), cs.end()));
  } while (std::prev_permutation(rs.begin(), rs.end()));
  return g;
}

bool is_hnf_shape(const RatMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && j <= last_pivot) return false;  // pivots move strictly right
    if (h(i, j) <= 0) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (h(r, j) < 0 || h(r, j) >= h(i, j)) return false;
    last_pivot = j;
  }
  return true;
}

}  // namespace

TEST_CASE("primitive") {
  CHECK(primitive({Rat(3, 2), Rat(3, 2), Rat(3)}) == v({1, 1, 2}));
  CHECK(primitive({Rat(3, 4), Rat(-1, 4), Rat(1, 4), Rat(1, 4)}) == v({3, -1, 1, 1}));
  CHECK(primitive(v({0, -2})) == v({0, -1}));
  CHECK_THROWS(primitive(v({0, 0})));
}

TEST_CASE("floor and ceil") {
  CHECK(floor_of(Rat(-3, 2)) == -2);
  CHECK(ceil_of(Rat(-3, 2)) == -1);
  CHECK(floor_of(Rat(7)) == 7);
  CHECK(ceil_of(Rat(7, 3)) == 3);
}

TEST_CASE("solve_rational") {
  auto x = solve_rational(RatMatrix::identity(2), v({1, 2}));
  REQUIRE(x);
  CHECK(*x == v({1, 2}));

  const RatMatrix a = RatMatrix::from_ints({{1, 1, 2}}, 3);
  x = solve_rational(a, v({3}));
  REQUIRE(x);
  CHECK(a * *x == v({3}));

  CHECK_FALSE(solve_rational(RatMatrix::from_ints({{1, 0}, {1, 0}}, 2), v({1, 2})));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const RatMatrix m = random_int_matrix(rng, 3, 4, 4);
    const RatVector y = oracle::random_point(rng, 4, 5);
    const RatVector b = m * y;
    auto s = solve_rational(m, b);
    REQUIRE(s);
    CHECK(m * *s == b);
  }
}

TEST_CASE("solve_integer") {
  const RatMatrix a = RatMatrix::from_ints({{2, 4}}, 2);
  CHECK_FALSE(solve_integer(a, v({3})));
  auto x = solve_integer(a, v({6}));
  REQUIRE(x);
  CHECK(is_integer(*x));
  CHECK(a * *x == v({6}));
}

TEST_CASE("rank, determinant and inverse against Leibniz") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 4;
    const RatMatrix m = random_int_matrix(rng, n, n, 3);
    const Rat d = leibniz_det(m);
    CHECK(determinant(m) == d);
    CHECK((rank(m) == n) == (d != 0));
    if (d != 0) CHECK(m * inverse(m) == RatMatrix::identity(n));
  }
}

TEST_CASE("nullspace and orthogonal complement") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const RatMatrix m = random_int_matrix(rng, 1 + t % 3, 4, 2);
    const auto null = nullspace(m);
    CHECK(null.size() == 4 - rank(m));
    for (const auto& x : null) CHECK(is_zero(m * x));
    CHECK(orthogonal_complement(m.row_list(), 4) == null);
  }
  CHECK(canonical_basis({v({2, 4}), v({1, 2})}, 2) == canonical_basis({v({-3, -6})}, 2));
}

TEST_CASE("hnf") {
  auto id = hnf(RatMatrix::identity(3));
  CHECK(id.h == RatMatrix::identity(3));
  CHECK(id.u == RatMatrix::identity(3));

  auto z = hnf(RatMatrix(2, 3));
  CHECK(z.h == RatMatrix(2, 3));
  CHECK(abs(determinant(z.u)) == 1);

  const RatMatrix m = RatMatrix::from_ints({{2, 4}, {1, 3}}, 2);
  auto r = hnf(m);
  CHECK(r.h == r.u * m);
  CHECK(abs(determinant(r.u)) == 1);
  CHECK(is_hnf_shape(r.h));
  CHECK(r.h(1, 0) == 0);

  CHECK_THROWS(hnf(RatMatrix::from_rows({{Rat(1, 2)}}, 1)));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const RatMatrix a = random_int_matrix(rng, 1 + t % 4, 1 + (t / 4) % 4, 5);
    auto f = hnf(a);
    CHECK(f.h == f.u * a);
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(f.u.is_integer());
    CHECK(is_hnf_shape(f.h));
    CHECK(rank(f.h) == rank(a));
  }
}

TEST_CASE("smith invariants match determinantal divisors") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 150; ++t) {
    const RatMatrix a = random_int_matrix(rng, 2 + t % 2, 3, 4);
    const auto inv = smith_invariants(a);
    CHECK(inv.size() == rank(a));
    Int prod = 1;
    for (std::size_t k = 0; k < inv.size(); ++k) {
      if (k > 0) CHECK(inv[k] % inv[k - 1] == 0);
      prod *= inv[k];
      CHECK(prod == determinantal_divisor(a, k + 1));
    }
  }
}

TEST_CASE("quotient_coords postconditions") {
  auto check = [](const RatMatrix& s) {
    const QuotientCoords q = quotient_coords(s);
    const std::size_t n = s.rows();
    const std::size_t d = rank(s);
    REQUIRE(q.alpha.rows() == n - d);
    CHECK(q.alpha.is_integer());
    CHECK(q.section.is_integer());
    CHECK(q.alpha * s == RatMatrix(n - d, s.cols()));
    CHECK(q.alpha * q.section == RatMatrix::identity(n - d));
    // alpha is onto Z^{n-d}: all maximal minors are coprime
    if (n - d > 0) CHECK(determinantal_divisor(q.alpha, n - d) == 1);
    // saturation: maximal minors of the saturated basis are coprime too
    CHECK(determinantal_divisor(q.saturated, d) == 1);
    CHECK(q.saturated.transpose() * q.character_lift == RatMatrix::identity(d));
    return q;
  };

  auto a = check(RatMatrix::from_ints({{1}, {1}, {-1}, {-1}}, 1));
  CHECK_FALSE(a.warning);

  auto b = check(RatMatrix::from_columns({unit_vector(4, 0), unit_vector(4, 1)}, 4));
  CHECK(b.alpha == RatMatrix::from_ints({{0, 0, 1, 0}, {0, 0, 0, 1}}, 4));

  auto c = check(RatMatrix::from_ints({{2}, {2}}, 1));
  CHECK(c.warning);
  CHECK(c.saturated.col(0) == v({1, 1}));

  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const RatMatrix s = random_int_matrix(rng, 4, 1 + t % 3, 3);
    if (rank(s) != s.cols()) continue;
    check(s);
  }
}
