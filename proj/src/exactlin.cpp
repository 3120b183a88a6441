#include "torusfan/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torusfan {

namespace {

using IntRow = std::vector<Int>;
using IntMatrix = std::vector<IntRow>;

IntMatrix to_int_matrix(const RatMatrix& m, const char* what) {
  IntMatrix out(m.rows(), IntRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw LinAlgError(std::string(what) + ": non-integer entry");
      out[i][j] = m(i, j).get_num();
    }
  return out;
}

RatMatrix to_rat_matrix(const IntMatrix& m, std::size_t cols) {
  RatMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j];
  return out;
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix id(n, IntRow(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b (simultaneously)
void combine_rows(IntRow& a, IntRow& b, const Int& s, const Int& t, const Int& u, const Int& v) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    Int na = s * a[k] + t * b[k];
    Int nb = u * a[k] + v * b[k];
    a[k] = std::move(na);
    b[k] = std::move(nb);
  }
}

void check_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw LinAlgError(std::string(what) + ": dimension mismatch");
}

}  // namespace

// ---------------------------------------------------------------- RatMatrix

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_dims(rows[i].size(), cols, "RatMatrix::from_rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

RatMatrix RatMatrix::from_ints(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_dims(rows[i].size(), cols, "RatMatrix::from_ints");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<RatVector> RatMatrix::row_list() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::row_block(std::size_t begin, std::size_t end) const {
  RatMatrix out(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i - begin, j) = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::col_block(std::size_t begin, std::size_t end) const {
  RatMatrix out(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  check_dims(cols_, rhs.rows_, "RatMatrix::operator*");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  check_dims(cols_, v.size(), "RatMatrix::operator*(vector)");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  check_dims(rows_, rhs.rows_, "RatMatrix::operator+");
  check_dims(cols_, rhs.cols_, "RatMatrix::operator+");
  RatMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + rhs.data_[k];
  return out;
}

bool RatMatrix::is_integer() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& q) { return q.get_den() == 1; });
}

// ------------------------------------------------------------------ vectors

Rat dot(const RatVector& a, const RatVector& b) {
  check_dims(a.size(), b.size(), "dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  check_dims(a.size(), b.size(), "vector +");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  check_dims(a.size(), b.size(), "vector -");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector operator-(const RatVector& a) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

RatVector operator*(const Rat& c, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

RatVector zero_vector(std::size_t n) { return RatVector(n); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n);
  v.at(i) = 1;
  return v;
}

RatVector from_ints(const std::vector<long>& v) {
  RatVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return sgn(q) == 0; });
}

bool is_integer(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q.get_den() == 1; });
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rat& x, const Rat& y) { return cmp(x, y) < 0; });
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

Int floor_of(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int ceil_of(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

RatVector primitive(const RatVector& v) {
  if (is_zero(v)) throw LinAlgError("primitive: zero vector");
  Int den_lcm = 1;
  for (const Rat& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  Int g = 0;
  std::vector<Int> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
  }
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(scaled[i] / g);
  return out;
}

// ------------------------------------------------------------- elimination

RowEchelon rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rat inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {a.row_block(0, row), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<RatVector>& vectors, std::size_t dim) {
  return rank(RatMatrix::from_rows(vectors, dim));
}

Rat determinant(const RatMatrix& m) {
  check_dims(m.rows(), m.cols(), "determinant");
  RatMatrix a = m;
  Rat det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      Rat f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  check_dims(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw LinAlgError("inverse: singular matrix");
  return e.reduced.col_block(n, 2 * n);
}

std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  RowEchelon e = rref(RatMatrix::from_rows(vectors, dim));
  std::vector<RatVector> out;
  out.reserve(e.pivots.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(primitive(e.reduced.row(i)));
  return out;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return canonical_basis(basis, m.cols());
}

std::vector<RatVector> orthogonal_complement(const std::vector<RatVector>& vectors, std::size_t dim) {
  return nullspace(RatMatrix::from_rows(vectors, dim));
}

ComplementProjector::ComplementProjector(const std::vector<RatVector>& basis, std::size_t dim)
    : dim_(dim), basis_(basis) {
  const std::size_t k = basis_.size();
  RatMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis_[i], basis_[j]);
  gram_inverse_ = inverse(gram);
}

RatVector ComplementProjector::operator()(const RatVector& v) const {
  check_dims(v.size(), dim_, "ComplementProjector");
  if (basis_.empty()) return v;
  const std::size_t k = basis_.size();
  RatVector coeffs(k);
  for (std::size_t i = 0; i < k; ++i) coeffs[i] = dot(basis_[i], v);
  RatVector out = v;
  for (std::size_t i = 0; i < k; ++i) {
    Rat c = 0;
    for (std::size_t j = 0; j < k; ++j) c += gram_inverse_(i, j) * coeffs[j];
    if (sgn(c) == 0) continue;
    for (std::size_t t = 0; t < dim_; ++t) out[t] -= c * basis_[i][t];
  }
  return out;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  check_dims(a.rows(), b.size(), "solve_rational");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  RatVector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

// ------------------------------------------------------------ lattice forms

HermiteForm hnf(const RatMatrix& m) {
  IntMatrix a = to_int_matrix(m, "hnf");
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix u = int_identity(r);
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    for (std::size_t i = row + 1; i < r; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[row][col].get_mpz_t(),
                 a[i][col].get_mpz_t());
      Int x = a[row][col] / g;
      Int y = a[i][col] / g;
      Int neg_y = -y;
      combine_rows(a[row], a[i], s, t, neg_y, x);
      combine_rows(u[row], u[i], s, t, neg_y, x);
    }
    if (sgn(a[row][col]) == 0) continue;
    if (sgn(a[row][col]) < 0) {
      for (auto& e : a[row]) e = -e;
      for (auto& e : u[row]) e = -e;
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t k = 0; k < c; ++k) a[i][k] -= q * a[row][k];
      for (std::size_t k = 0; k < r; ++k) u[i][k] -= q * u[row][k];
    }
    ++row;
  }
  return {to_rat_matrix(a, c), to_rat_matrix(u, r)};
}

std::vector<Int> smith_invariants(const RatMatrix& m) {
  IntMatrix a = to_int_matrix(m, "smith_invariants");
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  std::vector<Int> out;
  auto swap_cols = [&](std::size_t j1, std::size_t j2) {
    for (auto& row : a) std::swap(row[j1], row[j2]);
  };
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // move the smallest nonzero entry of the trailing block to (t, t)
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (sgn(a[i][j]) != 0 && (bi == r || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == r) break;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
    for (;;) {
      bool moved = false;
      for (std::size_t i = t + 1; i < r && !moved; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) {
          std::swap(a[t], a[i]);
          moved = true;
        }
      }
      for (std::size_t j = t + 1; j < c && !moved; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) {
          swap_cols(t, j);
          moved = true;
        }
      }
      if (moved) continue;
      // pivot isolated; enforce divisibility of the remaining block
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c && !fixed; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < c; ++k) a[t][k] += a[i][k];
            fixed = true;
          }
      if (!fixed) break;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

std::optional<RatVector> solve_integer(const RatMatrix& a, const RatVector& b) {
  check_dims(a.rows(), b.size(), "solve_integer");
  if (!is_integer(b)) return std::nullopt;
  // hnf(a^T) = u a^T  =>  a u^T = h^T, a column echelon form
  HermiteForm f = hnf(a.transpose());
  const RatMatrix lower = f.h.transpose();  // rows(a) x cols(a)
  const std::size_t n = a.cols();
  RatVector y(n);
  std::size_t col = 0;
  for (; col < n; ++col) {
    // pivot row of column `col` = first nonzero entry
    std::size_t p = 0;
    while (p < lower.rows() && sgn(lower(p, col)) == 0) ++p;
    if (p == lower.rows()) break;
    Rat acc = b[p];
    for (std::size_t k = 0; k < col; ++k) acc -= lower(p, k) * y[k];
    Rat q = acc / lower(p, col);
    if (q.get_den() != 1) return std::nullopt;
    y[col] = q;
  }
  if (lower * y != b) return std::nullopt;
  return f.u.transpose() * y;
}

QuotientCoords quotient_coords(const RatMatrix& weights) {
  const std::size_t n = weights.rows();
  const std::size_t d = weights.cols();
  if (!weights.is_integer()) throw LinAlgError("quotient_coords: weights must be integral");
  if (rank(weights) != d) throw LinAlgError("quotient_coords: weight matrix must have full column rank");

  HermiteForm f = hnf(weights);  // f.h = f.u * weights, top d rows nonzero
  RatMatrix u_inv = inverse(f.u);
  RatMatrix h_top = f.h.row_block(0, d);

  QuotientCoords q;
  q.saturated = u_inv.col_block(0, d);
  q.character_lift = f.u.row_block(0, d).transpose();
  if (abs(determinant(h_top)) != 1) {
    q.warning = "subtorus weights span a non-saturated lattice; using its saturation";
  }

  RatMatrix alpha_raw = f.u.row_block(d, n);
  RatMatrix section_raw = u_inv.col_block(d, n);
  HermiteForm g = hnf(alpha_raw);  // g.h = g.u * alpha_raw
  q.alpha = g.h;
  q.section = section_raw * inverse(g.u);
  return q;
}

}  // namespace torusfan
