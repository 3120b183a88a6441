#pragma once

// Exact rational and integer linear algebra. Every other module builds on
// these carriers; nothing in the library touches floating point except the
// final coordinate emission of the SVG renderer.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusfan {

using Int = mpz_class;
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

class LinAlgError : public std::runtime_error {
 public:
  explicit LinAlgError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  /// `cols` is needed to give an empty row list a shape.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);
  static RatMatrix from_ints(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;
  std::vector<RatVector> row_list() const;
  RatMatrix transpose() const;
  /// Rows [begin, end).
  RatMatrix row_block(std::size_t begin, std::size_t end) const;
  /// Columns [begin, end).
  RatMatrix col_block(std::size_t begin, std::size_t end) const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator+(const RatMatrix& rhs) const;

  bool is_integer() const;
  bool operator==(const RatMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Vector arithmetic.
Rat dot(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);
RatVector operator*(const Rat& c, const RatVector& v);
RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
RatVector from_ints(const std::vector<long>& v);
bool is_zero(const RatVector& v);
bool is_integer(const RatVector& v);
/// Lexicographic order on equal-length vectors.
bool lex_less(const RatVector& a, const RatVector& b);
std::string to_string(const RatVector& v);

Int floor_of(const Rat& q);
Int ceil_of(const Rat& q);

/// The unique shortest integer vector on the ray through `v`. Throws on zero.
RatVector primitive(const RatVector& v);

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

RowEchelon rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<RatVector>& vectors, std::size_t dim);
Rat determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

/// Canonical basis of span(vectors): RREF rows scaled to primitive integers.
/// Two families span the same subspace iff their canonical bases agree.
std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim);

/// Canonical basis of {x : <v, x> = 0 for all v in vectors}.
std::vector<RatVector> orthogonal_complement(const std::vector<RatVector>& vectors, std::size_t dim);

/// Basis of {x : m x = 0}, canonicalized.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Orthogonal projection onto the complement of span(basis).
class ComplementProjector {
 public:
  ComplementProjector(const std::vector<RatVector>& basis, std::size_t dim);
  RatVector operator()(const RatVector& v) const;

 private:
  std::size_t dim_;
  std::vector<RatVector> basis_;
  RatMatrix gram_inverse_;
};

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

/// Some integer x with a x = b (a, b integral), or nullopt.
std::optional<RatVector> solve_integer(const RatMatrix& a, const RatVector& b);

struct HermiteForm {
  RatMatrix h;  // row Hermite normal form
  RatMatrix u;  // unimodular, h = u * m
};

/// Row-style Hermite normal form: nonzero rows on top, positive pivots moving
/// strictly right, entries above a pivot reduced into [0, pivot).
HermiteForm hnf(const RatMatrix& m);

/// Nonzero Smith invariant factors d1 | d2 | ... of an integer matrix.
std::vector<Int> smith_invariants(const RatMatrix& m);

/// Lattice data for the quotient by the subtorus whose cocharacter lattice is
/// spanned by the columns of `weights` (n x d).
struct QuotientCoords {
  RatMatrix alpha;            // (n-d) x n, rows are the HNF basis of the annihilator lattice
  RatMatrix section;          // n x (n-d), integral, alpha * section = I
  RatMatrix saturated;        // n x d, basis of (span weights) ∩ Z^n
  RatMatrix character_lift;   // n x d, integral, saturated^T * character_lift = I
  std::optional<std::string> warning;  // set when the input had to be saturated
};

QuotientCoords quotient_coords(const RatMatrix& weights);

}  // namespace torusfan
