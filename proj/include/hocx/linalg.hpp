#ifndef HOCX_LINALG_HPP
#define HOCX_LINALG_HPP

#include "hocx/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hocx {

// Sparse coordinate vector; zero entries are never stored.
using SparseVec = std::map<std::size_t, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& a);
SparseVec unit(std::size_t i);
std::string format_vec(const SparseVec& v);

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a map does not carry a subspace into the requested codomain.
struct NotInvariant : std::runtime_error {
  std::size_t column;
  NotInvariant(std::size_t col, const std::string& what)
      : std::runtime_error(what), column(col) {}
};

// Column-major sparse matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, std::vector<SparseVec> cols);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add_to(std::size_t r, std::size_t c, const Rational& v);
  const SparseVec& col(std::size_t c) const { return cols_.at(c); }

  SparseVec apply(const SparseVec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& a) const;
  Matrix transpose() const;
  std::vector<SparseVec> row_vectors() const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  // First (row, col) where the two matrices differ, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> cols_;
};

// Reduced row echelon form. rows[k] has a leading 1 in column pivots[k].
struct Echelon {
  std::vector<SparseVec> rows;
  std::vector<std::size_t> pivots;
};

// Fraction-free elimination on integer-scaled sparse rows, followed by
// back substitution and normalization.
Echelon rref(const std::vector<SparseVec>& rows, std::size_t ncols);

// Dense Bareiss elimination, used as an independent rank oracle.
std::size_t bareiss_rank(const Matrix& m);

// Column span of a based ambient space. Every basis vector j carries a 1 at
// coordinate pivots[j] and a 0 at every other pivot, so coordinates of a member
// can be read off at the pivots.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<SparseVec>& vecs);
  static Subspace full(std::size_t ambient);
  static Subspace image(const Matrix& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const SparseVec& vec(std::size_t j) const { return basis_.at(j); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis() const;

  // Coordinates with respect to the basis, or nullopt when v is not a member.
  std::optional<SparseVec> coords(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return coords(v).has_value(); }
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  Subspace intersect(const Subspace& o) const;
  SparseVec combine(const SparseVec& coords) const;

 private:
  friend Subspace kernel(const Matrix& m);
  std::size_t ambient_ = 0;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
// Some v with m v = b, or nullopt when b is outside the image.
std::optional<SparseVec> solve(const Matrix& m, const SparseVec& b);
std::optional<Matrix> inverse(const Matrix& m);

// R with M * dom.basis = cod.basis * R. Throws NotInvariant naming the first
// domain basis column whose image leaves cod.
Matrix restrict(const Matrix& m, const Subspace& dom, const Subspace& cod);

Matrix kron(const Matrix& a, const Matrix& b);

// Row-major flattening of multi-indices.
class TensorIndex {
 public:
  TensorIndex() = default;
  explicit TensorIndex(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return size_; }
  std::size_t flatten(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 1;
};

}  // namespace hocx

#endif
