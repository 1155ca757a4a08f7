#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dkcat/field.hpp"

namespace dkcat {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field. A linear map V -> W is stored as a
/// dim W x dim V matrix acting on column vectors, so `g * f` is "f, then g".
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Row-major integer entries, reduced into the field.
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                          const std::vector<std::int64_t>& entries);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix column(Field field, const Vector& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = v; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector col(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(Scalar s) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  bool is_zero() const;
  bool operator==(const Matrix& rhs) const = default;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form; columns scanned left to right, pivot row taken
/// as the first usable row from the top.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Null-space basis as the columns of the returned matrix. The j-th basis
/// vector has a 1 in the j-th free column and 0 in every other free column.
Matrix kernel_basis(const Matrix& m);

/// One solution of A x = b with free variables set to zero, or nullopt.
/// Throws ShapeError on a dimension mismatch.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Column-by-column solve of A X = B.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Kronecker product. Basis index convention: (i (x) j) -> i * B.cols() + j
/// for columns and likewise for rows.
Matrix kron(const Matrix& a, const Matrix& b);

/// A subspace presented as the kernel of some matrix, with fast coordinate
/// extraction: coordinates of a member vector are its free-column entries.
class KernelSubspace {
 public:
  KernelSubspace() = default;
  explicit KernelSubspace(const Matrix& constraints);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  bool contains(const Vector& v) const;
  /// Coordinates of `v`; throws StructuralError when `v` is not a member.
  Vector coordinates(const Vector& v) const;
  /// Coordinates of every column of `m`.
  Matrix coordinates(const Matrix& m) const;

 private:
  Matrix constraints_;
  Matrix basis_;
  std::vector<std::size_t> free_;
};

/// Canonical quotient of F^n by the column span of `spanning`. Kept
/// coordinates are the non-pivot columns of rref(spanning^T); the section
/// sends a quotient basis vector to the matching standard basis vector.
class Quotient {
 public:
  Quotient() = default;
  Quotient(Field field, std::size_t ambient_dim, const Matrix& spanning);

  std::size_t dim() const { return kept_.size(); }
  std::size_t ambient_dim() const { return projection_.cols(); }
  const Matrix& projection() const { return projection_; }
  const Matrix& section() const { return section_; }
  const std::vector<std::size_t>& kept() const { return kept_; }
  Vector project(const Vector& v) const { return projection_.apply(v); }

 private:
  Matrix projection_;
  Matrix section_;
  std::vector<std::size_t> kept_;
};

}  // namespace dkcat
