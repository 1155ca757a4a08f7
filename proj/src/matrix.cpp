#include "dkcat/matrix.hpp"

#include <sstream>

namespace dkcat {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("matrices over " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) {
    throw ShapeError("expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries.size()));
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = field.from_int(entries[i]);
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

Matrix Matrix::column(Field field, const Vector& v) { return from_columns(field, v.size(), {v}); }

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_) {
    throw ShapeError("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                     std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Scalar a = (*this)(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        Scalar b = rhs(k, j);
        if (field_.is_zero(b)) continue;
        Scalar& slot = out.data_[i * out.cols_ + j];
        slot = field_.add(slot, field_.mul(a, b));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("sum of differently shaped matrices");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& s : out.data_) s = field_.neg(s);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("vector length does not match column count");
  Vector out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) {
      Scalar a = (*this)(i, j);
      if (!field_.is_zero(a) && !field_.is_zero(v[j])) acc = field_.add(acc, field_.mul(a, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (s.num != 0) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.set(i, j, (*this)(r0 + i, c0 + j));
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b(i, j));
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, (*this)(idx[i], j));
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.set(i, j, (*this)(i, idx[j]));
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_) throw ShapeError("hstack row mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.cols_) throw ShapeError("vstack column mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, a.cols_, b);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << field_.format((*this)(i, j));
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pr = row;
    while (pr < a.rows() && f.is_zero(a(pr, col))) ++pr;
    if (pr == a.rows()) continue;
    if (pr != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar t = a(row, j);
        a.set(row, j, a(pr, j));
        a.set(pr, j, t);
      }
    }
    Scalar inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.set(row, j, f.mul(a(row, j), inv));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      Scalar factor = a(r, col);
      if (f.is_zero(factor)) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.set(r, j, f.sub(a(r, j), f.mul(factor, a(row, j))));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

namespace {

std::vector<std::size_t> free_columns(std::size_t cols, const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Matrix kernel_from_rref(const RrefResult& r, std::size_t cols, const std::vector<std::size_t>& free) {
  const Field& f = r.reduced.field();
  Matrix basis(f, cols, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis.set(free[j], j, f.one());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      basis.set(r.pivots[i], j, f.neg(r.reduced(i, free[j])));
    }
  }
  return basis;
}

}  // namespace

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  return kernel_from_rref(r, m.cols(), free_columns(m.cols(), r.pivots));
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length does not match row count");
  const Field& f = a.field();
  Matrix aug = Matrix::hstack(a, Matrix::column(f, b));
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), f.zero());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows()) throw ShapeError("right-hand side row count mismatch");
  const Field& f = a.field();
  RrefResult r = rref(Matrix::hstack(a, b));
  for (std::size_t p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(r.pivots[i], j, r.reduced(i, a.cols() + j));
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar s = a(i, j);
      if (f.is_zero(s)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, f.mul(s, b(k, l)));
    }
  return out;
}

KernelSubspace::KernelSubspace(const Matrix& constraints) : constraints_(constraints) {
  RrefResult r = rref(constraints);
  free_ = free_columns(constraints.cols(), r.pivots);
  basis_ = kernel_from_rref(r, constraints.cols(), free_);
}

bool KernelSubspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) return false;
  for (const auto& s : constraints_.apply(v))
    if (s.num != 0) return false;
  return true;
}

Vector KernelSubspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw StructuralError("vector does not lie in the subspace");
  Vector out(free_.size());
  for (std::size_t j = 0; j < free_.size(); ++j) out[j] = v[free_[j]];
  return out;
}

Matrix KernelSubspace::coordinates(const Matrix& m) const {
  if (m.rows() != ambient_dim()) throw ShapeError("coordinate extraction: row count mismatch");
  if (!(constraints_ * m).is_zero()) throw StructuralError("columns do not lie in the subspace");
  return m.select_rows(free_);
}

Quotient::Quotient(Field field, std::size_t ambient_dim, const Matrix& spanning) {
  if (spanning.rows() != ambient_dim) throw ShapeError("quotient: spanning set has wrong length");
  RrefResult r = rref(spanning.transpose());
  kept_ = free_columns(ambient_dim, r.pivots);
  projection_ = Matrix(field, kept_.size(), ambient_dim);
  section_ = Matrix(field, ambient_dim, kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    projection_.set(k, kept_[k], field.one());
    section_.set(kept_[k], k, field.one());
  }
  // A pivot basis vector e_p is congruent to e_p - R_i, supported on kept columns.
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    for (std::size_t k = 0; k < kept_.size(); ++k) {
      projection_.set(k, r.pivots[i], field.neg(r.reduced(i, kept_[k])));
    }
  }
}

}  // namespace dkcat
