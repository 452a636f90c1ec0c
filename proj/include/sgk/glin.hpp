#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgk/field.hpp"

namespace sgk {

using Vector = std::vector<Scalar>;

/// Raised when a degree or vector falls outside the active window.
class WindowOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Finite truncation of a semi-graded carrier: basis labels for degrees
/// 0..D, stored flat in ascending degree.
class Window {
 public:
  Window() = default;
  Window(int max_degree, const std::vector<std::vector<std::string>>& labels_by_degree);

  int max_degree() const { return max_degree_; }
  std::size_t dim() const { return labels_.size(); }
  std::size_t dim(int k) const;
  std::size_t offset(int k) const;
  int degree_of(std::size_t index) const { return degree_of_.at(index); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  std::vector<std::size_t> dims() const;

  /// Total dimension of degrees 0..k.
  std::size_t dim_upto(int k) const;

  bool operator==(const Window& o) const { return max_degree_ == o.max_degree_ && labels_ == o.labels_; }

 private:
  int max_degree_ = -1;
  std::vector<std::size_t> offsets_;  // size D + 2
  std::vector<std::string> labels_;
  std::vector<int> degree_of_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  bool is_zero() const;
  Vector apply(const Vector& v, const Field& f) const;
  Matrix multiply(const Matrix& o, const Field& f) const;
  Matrix transpose() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix matrix;                    // nonzero rows only, reduced echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Textbook Gauss-Jordan elimination in field arithmetic. Serial; kept as
/// the reference the parallel kernel is tested against.
RrefResult rref_reference(const Matrix& m, const Field& f);

/// Fraction-free elimination on integer rows (content removed after every
/// update over QQ) with OpenMP-parallel row updates; same output as
/// rref_reference.
RrefResult rref(const Matrix& m, const Field& f);

std::size_t rank(const Matrix& m, const Field& f);

/// Canonical (reduced echelon) basis of {v : A v = 0}, one vector per row.
Matrix null_space(const Matrix& a, const Field& f);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b, const Field& f);
Vector scale(const Vector& a, const Scalar& c, const Field& f);
void axpy(Vector& y, const Scalar& a, const Vector& x, const Field& f);

/// Incrementally maintained reduced row echelon basis of a subspace of F^n.
/// Rows are sorted by pivot and fully reduced, so two Echelons spanning the
/// same subspace hold identical rows.
class Echelon {
 public:
  Echelon() = default;
  Echelon(std::size_t ncols, Field f) : ncols_(ncols), field_(f) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Returns true when v was independent of the current span.
  bool insert(const Vector& v);
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Echelon& o) const;

  /// Columns that are not pivots (coordinates of the standard complement).
  std::vector<std::size_t> free_columns() const;

  Matrix matrix() const { return Matrix::from_rows(rows_, ncols_); }

  bool operator==(const Echelon& o) const { return ncols_ == o.ncols_ && rows_ == o.rows_; }

 private:
  std::size_t ncols_ = 0;
  Field field_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Echelon span_of(const std::vector<Vector>& vs, std::size_t ncols, const Field& f);
Echelon sum(const Echelon& a, const Echelon& b);
Echelon intersect(const Echelon& a, const Echelon& b);

/// Expresses target as a combination of the given vectors, if possible.
std::optional<Vector> solve_combination(const std::vector<Vector>& generators, const Vector& target, std::size_t ncols,
                                        const Field& f);

/// Subspace of a window that is the direct sum of its degree slices.
/// Each slice is stored in reduced echelon form, which makes equality of
/// graded subspaces a comparison of slices.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(const Window& w, Field f);

  const Window& window() const { return window_; }
  const Field& field() const { return field_; }
  const Echelon& slice(int k) const { return slices_.at(static_cast<std::size_t>(k)); }
  std::size_t dim(int k) const { return slice(k).rank(); }
  std::size_t dim() const;
  std::vector<std::size_t> dims() const;

  /// Adds the homogeneous components of a flat window vector. Returns true
  /// if the subspace grew.
  bool add_components(const Vector& v);
  bool add_homogeneous(int k, const Vector& slice_vector);

  /// Every degree component of v lies in the matching slice.
  bool contains(const Vector& v) const;
  bool contains(const GradedSubspace& o) const;

  /// Flat window vectors spanning the subspace, degree by degree.
  std::vector<Vector> basis() const;

  /// Reduces each degree component of v against its slice.
  Vector reduce(const Vector& v) const;

  bool truncated() const { return truncated_; }
  void set_truncated(bool t) { truncated_ = t; }

  bool operator==(const GradedSubspace& o) const { return window_ == o.window_ && slices_ == o.slices_; }

 private:
  Window window_;
  Field field_;
  std::vector<Echelon> slices_;
  bool truncated_ = false;
};

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);

/// Membership of a flat window vector, with a window-overflow error when
/// the vector has the wrong size.
bool membership(const Vector& v, const GradedSubspace& s);

/// Homogeneous (degree-preserving) linear map between windows: one block
/// per degree, block k of shape dim_target(k) x dim_source(k).
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(const Window& source, const Window& target);

  const Window& source() const { return source_; }
  const Window& target() const { return target_; }
  Matrix& block(int k) { return blocks_.at(static_cast<std::size_t>(k)); }
  const Matrix& block(int k) const { return blocks_.at(static_cast<std::size_t>(k)); }
  int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }

  Vector apply(const Vector& v, const Field& f) const;
  GradedMap compose_after(const GradedMap& first, const Field& f) const;  // this o first
  Matrix flat() const;
  bool is_zero() const;

  static GradedMap identity(const Window& w);
  static GradedMap from_flat(const Matrix& m, const Window& source, const Window& target);

  GradedMap plus(const GradedMap& o, const Field& f) const;
  GradedMap scaled(const Scalar& c, const Field& f) const;

  bool operator==(const GradedMap& o) const { return blocks_ == o.blocks_; }

 private:
  Window source_;
  Window target_;
  std::vector<Matrix> blocks_;
};

}  // namespace sgk
