#include "sgk/glin.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgk {

// -------------------------------------------------------------------- window

Window::Window(int max_degree, const std::vector<std::vector<std::string>>& labels_by_degree)
    : max_degree_(max_degree) {
  if (static_cast<int>(labels_by_degree.size()) != max_degree + 1)
    throw std::invalid_argument("window needs one label list per degree 0..D");
  offsets_.push_back(0);
  for (int k = 0; k <= max_degree; ++k) {
    for (const auto& l : labels_by_degree[static_cast<std::size_t>(k)]) {
      labels_.push_back(l);
      degree_of_.push_back(k);
    }
    offsets_.push_back(labels_.size());
  }
}

std::size_t Window::dim(int k) const {
  if (k < 0 || k > max_degree_) return 0;
  return offsets_[static_cast<std::size_t>(k) + 1] - offsets_[static_cast<std::size_t>(k)];
}

std::size_t Window::offset(int k) const {
  if (k < 0 || k > max_degree_ + 1) throw WindowOverflow("degree " + std::to_string(k) + " outside window");
  return offsets_[static_cast<std::size_t>(k)];
}

std::size_t Window::dim_upto(int k) const {
  if (k < 0) return 0;
  if (k > max_degree_) return dim();
  return offsets_[static_cast<std::size_t>(k) + 1];
}

std::vector<std::size_t> Window::dims() const {
  std::vector<std::size_t> d;
  for (int k = 0; k <= max_degree_; ++k) d.push_back(dim(k));
  return d;
}

// -------------------------------------------------------------------- matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector Matrix::apply(const Vector& v, const Field& f) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (sgn((*this)(r, c)) != 0) f.axpy(out[r], (*this)(r, c), v[c]);
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& o, const Field& f) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) f.axpy(out(i, j), a, o(k, j));
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

// ------------------------------------------------------------------- kernels

RrefResult rref_reference(const Matrix& input, const Field& f) {
  Matrix m = input;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    Scalar inv = f.inv(m(rank, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || sgn(m(r, c)) == 0) continue;
      Scalar factor = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(rank, j)));
    }
    pivots.push_back(c);
    ++rank;
  }
  Matrix out(rank, m.cols());
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(r, j);
  return {out, pivots};
}

namespace {

using IntRow = std::vector<mpz_class>;

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const Matrix& m, std::size_t r, const Field& f) {
  IntRow row(m.cols());
  if (f.is_rational()) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpz_class& d = m(r, c).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class v = m(r, c) * l;
      row[c] = v.get_num();
    }
  } else {
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = f.from_rational(m(r, c)).get_num();
  }
  return row;
}

}  // namespace

RrefResult rref(const Matrix& input, const Field& f) {
  const std::size_t nrows = input.rows();
  const std::size_t ncols = input.cols();
  std::vector<IntRow> rows(nrows);
  for (std::size_t r = 0; r < nrows; ++r) rows[r] = integer_row(input, r, f);
  const bool rational = f.is_rational();
  const mpz_class p(static_cast<unsigned long>(f.characteristic()));

  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t piv = rank;
    while (piv < nrows && rows[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[piv], rows[rank]);
    const IntRow& prow = rows[rank];
    const mpz_class a = prow[c];
    const std::size_t rk = rank;
    const long n = static_cast<long>(nrows);
    // row_r <- a * row_r - row_r[c] * prow; independent across r.
#pragma omp parallel for schedule(dynamic) if (nrows * ncols > 4096)
    for (long ri = 0; ri < n; ++ri) {
      const auto r = static_cast<std::size_t>(ri);
      if (r == rk || rows[r][c] == 0) continue;
      IntRow& row = rows[r];
      const mpz_class b = row[c];
      for (std::size_t j = 0; j < ncols; ++j) {
        if (row[j] == 0 && prow[j] == 0) continue;
        row[j] = a * row[j] - b * prow[j];
        if (!rational) {
          row[j] %= p;
          if (row[j] < 0) row[j] += p;
        }
      }
      if (rational) remove_content(row);
    }
    pivots.push_back(c);
    ++rank;
  }

  Matrix out(rank, ncols);
  for (std::size_t r = 0; r < rank; ++r) {
    Scalar lead(rows[r][pivots[r]]);
    Scalar inv = f.inv(f.from_rational(lead));
    for (std::size_t j = 0; j < ncols; ++j) {
      if (rows[r][j] == 0) continue;
      out(r, j) = f.mul(f.from_rational(Scalar(rows[r][j])), inv);
    }
  }
  return {out, pivots};
}

std::size_t rank(const Matrix& m, const Field& f) { return rref(m, f).pivots.size(); }

Matrix null_space(const Matrix& a, const Field& f) {
  RrefResult r = rref(a, f);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = f.neg(r.matrix(i, free));
    basis.push_back(std::move(v));
  }
  // Canonical form of the solution space.
  Matrix b = Matrix::from_rows(basis, a.cols());
  return basis.empty() ? Matrix(0, a.cols()) : rref(b, f).matrix;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector add(const Vector& a, const Vector& b, const Field& f) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector scale(const Vector& a, const Scalar& c, const Field& f) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) r[i] = f.mul(a[i], c);
  return r;
}

void axpy(Vector& y, const Scalar& a, const Vector& x, const Field& f) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) f.axpy(y[i], a, x[i]);
}

// ------------------------------------------------------------------ echelon

Vector Echelon::reduce(const Vector& v) const {
  if (v.size() != ncols_) throw WindowOverflow("vector length does not match subspace ambient dimension");
  Vector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, field_.neg(c), rows_[i], field_);
  }
  return r;
}

bool Echelon::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t piv = 0;
  while (piv < ncols_ && sgn(r[piv]) == 0) ++piv;
  if (piv == ncols_) return false;
  r = scale(r, field_.inv(r[piv]), field_);
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (sgn(c) != 0) axpy(row, field_.neg(c), r, field_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool Echelon::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Echelon::contains(const Echelon& o) const {
  return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vector& r) { return contains(r); });
}

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Echelon span_of(const std::vector<Vector>& vs, std::size_t ncols, const Field& f) {
  Echelon e(ncols, f);
  for (const auto& v : vs) e.insert(v);
  return e;
}

Echelon sum(const Echelon& a, const Echelon& b) {
  Echelon r = a;
  for (const auto& row : b.rows()) r.insert(row);
  return r;
}

Echelon intersect(const Echelon& a, const Echelon& b) {
  const Field& f = a.field();
  const std::size_t n = a.ncols();
  const std::size_t ka = a.rank();
  const std::size_t kb = b.rank();
  Echelon out(n, f);
  if (ka == 0 || kb == 0) return out;
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0; the a-part of each solution spans the intersection.
  Matrix sys(n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t c = 0; c < n; ++c) sys(c, i) = a.rows()[i][c];
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t c = 0; c < n; ++c) sys(c, ka + j) = f.neg(b.rows()[j][c]);
  Matrix ns = null_space(sys, f);
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    Vector v(n);
    for (std::size_t i = 0; i < ka; ++i) axpy(v, ns(s, i), a.rows()[i], f);
    out.insert(v);
  }
  return out;
}

std::optional<Vector> solve_combination(const std::vector<Vector>& generators, const Vector& target, std::size_t ncols,
                                        const Field& f) {
  const std::size_t k = generators.size();
  // Columns: generators then -target; a solution with last coordinate 1 gives the combination.
  Matrix sys(ncols, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < ncols; ++c) sys(c, i) = generators[i][c];
  for (std::size_t c = 0; c < ncols; ++c) sys(c, k) = f.neg(target[c]);
  RrefResult r = rref(sys, f);
  if (!r.pivots.empty() && r.pivots.back() == k) return std::nullopt;
  Vector x(k);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = f.neg(r.matrix(i, k));
  return x;
}

// --------------------------------------------------------- graded subspace

GradedSubspace::GradedSubspace(const Window& w, Field f) : window_(w), field_(f) {
  for (int k = 0; k <= w.max_degree(); ++k) slices_.emplace_back(w.dim(k), f);
}

std::size_t GradedSubspace::dim() const {
  std::size_t d = 0;
  for (const auto& s : slices_) d += s.rank();
  return d;
}

std::vector<std::size_t> GradedSubspace::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : slices_) d.push_back(s.rank());
  return d;
}

bool GradedSubspace::add_homogeneous(int k, const Vector& slice_vector) {
  return slices_.at(static_cast<std::size_t>(k)).insert(slice_vector);
}

bool GradedSubspace::add_components(const Vector& v) {
  if (v.size() != window_.dim()) throw WindowOverflow("vector does not live in this window");
  bool grew = false;
  for (int k = 0; k <= window_.max_degree(); ++k) {
    const std::size_t off = window_.offset(k);
    Vector part(v.begin() + static_cast<long>(off), v.begin() + static_cast<long>(off + window_.dim(k)));
    if (!is_zero(part)) grew |= add_homogeneous(k, part);
  }
  return grew;
}

bool GradedSubspace::contains(const Vector& v) const {
  if (v.size() != window_.dim()) throw WindowOverflow("vector does not live in this window");
  for (int k = 0; k <= window_.max_degree(); ++k) {
    const std::size_t off = window_.offset(k);
    Vector part(v.begin() + static_cast<long>(off), v.begin() + static_cast<long>(off + window_.dim(k)));
    if (!is_zero(part) && !slice(k).contains(part)) return false;
  }
  return true;
}

bool GradedSubspace::contains(const GradedSubspace& o) const {
  for (int k = 0; k <= window_.max_degree(); ++k)
    if (!slice(k).contains(o.slice(k))) return false;
  return true;
}

std::vector<Vector> GradedSubspace::basis() const {
  std::vector<Vector> out;
  for (int k = 0; k <= window_.max_degree(); ++k) {
    const std::size_t off = window_.offset(k);
    for (const auto& row : slice(k).rows()) {
      Vector v(window_.dim());
      std::copy(row.begin(), row.end(), v.begin() + static_cast<long>(off));
      out.push_back(std::move(v));
    }
  }
  return out;
}

Vector GradedSubspace::reduce(const Vector& v) const {
  Vector out(v.size());
  for (int k = 0; k <= window_.max_degree(); ++k) {
    const std::size_t off = window_.offset(k);
    Vector part(v.begin() + static_cast<long>(off), v.begin() + static_cast<long>(off + window_.dim(k)));
    Vector red = slice(k).reduce(part);
    std::copy(red.begin(), red.end(), out.begin() + static_cast<long>(off));
  }
  return out;
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  if (!(a.window() == b.window())) throw std::invalid_argument("window mismatch");
  GradedSubspace r = a;
  for (int k = 0; k <= a.window().max_degree(); ++k)
    for (const auto& row : b.slice(k).rows()) r.add_homogeneous(k, row);
  r.set_truncated(a.truncated() || b.truncated());
  return r;
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
  if (!(a.window() == b.window())) throw std::invalid_argument("window mismatch");
  GradedSubspace r(a.window(), a.field());
  for (int k = 0; k <= a.window().max_degree(); ++k) {
    Echelon e = intersect(a.slice(k), b.slice(k));
    for (const auto& row : e.rows()) r.add_homogeneous(k, row);
  }
  r.set_truncated(a.truncated() || b.truncated());
  return r;
}

bool membership(const Vector& v, const GradedSubspace& s) { return s.contains(v); }

// -------------------------------------------------------------- graded map

GradedMap::GradedMap(const Window& source, const Window& target) : source_(source), target_(target) {
  if (source.max_degree() != target.max_degree()) throw std::invalid_argument("graded map windows differ in D");
  for (int k = 0; k <= source.max_degree(); ++k) blocks_.emplace_back(target.dim(k), source.dim(k));
}

Vector GradedMap::apply(const Vector& v, const Field& f) const {
  if (v.size() != source_.dim()) throw WindowOverflow("vector does not live in the source window");
  Vector out(target_.dim());
  for (int k = 0; k <= max_degree(); ++k) {
    const Matrix& b = block(k);
    const std::size_t so = source_.offset(k);
    const std::size_t to = target_.offset(k);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      const Scalar& x = v[so + c];
      if (sgn(x) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        if (sgn(b(r, c)) != 0) f.axpy(out[to + r], b(r, c), x);
    }
  }
  return out;
}

GradedMap GradedMap::compose_after(const GradedMap& first, const Field& f) const {
  GradedMap out(first.source_, target_);
  for (int k = 0; k <= max_degree(); ++k) out.block(k) = block(k).multiply(first.block(k), f);
  return out;
}

Matrix GradedMap::flat() const {
  Matrix m(target_.dim(), source_.dim());
  for (int k = 0; k <= max_degree(); ++k) {
    const Matrix& b = block(k);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(target_.offset(k) + r, source_.offset(k) + c) = b(r, c);
  }
  return m;
}

bool GradedMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.is_zero(); });
}

GradedMap GradedMap::identity(const Window& w) {
  GradedMap m(w, w);
  for (int k = 0; k <= w.max_degree(); ++k) m.block(k) = Matrix::identity(w.dim(k));
  return m;
}

GradedMap GradedMap::from_flat(const Matrix& m, const Window& source, const Window& target) {
  GradedMap g(source, target);
  for (int k = 0; k <= g.max_degree(); ++k) {
    Matrix& b = g.block(k);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = m(target.offset(k) + r, source.offset(k) + c);
  }
  return g;
}

GradedMap GradedMap::plus(const GradedMap& o, const Field& f) const {
  GradedMap r = *this;
  for (int k = 0; k <= max_degree(); ++k) {
    Matrix& b = r.block(k);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = f.add(b(i, j), o.block(k)(i, j));
  }
  return r;
}

GradedMap GradedMap::scaled(const Scalar& c, const Field& f) const {
  GradedMap r = *this;
  for (int k = 0; k <= max_degree(); ++k) {
    Matrix& b = r.block(k);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = f.mul(b(i, j), c);
  }
  return r;
}

}  // namespace sgk
