#include "lt/linalg.hpp"

#include <stdexcept>

namespace lt {

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Cyc& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Cyc& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Cyc& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scaled(Cyc(-1)); }

Mat Mat::scaled(const Cyc& s) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  Vec r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Vec> Mat::row_vectors() const {
  std::vector<Vec> out(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    out[i].resize(cols_);
    for (size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Mat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, size_t rows) {
  Mat m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<size_t> rref(Mat& m, Exec exec) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t j = col; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
    Cyc inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    // Eliminate the pivot column from every other row; rows are independent.
    parallel_for(exec, m.rows(), [&](size_t i) {
      if (i == row || m.at(i, col).is_zero()) return;
      Cyc f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    });
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(const Mat& m, Exec exec) {
  Mat c = m;
  return rref(c, exec).size();
}

std::vector<Vec> kernel(const Mat& m, Exec exec) {
  Mat c = m;
  std::vector<size_t> pivots = rref(c, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Cyc(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -c.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  for (size_t p : pivots)
    if (p == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
  return x;
}

std::vector<Vec> simultaneous_eigenspace(const std::vector<Mat>& ops, const std::vector<Cyc>& evs) {
  if (ops.size() != evs.size()) throw std::invalid_argument("operator/eigenvalue count mismatch");
  if (ops.empty()) throw std::invalid_argument("need at least one operator");
  size_t n = ops[0].rows();
  for (const auto& op : ops) {
    if (op.rows() != n || op.cols() != n) throw std::invalid_argument("operators must be square, same size");
  }
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j)
      if (!(ops[i] * ops[j] == ops[j] * ops[i]))
        throw std::invalid_argument("simultaneous_eigenspace: operators do not commute");
  Mat stacked(n * ops.size(), n);
  for (size_t k = 0; k < ops.size(); ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Cyc v = ops[k].at(i, j);
        if (i == j) v -= evs[k];
        stacked.at(k * n + i, j) = v;
      }
  return kernel(stacked);
}

bool Subspace::insert(Vec v) {
  if (v.size() != ambient_) throw std::invalid_argument("subspace ambient mismatch");
  Vec orig = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Cyc& c = v[pivots_[r]];
    if (!c.is_zero()) {
      Cyc f = c;
      for (size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
    }
  }
  size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Cyc inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // Keep earlier rows reduced against the new pivot.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Cyc& c = rows_[r][p];
    if (!c.is_zero()) {
      Cyc f = c;
      for (size_t j = 0; j < ambient_; ++j) rows_[r][j] -= f * v[j];
    }
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  inserted_.push_back(std::move(orig));
  return true;
}

bool Subspace::contains(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Cyc& c = v[pivots_[r]];
    if (!c.is_zero()) {
      Cyc f = c;
      for (size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
    }
  }
  return vec_is_zero(v);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec coords(rows_.size());
  Vec w = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Cyc& c = w[pivots_[r]];
    if (!c.is_zero()) {
      coords[r] = c;
      Cyc f = c;
      for (size_t j = 0; j < ambient_; ++j) w[j] -= f * rows_[r][j];
    }
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return coords;
}

bool Subspace::same_space(const Subspace& o) const {
  if (ambient_ != o.ambient_ || dim() != o.dim()) return false;
  for (const auto& r : rows_)
    if (!o.contains(r)) return false;
  return true;
}

}  // namespace lt
