#pragma once

#include <optional>
#include <vector>

#include "lt/cyclotomic.hpp"
#include "lt/parallel.hpp"

namespace lt {

using Vec = std::vector<Cyc>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Cyc& s, const Vec& v);
bool vec_is_zero(const Vec& v);

// Dense matrix over Q(zeta). Small exact kernels: row reduction with exact
// pivoting; no growth control needed at these sizes.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}
  static Mat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Cyc& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Cyc& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Cyc& s) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Mat transposed() const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  std::vector<Vec> row_vectors() const;
  static Mat from_rows(const std::vector<Vec>& rows, size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, size_t rows);

 private:
  size_t rows_, cols_;
  std::vector<Cyc> a_;
};

// In-place reduced row echelon form. Returns pivot column indices.
// The elimination of non-pivot rows fans out across rows; the parallel and
// serial paths produce bit-identical results.
std::vector<size_t> rref(Mat& m, Exec exec = Exec::Serial);

size_t rank(const Mat& m, Exec exec = Exec::Serial);

// Basis of the right null space {x : m x = 0}.
std::vector<Vec> kernel(const Mat& m, Exec exec = Exec::Serial);

// One solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Joint eigenspace of pairwise commuting operators: {v : ops[i] v = evs[i] v}.
// Throws std::invalid_argument if the operators do not commute.
std::vector<Vec> simultaneous_eigenspace(const std::vector<Mat>& ops, const std::vector<Cyc>& evs);

// Incremental row space with exact membership tests; the workhorse behind
// closures, spans and quotient bookkeeping.
class Subspace {
 public:
  explicit Subspace(size_t ambient) : ambient_(ambient) {}

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  // Returns true when v was independent and the space grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  // Coordinates of v in terms of echelon_basis() if v lies in the space.
  std::optional<Vec> coordinates(const Vec& v) const;
  const std::vector<Vec>& echelon_basis() const { return rows_; }
  // The vectors that were actually inserted and grew the space, in order.
  const std::vector<Vec>& spanning_set() const { return inserted_; }
  bool same_space(const Subspace& o) const;

 private:
  size_t ambient_;
  std::vector<Vec> rows_;           // echelonized, pivot-normalized
  std::vector<size_t> pivots_;      // pivot column of each row
  std::vector<Vec> inserted_;
};

}  // namespace lt
