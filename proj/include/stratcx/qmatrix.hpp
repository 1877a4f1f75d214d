#pragma once

#include <cstddef>
#include <vector>

#include "stratcx/numeric.hpp"

namespace stratcx {

struct Echelon;

// Dense matrix over arbitrary-precision rationals. All decisions that matter
// here (rank, kernels, solvability) are exact; there is no floating point on
// any code path.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const QMatrix& other) const;

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix operator-() const;
  QMatrix scaled(const Rational& s) const;
  QMatrix transpose() const;

  // [this | right], row counts must match
  QMatrix hstack(const QMatrix& right) const;
  QMatrix column(std::size_t j) const;
  QMatrix columns(const std::vector<std::size_t>& idx) const;

  Echelon reduced_echelon() const;

  std::size_t rank() const;

  // Columns form the canonical kernel basis: one vector per free column of
  // the RREF, with value 1 at its own free column and 0 at every other free
  // column. Coordinates of a kernel vector can therefore be read off at the
  // free positions.
  QMatrix nullspace() const;

  QMatrix inverse() const;  // throws math_error when singular

  // Exact solution X of this * X = rhs; free variables are set to 0.
  // Throws math_error when the system is inconsistent.
  QMatrix solve(const QMatrix& rhs) const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct Echelon {
  QMatrix mat;                         // reduced row-echelon form
  std::vector<std::size_t> pivot_cols; // ascending
  std::vector<std::size_t> free_cols() const;
};

// Column indices of `candidates` that extend the column span of `current`
// to span(current) + span(candidates), chosen greedily left to right.
std::vector<std::size_t> extend_basis(const QMatrix& current, const QMatrix& candidates);

} // namespace stratcx
