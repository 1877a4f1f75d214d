#include "stratcx/qmatrix.hpp"

#include <algorithm>

namespace stratcx {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw parse_error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& q : data_)
    if (!stratcx::is_zero(q)) return false;
  return true;
}

bool QMatrix::operator==(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != other.data_[i]) return false;
  return true;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw math_error("matrix product: inner dimensions differ");
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (stratcx::is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (stratcx::is_zero(b)) continue;
        out(i, j) += a * b;
      }
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw math_error("matrix sum: shape mismatch");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw math_error("matrix difference: shape mismatch");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-() const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

QMatrix QMatrix::hstack(const QMatrix& right) const {
  if (rows_ != right.rows_) throw math_error("hstack: row counts differ");
  QMatrix out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

QMatrix QMatrix::column(std::size_t j) const { return columns({j}); }

QMatrix QMatrix::columns(const std::vector<std::size_t>& idx) const {
  QMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

std::vector<std::size_t> Echelon::free_cols() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < mat.cols(); ++c) {
    if (p < pivot_cols.size() && pivot_cols[p] == c)
      ++p;
    else
      out.push_back(c);
  }
  return out;
}

Echelon QMatrix::reduced_echelon() const {
  Echelon e{*this, {}};
  QMatrix& m = e.mat;
  std::size_t row = 0;
  std::vector<std::size_t> nz;  // nonzero columns of the pivot row, reused
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && stratcx::is_zero(m(piv, col))) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t j = col; j < cols_; ++j) swap(m(row, j), m(piv, j));

    nz.clear();
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < cols_; ++j) {
      if (stratcx::is_zero(m(row, j))) continue;
      m(row, j) *= inv;
      nz.push_back(j);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Rational f = m(r, col);
      if (stratcx::is_zero(f)) continue;
      for (std::size_t j : nz) m(r, j) -= f * m(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

std::size_t QMatrix::rank() const {
  // pivot count is orientation-invariant; eliminate the smaller direction
  if (rows_ > cols_) return transpose().rank();
  return reduced_echelon().pivot_cols.size();
}

QMatrix QMatrix::nullspace() const {
  const Echelon e = reduced_echelon();
  const std::vector<std::size_t> free = e.free_cols();
  QMatrix out(cols_, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    out(free[j], j) = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      out(e.pivot_cols[i], j) = -e.mat(i, free[j]);
  }
  return out;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw math_error("inverse: matrix not square");
  const Echelon e = hstack(identity(rows_)).reduced_echelon();
  if (e.pivot_cols.size() != rows_ ||
      (rows_ > 0 && e.pivot_cols.back() >= rows_))
    throw math_error("inverse: singular matrix");
  QMatrix out(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) out(i, j) = e.mat(i, rows_ + j);
  return out;
}

QMatrix QMatrix::solve(const QMatrix& rhs) const {
  if (rows_ != rhs.rows()) throw math_error("solve: row counts differ");
  const Echelon e = hstack(rhs).reduced_echelon();
  QMatrix x(cols_, rhs.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    const std::size_t pc = e.pivot_cols[i];
    if (pc >= cols_) throw math_error("solve: inconsistent linear system");
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(pc, j) = e.mat(i, cols_ + j);
  }
  // rows of the RREF past the pivots are zero on the lhs block; any nonzero
  // rhs entry there would have produced a pivot in the rhs block above
  return x;
}

std::vector<std::size_t> extend_basis(const QMatrix& current, const QMatrix& candidates) {
  if (current.rows() != candidates.rows())
    throw math_error("extend_basis: row counts differ");
  const Echelon e = current.hstack(candidates).reduced_echelon();
  std::vector<std::size_t> out;
  for (std::size_t pc : e.pivot_cols)
    if (pc >= current.cols()) out.push_back(pc - current.cols());
  return out;
}

} // namespace stratcx
