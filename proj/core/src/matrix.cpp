#include "yangian/scalar/matrix.hpp"

#include "yangian/error.hpp"

namespace yangian {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<std::size_t> DenseMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(p, c), (*this)(row, c));
    }
    const Rational inv = (*this)(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      const Rational f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Rational>> DenseMatrix::nullspace() const {
  DenseMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_) throw SolveError("inverse of a non-square matrix");
  DenseMatrix aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_ + r) = 1;
  }
  const auto pivots = aug.rref();
  if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) throw SolveError("matrix is singular");
  DenseMatrix inv(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = aug(r, cols_ + c);
  }
  return inv;
}

std::optional<std::vector<Rational>> DenseMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw IncompatibleError("right-hand side length mismatch");
  DenseMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
  return x;
}

bool DenseMatrix::is_scalar_multiple_of_identity(Rational* scalar) const {
  if (rows_ != cols_) return false;
  const Rational d = rows_ == 0 ? Rational(1) : (*this)(0, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? d : Rational(0))) return false;
    }
  }
  if (scalar != nullptr) *scalar = d;
  return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw IncompatibleError("matrix shape mismatch in product");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

DenseMatrix operator*(const Rational& s, DenseMatrix a) {
  for (auto& x : a.a_) x *= s;
  return a;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw IncompatibleError("matrix shape mismatch in sum");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
  return a;
}

DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw IncompatibleError("matrix shape mismatch in difference");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
  return a;
}

}  // namespace yangian
