#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yangian/scalar/rational.hpp"

namespace yangian {

// Dense row-major matrix over the rationals.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static DenseMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  [[nodiscard]] DenseMatrix transpose() const;
  [[nodiscard]] std::size_t rank() const;
  // Basis of the right null space, one vector per free column.
  [[nodiscard]] std::vector<std::vector<Rational>> nullspace() const;
  // Throws SolveError when singular.
  [[nodiscard]] DenseMatrix inverse() const;
  // Some solution of A x = b, or nullopt when inconsistent.
  [[nodiscard]] std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
  [[nodiscard]] bool is_scalar_multiple_of_identity(Rational* scalar = nullptr) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const Rational& s, DenseMatrix a);
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  // Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace yangian
