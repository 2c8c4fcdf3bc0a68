#pragma once

#include <vector>

#include "inselim/rational.hpp"

namespace inselim {

// Dense rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }
  bool operator==(const RationalMatrix& o) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

// Reduced row echelon form via fraction-exact Gaussian elimination.
RrefResult rref(RationalMatrix m);

int rank(const RationalMatrix& m);

// Basis of {v : m v = 0}, one vector per free column, in free-column order.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

// Incremental reduced-row-echelon accumulator over a fixed column count.
// Rows can be streamed in; the reducer maintains full RREF throughout, so
// span membership and kernel extraction are available at any point.
class RowReducer {
 public:
  explicit RowReducer(int cols);

  // Reduces the row against the accumulated basis and absorbs any nonzero
  // residual.  Returns true when the rank grew.
  bool add_row(std::vector<Rational> row);

  // Residual of the row modulo the accumulated span.
  std::vector<Rational> reduce(std::vector<Rational> row) const;
  bool contains(const std::vector<Rational>& row) const;

  int cols() const noexcept { return cols_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<int>& pivots() const noexcept { return pivots_; }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

  // Basis of the kernel of the accumulated row span seen as a matrix.
  std::vector<std::vector<Rational>> kernel_basis() const;

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;  // pivot order, pivot coefficient 1
  std::vector<int> pivots_;
};

}  // namespace inselim
