#include "inselim/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace inselim {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::domain_error("matrix dimensions must be >= 0");
  e_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RowReducer::RowReducer(int cols) : cols_(cols) {
  if (cols < 0) throw std::domain_error("column count must be >= 0");
}

std::vector<Rational> RowReducer::reduce(std::vector<Rational> row) const {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row width mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational& lead = row[pivots_[k]];
    if (lead == 0) continue;
    Rational factor = lead;
    const auto& basis = rows_[k];
    for (int j = pivots_[k]; j < cols_; ++j)
      if (basis[j] != 0) row[j] -= factor * basis[j];
  }
  return row;
}

bool RowReducer::contains(const std::vector<Rational>& row) const {
  auto res = reduce(row);
  return std::all_of(res.begin(), res.end(), [](const Rational& r) { return r == 0; });
}

bool RowReducer::add_row(std::vector<Rational> row) {
  row = reduce(std::move(row));
  int lead = -1;
  for (int j = 0; j < cols_; ++j)
    if (row[j] != 0) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  Rational inv = row[lead];
  for (int j = lead; j < cols_; ++j)
    if (row[j] != 0) row[j] /= inv;
  // Back-substitute into the existing rows to keep the reduced form.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational factor = rows_[k][lead];
    if (factor == 0) continue;
    for (int j = lead; j < cols_; ++j)
      if (row[j] != 0) rows_[k][j] -= factor * row[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

std::vector<std::vector<Rational>> RowReducer::kernel_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = -rows_[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

RrefResult rref(RationalMatrix m) {
  RowReducer red(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(m.cols());
    for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    red.add_row(std::move(row));
  }
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < red.rank(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = red.rows()[i][j];
  return RrefResult{std::move(out), red.pivots()};
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
  RowReducer red(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(m.cols());
    for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    red.add_row(std::move(row));
  }
  return red.kernel_basis();
}

}  // namespace inselim
