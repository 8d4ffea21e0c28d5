#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fedisa/error.hpp"

namespace fedisa {

/// Dense row-major matrix of 64-bit floats. Rows are samples, columns are
/// features everywhere in this codebase. Entries may be NaN only while a
/// dataset still carries missing-value markers; numeric operations require
/// finite inputs (see require_finite).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double& at(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return at(r, c); }
  double operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  const double* row_ptr(std::size_t r) const { return values_.data() + r * cols_; }
  double* row_ptr(std::size_t r) { return values_.data() + r * cols_; }

  std::vector<double> row(std::size_t r) const;
  Matrix take_rows(const std::vector<std::size_t>& indices) const;

  bool all_finite() const noexcept;
  /// Throws a dimension/domain error naming `context` if any entry is NaN/Inf.
  void require_finite(const char* context) const;

  bool operator==(const Matrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// a (n x k) times b (k x m) -> n x m. Fixed i-k-j loop order, so the
/// reduction order is part of the contract (bit-reproducible).
Matrix multiply(const Matrix& a, const Matrix& b);

/// a (n x k) times b^T where b is (m x k) -> n x m.
Matrix multiply_bt(const Matrix& a, const Matrix& b);

/// a^T (k x n becomes n x k) times b (k x m) -> n x m.
Matrix multiply_at(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

/// Adds `bias` (length = m.cols()) to every row.
void add_row_vector(Matrix& m, const std::vector<double>& bias);

/// Column sums -> vector of length m.cols().
std::vector<double> column_sums(const Matrix& m);

}  // namespace fedisa
