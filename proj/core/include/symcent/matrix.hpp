#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symcent/field.hpp"

namespace symcent {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a finite field. The field is not stored;
/// every arithmetic routine takes it explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  const std::vector<FieldElement>& entries() const noexcept { return data_; }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct GaussResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Basis of {v : M v = 0}; one vector per free column.
  std::vector<Vector> nullspace_basis;
};

/// Reduced row-echelon form by first-nonzero pivoting.
GaussResult gauss(const Field& field, Matrix m);

std::size_t rank(const Field& field, Matrix m);

/// Basis of the row space, in reduced echelon form.
std::vector<Vector> row_basis(const Field& field, const std::vector<Vector>& rows,
                              std::size_t cols);

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Vector multiply(const Field& field, const Matrix& a, std::span<const FieldElement> v);

bool is_zero(std::span<const FieldElement> v);

}  // namespace symcent
