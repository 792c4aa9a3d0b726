#include "symcent/matrix.hpp"

#include <algorithm>
#include <utility>

namespace symcent {

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool is_zero(std::span<const FieldElement> v) {
  return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x.value == 0; });
}

GaussResult gauss(const Field& field, Matrix m) {
  GaussResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && field.is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    if (prow[c] != field.one()) {
      const FieldElement s = field.inv(prow[c]);
      for (std::size_t k = c; k < cols; ++k) prow[k] = field.mul(prow[k], s);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto row = m.row(i);
      const FieldElement f = row[c];
      if (field.is_zero(f)) continue;
      for (std::size_t k = c; k < cols; ++k) {
        if (!field.is_zero(prow[k])) row[k] = field.sub(row[k], field.mul(f, prow[k]));
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
      v[out.pivot_cols[i]] = field.neg(m(i, free));
    }
    out.nullspace_basis.push_back(std::move(v));
  }
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const Field& field, Matrix m) { return gauss(field, std::move(m)).rank; }

std::vector<Vector> row_basis(const Field& field, const std::vector<Vector>& rows,
                              std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  auto g = gauss(field, std::move(m));
  std::vector<Vector> basis;
  basis.reserve(g.rank);
  for (std::size_t i = 0; i < g.rank; ++i) {
    auto row = g.rref.row(i);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement f = a(i, k);
      if (field.is_zero(f)) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out[j] = field.add(out[j], field.mul(f, brow[j]));
      }
    }
  }
  return c;
}

Vector multiply(const Field& field, const Matrix& a, std::span<const FieldElement> v) {
  Vector out(a.rows(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FieldElement acc = field.zero();
    auto row = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) acc = field.add(acc, field.mul(row[k], v[k]));
    out[i] = acc;
  }
  return out;
}

}  // namespace symcent
