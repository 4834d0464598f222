#pragma once

// Small dense complex matrices and a one-sided Jacobi SVD, sized for
// matricizations of desk-scale tensor states.

#include <complex>
#include <cstddef>
#include <vector>

namespace hyper {

using cplx = std::complex<double>;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CMatrix adjoint() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// A = U diag(sigma) V^H with sigma sorted in descending order. U is
/// rows x k and V is cols x k with k = min(rows, cols).
struct Svd {
  std::vector<double> singular_values;
  CMatrix u;
  CMatrix v;
};

Svd svd(const CMatrix& a);

}  // namespace hyper
