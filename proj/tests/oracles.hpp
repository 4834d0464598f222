#pragma once

// Reference computations written independently of the library kernels.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "hyper/entangle.hpp"

namespace hyper::testing {

using Dense = std::vector<std::vector<cplx>>;

/// Rank by Gaussian elimination with partial pivoting; entries below
/// `tol` times the largest entry count as zero.
inline std::size_t row_reduction_rank(Dense a, double tol = 1e-9) {
  double scale = 0.0;
  for (const auto& row : a)
    for (const auto& x : row) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    for (std::size_t r = rank; r < rows; ++r)
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    if (std::abs(a[pivot][c]) <= tol * scale) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const cplx f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Matricization for a cut {0..split-1} | {split..m-1}: with row-major
/// amplitudes this is a plain reshape.
inline Dense reshape(const std::vector<cplx>& amps, std::size_t rows) {
  const std::size_t cols = amps.size() / rows;
  Dense out(rows, std::vector<cplx>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r][c] = amps[r * cols + c];
  return out;
}

inline std::vector<cplx> kronecker(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

inline double distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

inline std::vector<cplx> random_amps(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

inline TensorState random_state(std::mt19937_64& rng, std::vector<std::size_t> dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return TensorState::make(std::move(dims), random_amps(rng, n));
}

/// Bell pairs and friends on two qubits.
inline TensorState phi_plus() { return TensorState::make({2, 2}, {1, 0, 0, 1}); }
inline TensorState psi_minus() { return TensorState::make({2, 2}, {0, 1, -1, 0}); }

}  // namespace hyper::testing
