#include "hyper/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyper {

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kEps = 1e-15;

// Hestenes one-sided Jacobi; requires rows >= cols.
Svd jacobi_tall(CMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  CMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(a(i, p));
          beta += std::norm(a(i, q));
          gamma += std::conj(a(i, p)) * a(i, q);
        }
        const double g = std::abs(gamma);
        if (g <= kEps * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;

        // Rotate (a_p, e^{-i phi} a_q) as a real Jacobi pair.
        const cplx phase = std::conj(gamma) / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const cplx ap = a(i, p);
          const cplx aq = phase * a(i, q);
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vp = v(i, p);
          const cplx vq = phase * v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(a(i, j));
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Svd out{std::vector<double>(n), CMatrix(m, n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.singular_values[k] = sigma[j];
    for (std::size_t i = 0; i < m; ++i) out.u(i, k) = sigma[j] > 0.0 ? a(i, j) / sigma[j] : 0.0;
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
  }
  return out;
}

}  // namespace

Svd svd(const CMatrix& a) {
  if (a.rows() >= a.cols()) return jacobi_tall(a);
  // A^H = V S U^H, so swap the factors back.
  Svd t = jacobi_tall(a.adjoint());
  return Svd{std::move(t.singular_values), std::move(t.v), std::move(t.u)};
}

}  // namespace hyper
