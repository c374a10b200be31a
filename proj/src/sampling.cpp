#include "sepball/sampling.hpp"

#include <cmath>

namespace sepball::sampling {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) { return Rng(derive_seed(seed, stream)); }

CMat gaussian_complex(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  CMat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = cplx(re * s, im * s);
    }
  }
  return m;
}

HermitianMatrix gaussian_hermitian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  const auto dim = static_cast<Eigen::Index>(n);
  CMat m = CMat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    m(i, i) = g(rng);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = cplx(re * s, im * s);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianMatrix(m);
}

HermitianMatrix hermitian_on_sphere(std::size_t n, double radius, bool traceless, Rng& rng) {
  for (;;) {
    CMat m = gaussian_hermitian(n, rng).mat();
    if (traceless) m -= (m.trace() / static_cast<double>(n)) * CMat::Identity(m.rows(), m.cols());
    const double norm = frobenius_norm(m);
    if (norm > 1e-12) return HermitianMatrix(m * (radius / norm));
  }
}

CVec unit_vector(std::size_t n, Rng& rng) {
  for (;;) {
    CVec v = gaussian_complex(n, 1, rng).col(0);
    const double norm = v.norm();
    if (norm > 1e-12) return v / norm;
  }
}

HermitianMatrix density_matrix(std::size_t n, std::size_t rank, Rng& rng) {
  const CMat g = gaussian_complex(n, rank, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return HermitianMatrix(rho);
}

RVec simplex_point(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  RVec y(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = e(rng);
  return y / y.sum();
}

HermitianMatrix correlation_matrix(std::size_t n, std::size_t vec_dim, Rng& rng) {
  CMat vs(static_cast<Eigen::Index>(vec_dim), static_cast<Eigen::Index>(n));
  for (Eigen::Index k = 0; k < vs.cols(); ++k) vs.col(k) = unit_vector(vec_dim, rng);
  CMat b = vs.adjoint() * vs;
  for (Eigen::Index k = 0; k < b.rows(); ++k) b(k, k) = 1.0;
  return HermitianMatrix(b);
}

}  // namespace sepball::sampling
