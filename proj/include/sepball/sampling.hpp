#pragma once
// Seeded random generators shared by the property suites and the sampling
// harnesses. Independent streams are derived from (seed, stream) with
// splitmix64, so parallel callers get schedule-independent draws.

#include <cstdint>
#include <random>

#include "sepball/matcore.hpp"

namespace sepball::sampling {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0xB0B5;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Entries (g1 + i g2)/sqrt(2) with g1, g2 standard normal.
CMat gaussian_complex(std::size_t rows, std::size_t cols, Rng& rng);

/// Standard normal coefficients on the orthonormal Hermitian basis
/// {E_ii, (E_ij + E_ji)/sqrt2, i(E_ij - E_ji)/sqrt2}: rotation invariant.
HermitianMatrix gaussian_hermitian(std::size_t n, Rng& rng);

/// Uniform on the Frobenius sphere of the given radius, optionally restricted
/// to traceless matrices.
HermitianMatrix hermitian_on_sphere(std::size_t n, double radius, bool traceless, Rng& rng);

CVec unit_vector(std::size_t n, Rng& rng);

/// G G^dagger / tr with G Gaussian n x rank.
HermitianMatrix density_matrix(std::size_t n, std::size_t rank, Rng& rng);

/// Uniform point on the probability simplex.
RVec simplex_point(std::size_t n, Rng& rng);

/// Gram matrix of n random unit vectors in dimension `vec_dim`: PSD with
/// unit diagonal.
HermitianMatrix correlation_matrix(std::size_t n, std::size_t vec_dim, Rng& rng);

}  // namespace sepball::sampling
