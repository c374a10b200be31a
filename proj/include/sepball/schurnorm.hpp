#pragma once
// Induced 2 -> inf norms of Schur-product maps X -> B o X, and the
// majorization checks built on the same maps.
//
// For Hermitian B the norm is sqrt(max y^T C y) over the probability simplex
// with C_ij = |B_ij|^2. The simplex maximum itself is exposed by
// simplex_qp_max; schur_two_inf_norm returns its square root, which is what
// oracle_two_inf_norm measures directly.

#include <cstdint>
#include <utility>
#include <vector>

#include "sepball/matcore.hpp"

namespace sepball::schurnorm {

/// Exact enumeration is refused above this size.
inline constexpr std::size_t kExactMaxDim = 16;

struct SimplexQPResult {
  double value;
  RVec maximizer;                 // on the simplex
  std::vector<std::size_t> support;  // indices with maximizer > 0, ascending
};

/// Global maximum of y^T C y over {y >= 0, sum y = 1} for symmetric
/// nonnegative C, n <= kExactMaxDim.
///
/// Every nonempty support S is visited; on each face the stationarity system
/// C_S y_S = lambda 1, sum y_S = 1 is solved (least squares when C_S is
/// singular) and feasible solutions compete with all vertices. Ties within
/// 1e-12 relative go to the lexicographically smallest support.
SimplexQPResult simplex_qp_max(const RMat& c);

/// C_ij = |B_ij|^2.
RMat squared_modulus(const CMat& b);

/// ||X -> B o X||_{2 -> inf} on Hermitian inputs.
double schur_two_inf_norm(const HermitianMatrix& b);

/// Matrix with ones on the diagonal and eta elsewhere.
HermitianMatrix l_matrix(double eta, std::size_t n);

/// sqrt((eta^2 (n - 1) + 1) / n), valid for eta >= 1 where the maximizer is
/// uniform.
double l_matrix_norm(double eta, std::size_t n);

inline constexpr int kDefaultOracleRestarts = 64;

/// Lower bound on the norm from max ||B o x x^dagger||_2 over unit vectors x,
/// found by multiplicative ascent from `restarts` seeded starting points.
/// Restart k uses the stream derive_seed(seed, k), so the result does not
/// depend on evaluation order.
double oracle_two_inf_norm(const HermitianMatrix& b, int restarts = kDefaultOracleRestarts,
                           std::uint64_t seed = 0xB0B5);

/// G_ij = <v^i, v^j>.
HermitianMatrix gram(const std::vector<CVec>& vectors);

/// True iff u majorizes v: after zero padding and sorting decreasingly, every
/// prefix sum of u is >= the matching prefix sum of v (within `tol`, scaled by
/// the total). Throws DomainError if the totals differ by more than 1e-9.
bool majorizes(std::vector<double> u, std::vector<double> v, double tol = 1e-9);

/// Pairs (x^i, y^i) of a separable decomposition sum (x (x) y)(x (x) y)^dagger;
/// every y^i has unit norm.
class SeparableEnsemble {
 public:
  explicit SeparableEnsemble(std::vector<std::pair<CVec, CVec>> pairs);

  const std::vector<std::pair<CVec, CVec>>& pairs() const { return pairs_; }
  std::size_t first_dim() const { return static_cast<std::size_t>(pairs_.front().first.size()); }
  std::size_t second_dim() const { return static_cast<std::size_t>(pairs_.front().second.size()); }

  /// R = sum (x (x) y)(x (x) y)^dagger.
  HermitianMatrix state() const;
  /// sum x x^dagger, the marginal on the first factor.
  HermitianMatrix marginal() const;

 private:
  std::vector<std::pair<CVec, CVec>> pairs_;
};

/// Verifies Gram(x (x) y) = Gram(y) o Gram(x) entrywise (1e-12), then that the
/// spectrum of the marginal majorizes the spectrum of the state.
bool nielsen_kempe_check(const SeparableEnsemble& e);

/// For PSD B with unit diagonal, checks that eig(X) majorizes eig(B o X).
bool ds_schur_majorization_check(const HermitianMatrix& b, const HermitianMatrix& x);

}  // namespace sepball::schurnorm
