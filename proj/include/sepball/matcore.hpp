#pragma once
// Dense complex and Hermitian matrix algebra: norms, spectra, tensor
// structure, block decompositions and linear maps on matrices.
//
// Everything here is a pure function of its arguments. Matrix values are
// immutable once constructed and can be shared freely between threads.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sepball/error.hpp"

namespace sepball {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Largest total dimension for which a dense matrix is ever built (12 qubits).
inline constexpr std::size_t kMaterializationCap = 4096;

/// Relative PSD tolerance: lambda_min >= -tol * max(1, ||H||_inf).
inline constexpr double kDefaultPsdTol = 1e-10;

/// HermitianMatrix rejects input whose anti-Hermitian part exceeds this
/// fraction of its Frobenius norm.
inline constexpr double kDefaultHermitianRejection = 1e-8;

/// Finite dense complex matrix.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(CMat m);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  cplx operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const CMat& mat() const { return m_; }
  operator const CMat&() const { return m_; }

 private:
  CMat m_;
};

/// Square matrix equal to its conjugate transpose, bit for bit.
///
/// Construction symmetrizes H = (A + A^dagger)/2, which makes the mirror
/// entries exact conjugates and the diagonal exactly real. Input whose
/// anti-Hermitian part is larger than `reject_threshold * ||A||_2` is refused.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const CMat& a, double reject_threshold = kDefaultHermitianRejection);

  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix diagonal(const std::vector<double>& d);
  static HermitianMatrix projector(const CVec& x);  // x x^dagger

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  cplx operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const CMat& mat() const { return m_; }
  operator const CMat&() const { return m_; }
  ComplexMatrix as_complex() const { return ComplexMatrix(m_); }
  double trace() const { return m_.trace().real(); }

 private:
  CMat m_;
};

/// Local dimensions (d_1, ..., d_m) of a tensor factorization, each >= 2.
class Dims {
 public:
  explicit Dims(std::vector<int> dims);

  static Dims uniform(int d0, int parties);
  static Dims qubits(int parties) { return uniform(2, parties); }

  std::size_t size() const { return dims_.size(); }
  int operator[](std::size_t i) const { return dims_[i]; }
  const std::vector<int>& values() const { return dims_; }
  auto begin() const { return dims_.begin(); }
  auto end() const { return dims_.end(); }

  bool homogeneous() const;
  double log_total() const;
  /// Product of the dims, or nullopt if it does not fit in 62 bits.
  std::optional<std::uint64_t> total() const;
  /// Product of the dims; throws CapExceededError above kMaterializationCap.
  std::size_t materialized_total() const;

  std::string to_string() const;

  friend bool operator==(const Dims&, const Dims&) = default;

 private:
  std::vector<int> dims_;
};

/// Linear map M(in_dim) -> M(out_dim) stored by its images of matrix units:
/// images[i * in_dim + j] = phi(E_ij).
///
/// Construction checks Hermiticity preservation, phi(E_ij)^dagger = phi(E_ji)
/// within 1e-12, and phi(I) = I within 1e-12 when flagged stochastic.
class LinearMap {
 public:
  LinearMap(std::size_t in_dim, std::size_t out_dim, std::vector<CMat> images, bool stochastic);

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t in_dim, std::size_t out_dim);
  /// Tabulates `fn` on the matrix units.
  static LinearMap from_function(std::size_t in_dim, std::size_t out_dim,
                                 const std::function<CMat(const CMat&)>& fn, bool stochastic);

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  bool stochastic() const { return stochastic_; }
  const CMat& image(std::size_t i, std::size_t j) const { return images_[i * in_dim_ + j]; }

  /// Adjoint with respect to <A, B> = tr(A^dagger B).
  ComplexMatrix adjoint_apply(const CMat& w) const;

 private:
  std::size_t in_dim_;
  std::size_t out_dim_;
  std::vector<CMat> images_;
  bool stochastic_;
};

// Norms.

double frobenius_norm(const CMat& m);
double operator_norm(const CMat& m);
double trace_norm(const CMat& m);

// Spectra.

struct EigenSystem {
  std::vector<double> values;  // decreasing
  CMat vectors;                // column k belongs to values[k]
};

/// Real eigenvalues of H, sorted decreasing. Throws ConvergenceError if the
/// solver does not converge.
std::vector<double> eig_hermitian(const HermitianMatrix& h);
EigenSystem eigensystem(const HermitianMatrix& h);
double lambda_min(const HermitianMatrix& h);

/// True iff lambda_min(H) >= -tol * max(1, ||H||_inf).
bool is_psd(const HermitianMatrix& h, double tol = kDefaultPsdTol);

// Tensor structure.

ComplexMatrix kron(const CMat& a, const CMat& b);
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);

/// Transpose on one tensor factor.
HermitianMatrix partial_transpose(const HermitianMatrix& h, const Dims& dims, std::size_t subsystem);
/// Transpose on every factor whose flag is set.
HermitianMatrix partial_transpose(const HermitianMatrix& h, const Dims& dims, const std::vector<bool>& which);

/// Trace out every factor whose `keep` flag is clear.
HermitianMatrix partial_trace(const HermitianMatrix& h, const Dims& dims, const std::vector<bool>& keep);

// Elementwise product.

ComplexMatrix schur(const CMat& a, const CMat& b);
HermitianMatrix schur(const HermitianMatrix& a, const HermitianMatrix& b);

// Block structure of B(d1, d2): a d1 x d1 array of d2 x d2 blocks.

enum class BlockNorm { two, inf };

/// (i, j) block of a (d1 d2) x (d1 d2) matrix.
CMat block(const CMat& x, std::size_t d2, std::size_t i, std::size_t j);

/// d1 x d1 matrix of block norms.
RMat block_norm_matrix(const CMat& x, std::size_t d1, std::size_t d2, BlockNorm which);

/// d1 x d1 matrix of block traces (the unnormalized reduced matrix on the
/// block index).
CMat block_trace_matrix(const CMat& x, std::size_t d1, std::size_t d2);

struct Tracelessified {
  HermitianMatrix matrix;  // (U (x) I) X (U (x) I)^dagger
  CMat unitary;            // U, d1 x d1
};

/// Conjugates by a unitary on the block index so that every off-diagonal
/// block becomes traceless.
Tracelessified tracelessify_offdiag(const HermitianMatrix& x, std::size_t d1, std::size_t d2);

// Maps.

ComplexMatrix apply_map(const LinearMap& phi, const CMat& x);

/// Blockwise application: the d1 x d1 block matrix whose (i, j) block is
/// phi(X^(i,j)).
ComplexMatrix tilde_apply(const LinearMap& phi, const CMat& x, std::size_t d1);
HermitianMatrix tilde_apply(const LinearMap& phi, const HermitianMatrix& x, std::size_t d1);

}  // namespace sepball
