#include "sepball/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <sstream>

#include "sepball/kernels.hpp"

namespace sepball {
namespace {

void check_cap(Eigen::Index rows, Eigen::Index cols) {
  if (static_cast<std::size_t>(rows) > kMaterializationCap ||
      static_cast<std::size_t>(cols) > kMaterializationCap) {
    std::ostringstream msg;
    msg << "matrix of size " << rows << "x" << cols << " exceeds the materialization cap of "
        << kMaterializationCap;
    throw CapExceededError(msg.str());
  }
}

std::span<const cplx> flat(const CMat& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}

// Mixed-radix digits of a flat index, most significant factor first.
void digits_of(std::size_t index, const std::vector<int>& dims, std::vector<int>& out) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<int>(index % static_cast<std::size_t>(dims[k]));
    index /= static_cast<std::size_t>(dims[k]);
  }
}

std::size_t index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    index = index * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(digits[k]);
  }
  return index;
}

void check_square_with_dims(const HermitianMatrix& h, const Dims& dims) {
  const std::size_t d = dims.materialized_total();
  if (h.dim() != d) {
    throw DimensionError("matrix dimension " + std::to_string(h.dim()) +
                         " does not match dims " + dims.to_string());
  }
}

void check_block_shape(const CMat& x, std::size_t d1, std::size_t d2) {
  if (d1 == 0 || d2 == 0 || x.rows() != x.cols() ||
      static_cast<std::size_t>(x.rows()) != d1 * d2) {
    throw DimensionError("expected a square matrix of dimension " + std::to_string(d1 * d2));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix / HermitianMatrix

ComplexMatrix::ComplexMatrix(CMat m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw DimensionError("matrix must be nonempty");
  check_cap(m_.rows(), m_.cols());
  if (!m_.allFinite()) throw DomainError("matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  return ComplexMatrix(CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(CMat::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols)));
}

HermitianMatrix::HermitianMatrix(const CMat& a, double reject_threshold) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw DimensionError("Hermitian matrix must be square and nonempty");
  check_cap(a.rows(), a.cols());
  if (!a.allFinite()) throw DomainError("matrix has non-finite entries");
  const CMat skew = a - a.adjoint();
  const double skew_norm = 0.5 * std::sqrt(kernels::sum_abs2(flat(skew)));
  const double norm = std::sqrt(kernels::sum_abs2(flat(a)));
  if (skew_norm > reject_threshold * norm) {
    throw DomainError("matrix is not Hermitian within the rejection threshold");
  }
  m_ = 0.5 * (a + a.adjoint());
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return HermitianMatrix(CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  CMat m = CMat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::projector(const CVec& x) {
  return HermitianMatrix(x * x.adjoint());
}

// ---------------------------------------------------------------------------
// Dims

Dims::Dims(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionError("dims must list at least one party");
  for (int d : dims_) {
    if (d < 2) throw DimensionError("every local dimension must be >= 2");
  }
}

Dims Dims::uniform(int d0, int parties) {
  if (parties < 1) throw DimensionError("need at least one party");
  return Dims(std::vector<int>(static_cast<std::size_t>(parties), d0));
}

bool Dims::homogeneous() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_.front(); });
}

double Dims::log_total() const {
  double s = 0.0;
  for (int d : dims_) s += std::log(static_cast<double>(d));
  return s;
}

std::optional<std::uint64_t> Dims::total() const {
  std::uint64_t t = 1;
  for (int d : dims_) {
    if (t > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(d)) return std::nullopt;
    t *= static_cast<std::uint64_t>(d);
  }
  return t;
}

std::size_t Dims::materialized_total() const {
  const auto t = total();
  if (!t || *t > kMaterializationCap) {
    throw CapExceededError("dims " + to_string() + " exceed the materialization cap of " +
                           std::to_string(kMaterializationCap));
  }
  return static_cast<std::size_t>(*t);
}

std::string Dims::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) out << (i ? "," : "") << dims_[i];
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(std::size_t in_dim, std::size_t out_dim, std::vector<CMat> images, bool stochastic)
    : in_dim_(in_dim), out_dim_(out_dim), images_(std::move(images)), stochastic_(stochastic) {
  if (in_dim_ == 0 || out_dim_ == 0) throw DimensionError("map dimensions must be positive");
  if (images_.size() != in_dim_ * in_dim_) throw DimensionError("map needs in_dim^2 images");
  for (const CMat& m : images_) {
    if (static_cast<std::size_t>(m.rows()) != out_dim_ || static_cast<std::size_t>(m.cols()) != out_dim_) {
      throw DimensionError("map image has the wrong shape");
    }
    if (!m.allFinite()) throw DomainError("map image has non-finite entries");
  }
  for (std::size_t i = 0; i < in_dim_; ++i) {
    for (std::size_t j = 0; j < in_dim_; ++j) {
      const double gap = (image(i, j).adjoint() - image(j, i)).cwiseAbs().maxCoeff();
      if (gap > 1e-12) throw DomainError("map does not preserve Hermiticity");
    }
  }
  if (stochastic_) {
    CMat unit = CMat::Zero(static_cast<Eigen::Index>(out_dim_), static_cast<Eigen::Index>(out_dim_));
    for (std::size_t i = 0; i < in_dim_; ++i) unit += image(i, i);
    const CMat eye = CMat::Identity(unit.rows(), unit.cols());
    if ((unit - eye).cwiseAbs().maxCoeff() > 1e-12) throw DomainError("map flagged stochastic but phi(I) != I");
  }
}

LinearMap LinearMap::identity(std::size_t n) {
  return from_function(n, n, [](const CMat& e) { return e; }, true);
}

LinearMap LinearMap::zero(std::size_t in_dim, std::size_t out_dim) {
  std::vector<CMat> images(in_dim * in_dim,
                           CMat::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(out_dim)));
  return LinearMap(in_dim, out_dim, std::move(images), false);
}

LinearMap LinearMap::from_function(std::size_t in_dim, std::size_t out_dim,
                                   const std::function<CMat(const CMat&)>& fn, bool stochastic) {
  std::vector<CMat> images;
  images.reserve(in_dim * in_dim);
  const auto n = static_cast<Eigen::Index>(in_dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      CMat e = CMat::Zero(n, n);
      e(i, j) = 1.0;
      images.push_back(fn(e));
    }
  }
  return LinearMap(in_dim, out_dim, std::move(images), stochastic);
}

ComplexMatrix LinearMap::adjoint_apply(const CMat& w) const {
  if (static_cast<std::size_t>(w.rows()) != out_dim_ || static_cast<std::size_t>(w.cols()) != out_dim_) {
    throw DimensionError("adjoint input has the wrong shape");
  }
  CMat out(static_cast<Eigen::Index>(in_dim_), static_cast<Eigen::Index>(in_dim_));
  for (std::size_t i = 0; i < in_dim_; ++i) {
    for (std::size_t j = 0; j < in_dim_; ++j) {
      // <E_ij, phi*(W)> = <phi(E_ij), W>
      out(i, j) = (image(i, j).adjoint() * w).trace();
    }
  }
  return ComplexMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Norms

double frobenius_norm(const CMat& m) { return std::sqrt(kernels::sum_abs2(flat(m))); }

double operator_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMat> svd(m);
  return svd.singularValues().sum();
}

// ---------------------------------------------------------------------------
// Spectra

EigenSystem eigensystem(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(h.mat());
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver did not converge");
  const auto n = static_cast<Eigen::Index>(h.dim());
  EigenSystem out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

std::vector<double> eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(h.mat(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver did not converge");
  const RVec& ev = solver.eigenvalues();
  std::vector<double> out(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index k = 0; k < ev.size(); ++k) out[static_cast<std::size_t>(k)] = ev(ev.size() - 1 - k);
  return out;
}

double lambda_min(const HermitianMatrix& h) { return eig_hermitian(h).back(); }

bool is_psd(const HermitianMatrix& h, double tol) {
  if (tol < 0.0) throw DomainError("PSD tolerance must be nonnegative");
  const std::vector<double> ev = eig_hermitian(h);
  const double scale = std::max({1.0, std::abs(ev.front()), std::abs(ev.back())});
  return ev.back() >= -tol * scale;
}

// ---------------------------------------------------------------------------
// Tensor structure

ComplexMatrix kron(const CMat& a, const CMat& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  check_cap(rows, cols);
  CMat out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return ComplexMatrix(std::move(out));
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(kron(a.mat(), b.mat()).mat());
}

HermitianMatrix partial_transpose(const HermitianMatrix& h, const Dims& dims, std::size_t subsystem) {
  if (subsystem >= dims.size()) throw DimensionError("subsystem index out of range");
  std::vector<bool> which(dims.size(), false);
  which[subsystem] = true;
  return partial_transpose(h, dims, which);
}

HermitianMatrix partial_transpose(const HermitianMatrix& h, const Dims& dims, const std::vector<bool>& which) {
  check_square_with_dims(h, dims);
  if (which.size() != dims.size()) throw DimensionError("transpose flags must match the number of parties");
  const std::size_t d = h.dim();
  const auto& dv = dims.values();
  std::vector<int> r(dv.size()), c(dv.size());
  CMat out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t row = 0; row < d; ++row) {
    digits_of(row, dv, r);
    for (std::size_t col = 0; col < d; ++col) {
      digits_of(col, dv, c);
      std::vector<int> r2 = r, c2 = c;
      for (std::size_t k = 0; k < dv.size(); ++k) {
        if (which[k]) std::swap(r2[k], c2[k]);
      }
      out(static_cast<Eigen::Index>(index_of(r2, dv)), static_cast<Eigen::Index>(index_of(c2, dv))) =
          h(row, col);
    }
  }
  return HermitianMatrix(out);
}

HermitianMatrix partial_trace(const HermitianMatrix& h, const Dims& dims, const std::vector<bool>& keep) {
  check_square_with_dims(h, dims);
  if (keep.size() != dims.size()) throw DimensionError("keep flags must match the number of parties");
  const auto& dv = dims.values();
  std::vector<int> kept_dims;
  for (std::size_t k = 0; k < dv.size(); ++k) {
    if (keep[k]) kept_dims.push_back(dv[k]);
  }
  const std::size_t dk = std::accumulate(kept_dims.begin(), kept_dims.end(), std::size_t{1},
                                         [](std::size_t a, int b) { return a * static_cast<std::size_t>(b); });
  CMat out = CMat::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  const std::size_t d = h.dim();
  std::vector<int> r(dv.size()), c(dv.size()), rk, ck;
  for (std::size_t row = 0; row < d; ++row) {
    digits_of(row, dv, r);
    for (std::size_t col = 0; col < d; ++col) {
      digits_of(col, dv, c);
      bool traced_equal = true;
      rk.clear();
      ck.clear();
      for (std::size_t k = 0; k < dv.size(); ++k) {
        if (keep[k]) {
          rk.push_back(r[k]);
          ck.push_back(c[k]);
        } else if (r[k] != c[k]) {
          traced_equal = false;
          break;
        }
      }
      if (!traced_equal) continue;
      out(static_cast<Eigen::Index>(index_of(rk, kept_dims)), static_cast<Eigen::Index>(index_of(ck, kept_dims))) +=
          h(row, col);
    }
  }
  return HermitianMatrix(out);
}

// ---------------------------------------------------------------------------
// Schur product

ComplexMatrix schur(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("Schur product needs equal shapes");
  CMat out(a.rows(), a.cols());
  kernels::hadamard(flat(a), flat(b), {out.data(), static_cast<std::size_t>(out.size())});
  return ComplexMatrix(std::move(out));
}

HermitianMatrix schur(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(schur(a.mat(), b.mat()).mat());
}

// ---------------------------------------------------------------------------
// Blocks

CMat block(const CMat& x, std::size_t d2, std::size_t i, std::size_t j) {
  const auto n = static_cast<Eigen::Index>(d2);
  return x.block(static_cast<Eigen::Index>(i) * n, static_cast<Eigen::Index>(j) * n, n, n);
}

RMat block_norm_matrix(const CMat& x, std::size_t d1, std::size_t d2, BlockNorm which) {
  check_block_shape(x, d1, d2);
  RMat out(static_cast<Eigen::Index>(d1), static_cast<Eigen::Index>(d1));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      const CMat b = block(x, d2, i, j);
      out(i, j) = which == BlockNorm::two ? frobenius_norm(b) : operator_norm(b);
    }
  }
  return out;
}

CMat block_trace_matrix(const CMat& x, std::size_t d1, std::size_t d2) {
  check_block_shape(x, d1, d2);
  CMat t(static_cast<Eigen::Index>(d1), static_cast<Eigen::Index>(d1));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) t(i, j) = block(x, d2, i, j).trace();
  }
  return t;
}

Tracelessified tracelessify_offdiag(const HermitianMatrix& x, std::size_t d1, std::size_t d2) {
  check_block_shape(x.mat(), d1, d2);
  const HermitianMatrix traces(block_trace_matrix(x.mat(), d1, d2));
  const EigenSystem es = eigensystem(traces);
  // traces = V diag V^dagger, so U = V^dagger makes U traces U^dagger diagonal.
  CMat u = es.vectors.adjoint();
  const CMat big = kron(u, CMat::Identity(static_cast<Eigen::Index>(d2), static_cast<Eigen::Index>(d2))).mat();
  return {HermitianMatrix(big * x.mat() * big.adjoint()), std::move(u)};
}

// ---------------------------------------------------------------------------
// Maps

ComplexMatrix apply_map(const LinearMap& phi, const CMat& x) {
  const std::size_t n = phi.in_dim();
  if (static_cast<std::size_t>(x.rows()) != n || static_cast<std::size_t>(x.cols()) != n) {
    throw DimensionError("map input has the wrong shape");
  }
  const auto m = static_cast<Eigen::Index>(phi.out_dim());
  CMat out = CMat::Zero(m, m);
  std::span<cplx> acc{out.data(), static_cast<std::size_t>(out.size())};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx coeff = x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (coeff == cplx{0.0, 0.0}) continue;
      kernels::axpy(coeff, flat(phi.image(i, j)), acc);
    }
  }
  return ComplexMatrix(std::move(out));
}

ComplexMatrix tilde_apply(const LinearMap& phi, const CMat& x, std::size_t d1) {
  const std::size_t d2 = phi.in_dim();
  check_block_shape(x, d1, d2);
  const auto m = static_cast<Eigen::Index>(phi.out_dim());
  CMat out(static_cast<Eigen::Index>(d1) * m, static_cast<Eigen::Index>(d1) * m);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      out.block(static_cast<Eigen::Index>(i) * m, static_cast<Eigen::Index>(j) * m, m, m) =
          apply_map(phi, block(x, d2, i, j)).mat();
    }
  }
  return ComplexMatrix(std::move(out));
}

HermitianMatrix tilde_apply(const LinearMap& phi, const HermitianMatrix& x, std::size_t d1) {
  return HermitianMatrix(tilde_apply(phi, x.mat(), d1).mat());
}

}  // namespace sepball
