#include "sepball/schurnorm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>
#include <string>

#include "sepball/kernels.hpp"
#include "sepball/sampling.hpp"

namespace sepball::schurnorm {
namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::span<const double> flat(const RowMat& m) { return {m.data(), static_cast<std::size_t>(m.size())}; }
std::span<const double> flat(const RVec& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

std::vector<std::size_t> support_of(const RVec& y) {
  std::vector<std::size_t> s;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) > 0.0) s.push_back(static_cast<std::size_t>(i));
  }
  return s;
}

// Stationary point of y^T C y on the face spanned by `idx`, if one lies in
// the closed face.
std::optional<RVec> face_stationary_point(const RowMat& c, const std::vector<Eigen::Index>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  // Bordered system [C_S -1; 1^T 0] [y; lambda] = [0; 1].
  RMat kkt = RMat::Zero(k + 1, k + 1);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) kkt(a, b) = c(idx[a], idx[b]);
    kkt(a, k) = -1.0;
    kkt(k, a) = 1.0;
  }
  RVec rhs = RVec::Zero(k + 1);
  rhs(k) = 1.0;

  RVec sol;
  Eigen::FullPivLU<RMat> lu(kkt);
  if (lu.isInvertible()) {
    sol = lu.solve(rhs);
  } else {
    Eigen::CompleteOrthogonalDecomposition<RMat> cod(kkt);
    sol = cod.solve(rhs);
    if ((kkt * sol - rhs).norm() > 1e-9 * std::max(1.0, kkt.norm())) return std::nullopt;
  }
  if (!sol.allFinite()) return std::nullopt;

  RVec y = RVec::Zero(c.rows());
  for (Eigen::Index a = 0; a < k; ++a) {
    const double v = sol(a);
    if (v < -1e-12) return std::nullopt;
    y(idx[a]) = std::max(0.0, v);
  }
  const double total = y.sum();
  if (!(total > 0.0)) return std::nullopt;
  return y / total;
}

void validate_qp_matrix(const RMat& c) {
  if (c.rows() == 0 || c.rows() != c.cols()) throw DimensionError("simplex QP needs a nonempty square matrix");
  if (static_cast<std::size_t>(c.rows()) > kExactMaxDim) {
    throw CapExceededError("exact simplex QP is limited to n <= " + std::to_string(kExactMaxDim) +
                           "; use oracle_two_inf_norm for larger instances");
  }
  if (!c.allFinite()) throw DomainError("simplex QP matrix has non-finite entries");
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if ((c - c.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("simplex QP matrix must be symmetric");
  }
  if (c.minCoeff() < 0.0) throw DomainError("simplex QP matrix must be entrywise nonnegative");
}

}  // namespace

SimplexQPResult simplex_qp_max(const RMat& c_in) {
  validate_qp_matrix(c_in);
  const RowMat c = 0.5 * (c_in + c_in.transpose());
  const auto n = static_cast<std::size_t>(c.rows());

  bool have_best = false;
  SimplexQPResult best{0.0, RVec::Zero(static_cast<Eigen::Index>(n)), {}};

  auto consider = [&](const RVec& y) {
    const double value = kernels::quad_form(flat(c), flat(y));
    std::vector<std::size_t> support = support_of(y);
    const double tol = 1e-12 * std::max(1.0, std::abs(best.value));
    const bool better = !have_best || value > best.value + tol ||
                        (std::abs(value - best.value) <= tol &&
                         std::lexicographical_compare(support.begin(), support.end(), best.support.begin(),
                                                      best.support.end()));
    if (better) {
      best = {value, y, std::move(support)};
      have_best = true;
    }
  };

  std::vector<Eigen::Index> idx;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) idx.push_back(static_cast<Eigen::Index>(i));
    }
    if (idx.size() == 1) {
      RVec e = RVec::Zero(static_cast<Eigen::Index>(n));
      e(idx[0]) = 1.0;
      consider(e);
      continue;
    }
    if (auto y = face_stationary_point(c, idx)) consider(*y);
  }
  return best;
}

RMat squared_modulus(const CMat& b) { return b.cwiseAbs2(); }

double schur_two_inf_norm(const HermitianMatrix& b) {
  return std::sqrt(std::max(0.0, simplex_qp_max(squared_modulus(b.mat())).value));
}

HermitianMatrix l_matrix(double eta, std::size_t n) {
  if (n == 0) throw DimensionError("L matrix needs n >= 1");
  const auto k = static_cast<Eigen::Index>(n);
  CMat l = CMat::Constant(k, k, cplx(eta, 0.0));
  l.diagonal().setOnes();
  return HermitianMatrix(l);
}

double l_matrix_norm(double eta, std::size_t n) {
  if (!(eta >= 1.0)) throw DomainError("closed form needs eta >= 1");
  if (n == 0) throw DimensionError("L matrix needs n >= 1");
  const double k = static_cast<double>(n);
  return std::sqrt((eta * eta * (k - 1.0) + 1.0) / k);
}

double oracle_two_inf_norm(const HermitianMatrix& b, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw DomainError("oracle needs at least one restart");
  const std::size_t n = b.dim();
  const RowMat c = squared_modulus(b.mat());
  const CMat& bm = b.mat();

  // Value measured on the map itself: ||B o x x^dagger||_2.
  auto measure = [&](const CVec& x) { return frobenius_norm(schur(bm, x * x.adjoint()).mat()); };

  double best = 0.0;
  RVec g(static_cast<Eigen::Index>(n));
  for (int r = 0; r < restarts; ++r) {
    sampling::Rng rng = sampling::make_rng(seed, static_cast<std::uint64_t>(r));
    CVec x = sampling::unit_vector(n, rng);
    if (r == 0) {
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = std::polar(1.0 / std::sqrt(double(n)), std::arg(x(i)));
    }
    RVec y = x.cwiseAbs2();
    kernels::matvec(flat(c), flat(y), {g.data(), n});
    double f = y.dot(g);

    for (int it = 0; it < 20000 && f > 0.0; ++it) {
      // Growth transform y_i <- y_i g_i^s / sum; s = 1 is the replicator
      // step. Halve s if the objective does not improve.
      double step = 1.0;
      RVec y_next;
      double f_next = f;
      for (int halving = 0; halving < 30; ++halving, step *= 0.5) {
        y_next = y.array() * g.array().pow(step);
        const double total = y_next.sum();
        if (!(total > 0.0)) break;
        y_next /= total;
        RVec g_next(static_cast<Eigen::Index>(n));
        kernels::matvec(flat(c), flat(y_next), {g_next.data(), n});
        f_next = y_next.dot(g_next);
        if (f_next >= f * (1.0 - 1e-15)) {
          g = std::move(g_next);
          break;
        }
      }
      const bool stalled = !(f_next > f * (1.0 + 1e-16));
      if (f_next >= f * (1.0 - 1e-15)) {
        y = y_next;
        f = f_next;
      }
      if (stalled && it > 50) break;
    }

    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = std::polar(std::sqrt(y(i)), std::arg(x(i)));
    best = std::max(best, measure(x));
  }
  return best;
}

HermitianMatrix gram(const std::vector<CVec>& vectors) {
  if (vectors.empty()) throw DomainError("Gram matrix needs at least one vector");
  const Eigen::Index dim = vectors.front().size();
  CMat a(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != dim) throw DimensionError("Gram vectors must share a dimension");
    a.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  return HermitianMatrix(a.adjoint() * a);
}

bool majorizes(std::vector<double> u, std::vector<double> v, double tol) {
  const std::size_t len = std::max(u.size(), v.size());
  u.resize(len, 0.0);
  v.resize(len, 0.0);
  std::sort(u.begin(), u.end(), std::greater<>());
  std::sort(v.begin(), v.end(), std::greater<>());
  double scale = 1.0;
  for (double x : u) scale = std::max(scale, std::abs(x));
  for (double x : v) scale = std::max(scale, std::abs(x));
  scale *= static_cast<double>(std::max<std::size_t>(len, 1));
  const double su = std::accumulate(u.begin(), u.end(), 0.0);
  const double sv = std::accumulate(v.begin(), v.end(), 0.0);
  if (std::abs(su - sv) > 1e-9 * scale) throw DomainError("majorization needs equal totals");
  double pu = 0.0, pv = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    pu += u[k];
    pv += v[k];
    if (pu < pv - tol * scale) return false;
  }
  return true;
}

SeparableEnsemble::SeparableEnsemble(std::vector<std::pair<CVec, CVec>> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw DomainError("ensemble must be nonempty");
  const Eigen::Index d1 = pairs_.front().first.size();
  const Eigen::Index d2 = pairs_.front().second.size();
  if (d1 == 0 || d2 == 0) throw DimensionError("ensemble vectors must be nonempty");
  for (const auto& [x, y] : pairs_) {
    if (x.size() != d1 || y.size() != d2) throw DimensionError("ensemble vectors must share dimensions");
    if (std::abs(y.norm() - 1.0) > 1e-12) throw DomainError("second-factor vectors must have unit norm");
  }
}

HermitianMatrix SeparableEnsemble::state() const {
  const auto d = static_cast<Eigen::Index>(first_dim() * second_dim());
  CMat r = CMat::Zero(d, d);
  for (const auto& [x, y] : pairs_) {
    const CVec v = kron(x, y).mat().col(0);
    r += v * v.adjoint();
  }
  return HermitianMatrix(r);
}

HermitianMatrix SeparableEnsemble::marginal() const {
  const auto d = static_cast<Eigen::Index>(first_dim());
  CMat h = CMat::Zero(d, d);
  for (const auto& [x, y] : pairs_) h += x * x.adjoint();
  return HermitianMatrix(h);
}

bool nielsen_kempe_check(const SeparableEnsemble& e) {
  std::vector<CVec> joint, firsts, seconds;
  for (const auto& [x, y] : e.pairs()) {
    joint.push_back(kron(x, y).mat().col(0));
    firsts.push_back(x);
    seconds.push_back(y);
  }
  const HermitianMatrix g = gram(joint);
  const HermitianMatrix h = gram(firsts);
  const HermitianMatrix b = gram(seconds);
  const CMat product = schur(b, h).mat();
  const double scale = std::max(1.0, g.mat().cwiseAbs().maxCoeff());
  if ((g.mat() - product).cwiseAbs().maxCoeff() > 1e-12 * scale) return false;
  return majorizes(eig_hermitian(e.marginal()), eig_hermitian(e.state()));
}

bool ds_schur_majorization_check(const HermitianMatrix& b, const HermitianMatrix& x) {
  if (b.dim() != x.dim()) throw DimensionError("B and X must have the same dimension");
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (std::abs(b(i, i) - 1.0) > 1e-10) throw DomainError("B must have unit diagonal");
  }
  if (!is_psd(b)) throw DomainError("B must be PSD");
  return majorizes(eig_hermitian(x), eig_hermitian(schur(b, x)));
}

}  // namespace sepball::schurnorm
