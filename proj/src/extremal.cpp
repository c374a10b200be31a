#include "sepball/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sepball/ballbounds.hpp"
#include "sepball/sampling.hpp"

namespace sepball::extremal {
namespace {

void check_tau_dims(int d2, int d1) {
  if (d2 < 4) throw DimensionError("tau needs d2 >= 4");
  if (d1 < 2) throw DimensionError("tau needs d1 >= 2");
}

void check_radius(double a) {
  if (!(a > 0.0) || a > 1.0) throw DomainError("tau needs 0 < a <= 1");
}

bool within(double lhs, double rhs) { return lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs)); }

}  // namespace

TauMapSpec TauMapSpec::critical(double a, int d2, int d1) {
  check_radius(a);
  check_tau_dims(d2, d1);
  return {a, d2, d1, std::sqrt(1.0 - a * a / d2) / a};
}

CMat tau_z_pattern(int d2) {
  if (d2 < 4) throw DimensionError("tau needs d2 >= 4");
  CMat z = CMat::Zero(d2, d2);
  z(0, 0) = M_SQRT1_2;
  z(1, 1) = -M_SQRT1_2;
  return z;
}

CMat tau_x_pattern(int d2) {
  if (d2 < 4) throw DimensionError("tau needs d2 >= 4");
  CMat x = CMat::Zero(d2, d2);
  x(3, 3) = M_SQRT1_2;
  x(2, 2) = -M_SQRT1_2;
  return x;
}

LinearMap build_tau(const TauMapSpec& spec) {
  check_radius(spec.a);
  check_tau_dims(spec.d2, spec.d1);
  if (!(spec.mu >= 0.0) || !std::isfinite(spec.mu)) throw DomainError("tau needs a finite mu >= 0");
  const auto d2 = static_cast<std::size_t>(spec.d2);
  const Eigen::Index d1 = spec.d1;

  CMat sz = CMat::Zero(d1, d1);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  CMat sx = CMat::Zero(d1, d1);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const CMat z = tau_z_pattern(spec.d2);
  const CMat x = tau_x_pattern(spec.d2);

  // tr(Z E_ij) and tr(X E_ij) vanish off the diagonal, so only E_ii have
  // nonzero images.
  std::vector<CMat> images(d2 * d2, CMat::Zero(d1, d1));
  for (std::size_t i = 0; i < d2; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    images[i * d2 + i] = CMat::Identity(d1, d1) / static_cast<double>(spec.d2) + spec.mu * z(k, k) * sz +
                         spec.mu * x(k, k) * sx;
  }
  return LinearMap(d2, static_cast<std::size_t>(d1), std::move(images), true);
}

LinearMap build_tau(double a, int d2, int d1) { return build_tau(TauMapSpec::critical(a, d2, d1)); }

ComplexMatrix worst_case_input(double a, int d2) {
  check_radius(a);
  if (d2 < 4) throw DimensionError("tau needs d2 >= 4");
  const double d = d2;
  const double g2 = 2.0 * (1.0 - a * a / d) / (a * a);  // gamma'^2
  const double alpha = std::sqrt(1.0 / (1.0 + g2 * d));
  const double beta = std::sqrt(g2 * d / (1.0 + g2 * d));
  const CMat y = (alpha / std::sqrt(d)) * CMat::Identity(d2, d2) +
                 (beta * M_SQRT1_2) * (tau_x_pattern(d2) + cplx(0.0, 1.0) * tau_z_pattern(d2));
  return ComplexMatrix(y);
}

double achieved_ratio(const LinearMap& phi, const CMat& y) {
  const double norm = frobenius_norm(y);
  if (!(norm > 0.0)) throw DomainError("ratio of a zero input");
  return operator_norm(apply_map(phi, y).mat()) / norm;
}

bool ball_positivity_check(const LinearMap& phi, double a, int samples, std::uint64_t seed) {
  if (!phi.stochastic()) throw DomainError("ball positivity check needs a stochastic map");
  if (!(a > 0.0)) throw DomainError("radius must be positive");
  const std::size_t n = phi.in_dim();
  const CMat eye = CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (int k = 0; k < samples; ++k) {
    sampling::Rng rng = sampling::make_rng(seed, static_cast<std::uint64_t>(k));
    const HermitianMatrix delta = sampling::hermitian_on_sphere(n, a, false, rng);
    if (!is_psd(HermitianMatrix(apply_map(phi, eye + delta.mat()).mat()))) return false;
  }
  return true;
}

std::optional<HermitianMatrix> find_ball_violation(const LinearMap& phi, double a, int random_starts,
                                                   std::uint64_t seed) {
  if (!(a > 0.0)) throw DomainError("radius must be positive");
  const auto n = static_cast<Eigen::Index>(phi.in_dim());
  const CMat eye = CMat::Identity(n, n);

  std::vector<CMat> starts;
  if (n >= 4) {
    starts.push_back(a * tau_z_pattern(static_cast<int>(n)));
    starts.push_back(-a * tau_z_pattern(static_cast<int>(n)));
    starts.push_back(a * tau_x_pattern(static_cast<int>(n)));
  }
  for (int k = 0; k < random_starts; ++k) {
    sampling::Rng rng = sampling::make_rng(seed, static_cast<std::uint64_t>(k));
    starts.push_back(sampling::hermitian_on_sphere(phi.in_dim(), a, false, rng).mat());
  }

  for (CMat delta : starts) {
    double last = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
      const HermitianMatrix image(apply_map(phi, eye + delta).mat());
      const EigenSystem es = eigensystem(image);
      const double low = es.values.back();
      if (!is_psd(image)) return HermitianMatrix(delta);
      if (!(low < last - 1e-15)) break;
      last = low;
      const CVec v = es.vectors.col(es.vectors.cols() - 1);
      const CMat g = phi.adjoint_apply(v * v.adjoint()).mat();
      const CMat herm = 0.5 * (g + g.adjoint());
      const double norm = frobenius_norm(herm);
      if (!(norm > 0.0)) break;
      delta = -a * herm / norm;
    }
  }
  return std::nullopt;
}

BlockChainReport block_chain_report(const LinearMap& phi, const HermitianMatrix& a_mat, double a) {
  const std::size_t d2 = phi.in_dim();
  if (a_mat.dim() % d2 != 0 || a_mat.dim() == 0) {
    throw DimensionError("matrix dimension is not a multiple of the map input dimension");
  }
  const std::size_t d1 = a_mat.dim() / d2;
  const double lambda = bounds::lambda_bound(a, static_cast<int>(d2));

  BlockChainReport r{};
  r.tilde_norm = operator_norm(tilde_apply(phi, a_mat, d1).mat());
  const Tracelessified t = tracelessify_offdiag(a_mat, d1, d2);
  r.tilde_norm_rotated = operator_norm(tilde_apply(phi, t.matrix, d1).mat());

  RMat phi_inf(static_cast<Eigen::Index>(d1), static_cast<Eigen::Index>(d1));
  RMat entry(static_cast<Eigen::Index>(d1), static_cast<Eigen::Index>(d1));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      const CMat b = block(t.matrix.mat(), d2, i, j);
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      phi_inf(ii, jj) = operator_norm(apply_map(phi, b).mat());
      entry(ii, jj) = (i == j ? 1.0 / a : lambda) * frobenius_norm(b);
    }
  }
  r.block_norm_bound = operator_norm(phi_inf.cast<cplx>());
  r.entrywise_bound = operator_norm(entry.cast<cplx>());

  r.holds = std::abs(r.tilde_norm - r.tilde_norm_rotated) <= 1e-9 * std::max(1.0, r.tilde_norm) &&
            within(r.tilde_norm_rotated, r.block_norm_bound) && within(r.block_norm_bound, r.entrywise_bound);
  if (a <= 1.0 && a > 1.0 / static_cast<double>(d2)) {
    r.gamma_bound = bounds::gamma_bound(static_cast<int>(d1), static_cast<int>(d2), a) * frobenius_norm(a_mat.mat());
    r.holds = r.holds && within(r.entrywise_bound, *r.gamma_bound);
  }
  return r;
}

bool block_chain_check(const LinearMap& phi, const HermitianMatrix& a_mat, double a) {
  return block_chain_report(phi, a_mat, a).holds;
}

}  // namespace sepball::extremal
