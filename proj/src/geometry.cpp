#include "sepball/geometry.hpp"

#include <cmath>
#include <numbers>

namespace sepball::geometry {

double reconstruction_error(const ConvexWitness& w) {
  if (w.weights.size() != w.states.size()) throw DimensionError("witness weights and states differ in count");
  CMat sum = CMat::Zero(w.target.mat().rows(), w.target.mat().cols());
  for (std::size_t i = 0; i < w.states.size(); ++i) sum += w.weights[i] * w.states[i].mat();
  return (sum - w.target.mat()).cwiseAbs().maxCoeff();
}

CMat complete_basis(const CVec& x) {
  const Eigen::Index n = x.size();
  if (n == 0) throw DimensionError("empty vector");
  if (std::abs(x.norm() - 1.0) > 1e-12) throw DomainError("basis completion needs a unit vector");
  // y = e^{-i theta} x has a real nonnegative first entry; H = I - 2ww^dagger/|w|^2
  // with w = e_1 - y swaps e_1 and y.
  const double theta = std::arg(x(0));
  const CVec y = std::polar(1.0, -theta) * x;
  CVec w = -y;
  w(0) += 1.0;
  const double w2 = w.squaredNorm();
  CMat h = CMat::Identity(n, n);
  if (w2 > 1e-30) h -= (2.0 / w2) * w * w.adjoint();
  return h;
}

ConvexWitness sep_symmetry_witness(const Dims& dims, const std::vector<CVec>& local_vectors) {
  if (local_vectors.size() != dims.size()) throw DimensionError("need one vector per party");
  const std::size_t d = dims.materialized_total();
  std::vector<CMat> bases;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (local_vectors[k].size() != dims[k]) throw DimensionError("local vector has the wrong dimension");
    bases.push_back(complete_basis(local_vectors[k]));
  }

  const double weight = 1.0 / static_cast<double>(d - 1);
  ConvexWitness w{{}, {}, HermitianMatrix::identity(d)};
  CVec pi_vec;
  for (std::size_t index = 0; index < d; ++index) {
    // Mixed-radix digits of `index`, first party most significant.
    CVec v = CVec::Ones(1);
    std::size_t rest = index;
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
      digits[k] = rest % static_cast<std::size_t>(dims[k]);
      rest /= static_cast<std::size_t>(dims[k]);
    }
    for (std::size_t k = 0; k < dims.size(); ++k) {
      v = kron(v, bases[k].col(static_cast<Eigen::Index>(digits[k]))).mat().col(0);
    }
    if (index == 0) {
      pi_vec = v;
      continue;
    }
    w.weights.push_back(weight);
    w.states.push_back(HermitianMatrix::projector(v));
  }
  const CMat eye = CMat::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  w.target = HermitianMatrix((eye - pi_vec * pi_vec.adjoint()) * weight);
  return w;
}

double sep_symmetry_coefficient(int d) {
  if (d < 2) throw DomainError("coefficient of symmetry needs d >= 2");
  return 1.0 / (d - 1.0);
}

HermitianMatrix symmetric_point(const HermitianMatrix& pi, double alpha) {
  const double d = static_cast<double>(pi.dim());
  const CMat eye = CMat::Identity(pi.mat().rows(), pi.mat().cols());
  return HermitianMatrix((1.0 + alpha) / d * eye - alpha * pi.mat());
}

JohnFigures john_ball_figures(int d) {
  if (d < 2) throw DomainError("John figures need d >= 2");
  const double dd = d;
  const double shrink = std::sqrt(1.0 / (dd - 1.0)) / dd;
  return {shrink, std::pow(dd, -1.5), std::sqrt((dd - 1.0) / dd)};
}

std::vector<CMat> unitary_basis(int n) {
  if (n < 2) throw DomainError("unitary basis needs n >= 2");
  CMat p = CMat::Zero(n, n);
  CMat s = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    p(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    s(j, (j + 1) % n) = 1.0;
  }
  std::vector<CMat> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  CMat pk = CMat::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    CMat u = pk;
    for (int l = 0; l < n; ++l) {
      out.push_back(u);
      u = u * s;
    }
    pk = pk * p;
  }
  return out;
}

HermitianMatrix maximally_entangled_projector(int n) {
  if (n < 2) throw DomainError("maximally entangled state needs n >= 2");
  CVec psi = CVec::Zero(static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) psi(static_cast<Eigen::Index>(i) * n + i) = 1.0 / std::sqrt(double(n));
  return HermitianMatrix::projector(psi);
}

ConvexWitness mes_symmetry_witness(int n) {
  if (n < 2) throw DomainError("maximally entangled witness needs n >= 2");
  if (static_cast<std::size_t>(n) * n > kMaterializationCap) {
    throw CapExceededError("n^2 exceeds the materialization cap");
  }
  const HermitianMatrix pi = maximally_entangled_projector(n);
  const std::vector<CMat> basis = unitary_basis(n);
  const double weight = 1.0 / (static_cast<double>(n) * n - 1.0);
  const CMat eye_n = CMat::Identity(n, n);

  ConvexWitness w{{}, {}, pi};
  for (std::size_t i = 1; i < basis.size(); ++i) {
    const CMat local = kron(eye_n, basis[i]).mat();
    w.weights.push_back(weight);
    w.states.push_back(HermitianMatrix(local * pi.mat() * local.adjoint()));
  }
  const CMat eye = CMat::Identity(pi.mat().rows(), pi.mat().cols());
  w.target = HermitianMatrix((eye - pi.mat()) * weight);
  return w;
}

}  // namespace sepball::geometry
