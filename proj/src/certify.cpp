#include "sepball/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sepball/ballbounds.hpp"

namespace sepball::certify {
namespace {

void check_dims(const HermitianMatrix& h, const Dims& dims) {
  if (h.dim() != dims.materialized_total()) {
    throw DimensionError("matrix dimension " + std::to_string(h.dim()) + " does not match dims " +
                         dims.to_string());
  }
}

Certificate decide(double bound, double measured, const Dims& dims) {
  const double band = kBoundaryBand * bound;
  Certificate c{Verdict::inconclusive, bound, measured, bound - measured, dims, false};
  if (measured <= bound + band) {
    c.verdict = Verdict::separable;
    c.boundary = std::abs(bound - measured) <= band;
  }
  return c;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::separable:
      return "separable";
    case Verdict::inconclusive:
      return "inconclusive";
    case Verdict::not_psd:
      return "not_psd";
    case Verdict::not_normalized:
      return "not_normalized";
  }
  return "unknown";
}

Verdict verdict_from_name(std::string_view name) {
  for (Verdict v : {Verdict::separable, Verdict::inconclusive, Verdict::not_psd, Verdict::not_normalized}) {
    if (verdict_name(v) == name) return v;
  }
  throw ParseError("unknown verdict '" + std::string(name) + "'");
}

double mu(const HermitianMatrix& rho) {
  if (std::abs(rho.trace() - 1.0) > kTraceTol) throw DomainError("mu needs a unit-trace matrix");
  if (!is_psd(rho)) throw DomainError("mu needs a PSD matrix");
  const double purity = rho.mat().squaredNorm();  // tr(rho^2) for Hermitian rho
  const double d = static_cast<double>(rho.dim());
  return std::sqrt(std::max(0.0, d - 1.0 / purity));
}

Certificate certify_unnormalized(const HermitianMatrix& x, const Dims& dims) {
  check_dims(x, dims);
  const double bound = bounds::recursion_radius(dims);
  const CMat delta = x.mat() - CMat::Identity(x.mat().rows(), x.mat().cols());
  Certificate c = decide(bound, frobenius_norm(delta), dims);
  if (c.verdict == Verdict::inconclusive && !is_psd(x)) c.verdict = Verdict::not_psd;
  return c;
}

Certificate certify_normalized(const HermitianMatrix& rho, const Dims& dims, std::optional<double> radius) {
  check_dims(rho, dims);
  const double d = static_cast<double>(rho.dim());
  const double a = radius ? *radius : bounds::recursion_radius(dims);
  const double bound = bounds::normalized_radius(a, d);
  const CMat delta = rho.mat() - CMat::Identity(rho.mat().rows(), rho.mat().cols()) / d;
  const double measured = frobenius_norm(delta);
  if (std::abs(rho.trace() - 1.0) > kTraceTol) {
    return {Verdict::not_normalized, bound, measured, bound - measured, dims, false};
  }
  if (!is_psd(rho)) return {Verdict::not_psd, bound, measured, bound - measured, dims, false};
  return decide(bound, measured, dims);
}

Certificate certify_pseudopure(double eps, const Dims& dims, std::optional<double> log_radius) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("pseudopure weight must lie in [0, 1]");
  const double log_b = log_radius ? *log_radius : bounds::recursion_log_radius(dims);
  const double log_d = dims.log_total();
  // ||eps (pi - I/d)||_2 = eps sqrt((d-1)/d) against b / sqrt(d (d - b^2)).
  const double log_d_minus_1 = log_d + std::log1p(-std::exp(-log_d));
  const double ratio = std::exp(2.0 * log_b - log_d);
  if (!(ratio < 1.0)) throw DomainError("pseudopure bound needs b^2 < d");
  const double log_d_minus_b2 = log_d + std::log1p(-ratio);
  const double bound = std::exp(log_b - 0.5 * (log_d_minus_1 + log_d_minus_b2));
  return decide(bound, eps, dims);
}

bool ppt_all_cuts(const HermitianMatrix& rho, const Dims& dims, double tol) {
  check_dims(rho, dims);
  const std::size_t m = dims.size();
  if (m < 2) return is_psd(rho, tol);
  // The last party stays on the untransposed side; that enumerates each
  // bipartition once.
  const std::size_t cuts = std::size_t{1} << (m - 1);
  for (std::size_t mask = 1; mask < cuts; ++mask) {
    std::vector<bool> which(m, false);
    for (std::size_t k = 0; k + 1 < m; ++k) which[k] = (mask >> k) & 1U;
    if (!is_psd(partial_transpose(rho, dims, which), tol)) return false;
  }
  return true;
}

}  // namespace sepball::certify
