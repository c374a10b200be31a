#include "sepball/ballbounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sepball::bounds {
namespace {

void require_party_count(int d0, int m) {
  if (d0 < 2) throw DomainError("local dimension must be >= 2");
  if (m < 2) throw DomainError("need at least two parties");
}

// log(exp(x) + exp(y)) without overflow.
double log_add(double x, double y) {
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::recursion:
      return "recursion";
    case Method::closed_form:
      return "closed_form";
    case Method::weak_corollary:
      return "weak_corollary";
    case Method::gb03_baseline:
      return "gb03_baseline";
  }
  return "unknown";
}

BallConeParams::BallConeParams(int dim_, double radius_) : dim(dim_), radius(radius_) {
  if (dim < 1) throw DomainError("cone dimension must be positive");
  if (!(radius > 0.0) || radius > std::sqrt(static_cast<double>(dim) * (dim - 1))) {
    throw DomainError("ball radius must lie in (0, sqrt(N(N-1))]");
  }
  exceeds_unit = radius > 1.0;
}

double recursion_log_radius(const Dims& dims) {
  if (dims.size() < 2) throw DomainError("the recursion needs at least two parties");
  double log_a2 = 0.0;  // base case: the bipartite ball has radius one
  double log_total = std::log(static_cast<double>(dims[0])) + std::log(static_cast<double>(dims[1]));
  for (std::size_t n = 2; n < dims.size(); ++n) {
    const double dn = dims[n];
    const double ratio = std::exp(log_a2 - log_total);  // a_{n-1}^2 / D_{n-1}
    const double denom = 2.0 * (1.0 - ratio) * (dn - 1.0) + 1.0;
    log_a2 += std::log(dn) - std::log(denom);
    log_total += std::log(dn);
  }
  return 0.5 * log_a2;
}

double recursion_radius(const Dims& dims) { return std::exp(recursion_log_radius(dims)); }

double closed_form_log_radius(int d0, int m) {
  require_party_count(d0, m);
  const double d = d0;
  // log((2d-1)^(m-2) (d^2-1) + 1)
  const double log_main = (m - 2) * std::log(2.0 * d - 1.0) + std::log(d * d - 1.0);
  const double log_denom = log_add(log_main, 0.0);
  return 0.5 * (m * std::log(d) - log_denom);
}

double closed_form_radius(int d0, int m) { return std::exp(closed_form_log_radius(d0, m)); }

double qubit_asymptotic_exponent() { return 0.5 * (std::log(3.0) / std::log(2.0) - 1.0); }

double weak_log_radius(int d0, int m) {
  require_party_count(d0, m);
  const double d = d0;
  return (0.5 * m - 1.0) * std::log(d / (2.0 * d - 1.0));
}

double weak_radius(int d0, int m) { return std::exp(weak_log_radius(d0, m)); }

double gb03_log_baseline(int m) {
  if (m < 2) throw DomainError("need at least two parties");
  return -(0.5 * m - 1.0) * std::log(2.0);
}

double gb03_baseline(int m) { return std::exp(gb03_log_baseline(m)); }

double normalized_log_radius(double log_a, double log_d) {
  const double log_ratio = 2.0 * log_a - log_d;  // log(a^2 / d)
  if (!(log_ratio < 0.0)) throw DomainError("normalized radius needs a^2 < d");
  const double log_d_minus_a2 = log_d + std::log1p(-std::exp(log_ratio));
  return log_a - 0.5 * (log_d + log_d_minus_a2);
}

double normalized_radius(double a, double d) {
  if (!(a > 0.0)) throw DomainError("radius must be positive");
  if (!(a * a < d)) throw DomainError("normalized radius needs a^2 < d");
  return a / std::sqrt(d * (d - a * a));
}

double qubit_normalized_log_radius(int m) {
  if (m < 1) throw DomainError("need at least one qubit");
  // 3^m + 3 = 3 (3^(m-1) + 1)
  const double log3 = std::log(3.0);
  const double log_denom = log3 + log_add((m - 1) * log3, 0.0);
  return 0.5 * ((m + 1) * log3 - log_denom) - 0.5 * m * std::log(6.0);
}

double qubit_normalized_radius(int m) { return std::exp(qubit_normalized_log_radius(m)); }

double gamma_bound(int d1, int d2, double a) {
  if (d1 < 1 || d2 < 1) throw DomainError("dimensions must be positive");
  if (!(a > 0.0) || a > 1.0) throw DomainError("gamma bound needs 0 < a <= 1");
  if (!(a > 1.0 / d2)) throw DomainError("gamma bound needs a > 1/d2");
  const double num = 2.0 * (1.0 - a * a / d2) * (d1 - 1.0) + 1.0;
  return std::sqrt(num / d1) / a;
}

double lambda_bound(double a, int d2) {
  if (d2 < 1) throw DomainError("dimension must be positive");
  if (!(a > 0.0) || a > std::sqrt(static_cast<double>(d2))) {
    throw DomainError("lambda bound needs 0 < a <= sqrt(d2)");
  }
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - a * a / d2))) / a;
}

double lambdaprime_bound(double a, int d2) {
  if (d2 < 1) throw DomainError("dimension must be positive");
  if (!(a > 0.0)) throw DomainError("lambda' bound needs a > 0");
  const double v = 2.0 / (a * a) - 1.0 / d2;
  if (v < 0.0) throw DomainError("lambda' bound is imaginary for this radius");
  return std::sqrt(v);
}

double log_radius(const Dims& dims, Method method) {
  const int m = static_cast<int>(dims.size());
  switch (method) {
    case Method::recursion:
      return recursion_log_radius(dims);
    case Method::closed_form:
      if (!dims.homogeneous()) throw DomainError("closed form needs equal local dimensions");
      return closed_form_log_radius(dims[0], m);
    case Method::weak_corollary:
      if (!dims.homogeneous()) throw DomainError("weak corollary needs equal local dimensions");
      return weak_log_radius(dims[0], m);
    case Method::gb03_baseline:
      if (!dims.homogeneous() || dims[0] != 2) throw DomainError("gb03 baseline is stated for qubits");
      return gb03_log_baseline(m);
  }
  throw DomainError("unknown method");
}

RadiusReport radius_report(const Dims& dims, Method method) {
  const double log_a = log_radius(dims, method);
  return {dims, std::exp(log_a), std::exp(normalized_log_radius(log_a, dims.log_total())), method};
}

}  // namespace sepball::bounds
