#pragma once
// Lower bounds on the radius of the separable ball around the identity.
//
// Unnormalized radii are Frobenius distances from I; normalized radii are
// distances from I/d among unit-trace matrices. Every formula is evaluated in
// the log domain so that hundreds of parties neither overflow nor underflow.

#include <string_view>

#include "sepball/matcore.hpp"

namespace sepball::bounds {

enum class Method { recursion, closed_form, weak_corollary, gb03_baseline };

std::string_view method_name(Method m);

/// Ball-generated cone parameters: dimension N and Frobenius radius a.
struct BallConeParams {
  BallConeParams(int dim, double radius);

  int dim;
  double radius;
  /// Set when radius > 1; several derived bounds assume a <= 1.
  bool exceeds_unit = false;
};

/// Radius obtained by tensoring the parties in one at a time, starting from
/// the bipartite ball of radius one:
///
///   a_n^2 = a_{n-1}^2 d_n / (2 (1 - a_{n-1}^2 / D_{n-1}) (d_n - 1) + 1),
///
/// where D_{n-1} is the product of the first n-1 dims. Dims are folded left to
/// right exactly as given. Throws DomainError for fewer than two parties.
double recursion_radius(const Dims& dims);
double recursion_log_radius(const Dims& dims);

/// Exact solution of the recursion for m parties of dimension d0:
/// sqrt(d0^m / ((2 d0 - 1)^(m-2) (d0^2 - 1) + 1)).
double closed_form_radius(int d0, int m);
double closed_form_log_radius(int d0, int m);

/// 0.5 (ln 3 / ln 2 - 1), the qubit exponent: r_m ~ sqrt(3) 2^(-gamma m).
double qubit_asymptotic_exponent();

/// (d0 / (2 d0 - 1))^(m/2 - 1).
double weak_radius(int d0, int m);
double weak_log_radius(int d0, int m);

/// (1/2)^(m/2 - 1), the earlier qubit bound used for comparisons.
double gb03_baseline(int m);
double gb03_log_baseline(int m);

/// Unnormalized radius a around I converted to a normalized radius around
/// I/d: a / sqrt(d (d - a^2)). Throws DomainError when a^2 >= d.
double normalized_radius(double a, double d);
/// Same, taking log a and log d.
double normalized_log_radius(double log_a, double log_d);

/// sqrt(3^(m+1) / (3^m + 3)) 6^(-m/2).
double qubit_normalized_radius(int m);
double qubit_normalized_log_radius(int m);

/// a^-1 sqrt((2 (1 - a^2/d2)(d1 - 1) + 1) / d1); requires 0 < a <= 1 and
/// a > 1/d2.
double gamma_bound(int d1, int d2, double a);

/// a^-1 sqrt(2 (1 - a^2/d2)), the traceless-input contraction bound.
double lambda_bound(double a, int d2);

/// sqrt(2/a^2 - 1/d2), the all-input contraction bound.
double lambdaprime_bound(double a, int d2);

struct RadiusReport {
  Dims dims;
  double unnormalized_radius;
  double normalized_radius;
  Method method;
};

/// Unnormalized and normalized radius by the chosen method. closed_form,
/// weak_corollary and gb03_baseline need homogeneous dims (gb03 needs qubits).
RadiusReport radius_report(const Dims& dims, Method method);

/// Log of the unnormalized radius for any method; used by threshold scans.
double log_radius(const Dims& dims, Method method);

}  // namespace sepball::bounds
