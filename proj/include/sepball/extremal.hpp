#pragma once
// The stochastic ball-positive map tau built to saturate the all-input
// contraction bound, plus sampling harnesses for ball-positivity and for the
// block-norm chain used in the separability proof.

#include <cstdint>
#include <optional>

#include "sepball/matcore.hpp"

namespace sepball::extremal {

/// Parameters of tau: M(d2) -> M(d1).
struct TauMapSpec {
  double a;
  int d2;
  int d1;
  double mu;

  /// mu = (1/a) sqrt(1 - a^2/d2), the largest value keeping tau ball-positive.
  static TauMapSpec critical(double a, int d2, int d1 = 2);
};

/// Unit-norm traceless diagonal patterns spanning tau's nontrivial image:
/// Z = (E_11 - E_22)/sqrt2 and X = (E_44 - E_33)/sqrt2.
CMat tau_z_pattern(int d2);
CMat tau_x_pattern(int d2);

/// tau(Y) = tr(Y)/d2 I + mu tr(Z Y) sigma_z + mu tr(X Y) sigma_x, with the
/// Pauli matrices in the leading 2x2 block of M(d1). Requires 0 < a <= 1,
/// d2 >= 4, d1 >= 2.
LinearMap build_tau(const TauMapSpec& spec);
LinearMap build_tau(double a, int d2, int d1 = 2);

/// (alpha/sqrt d) I + (beta/sqrt2)(X + iZ) with gamma' = (1/a) sqrt(2(1 - a^2/d)),
/// alpha = sqrt(1/(1 + gamma'^2 d)), beta = sqrt(gamma'^2 d/(1 + gamma'^2 d)).
ComplexMatrix worst_case_input(double a, int d2);

/// ||phi(Y)||_inf / ||Y||_2.
double achieved_ratio(const LinearMap& phi, const CMat& y);

/// Draws `samples` Hermitian Delta uniformly on the radius-a Frobenius sphere
/// (sample k from stream k of `seed`) and checks phi(I + Delta) is PSD for
/// each. A false result is a proof of non-positivity; true is only evidence.
bool ball_positivity_check(const LinearMap& phi, double a, int samples, std::uint64_t seed);

/// Directed search for Delta with ||Delta||_2 = a and phi(I + Delta) not PSD.
/// Alternates between the lowest eigenvector v of phi(I + Delta) and the
/// Delta minimizing <v, phi(Delta) v>, i.e. -a phi*(vv^dagger)/||.||_2,
/// starting from a Z, -a Z, a X and `random_starts` random points.
std::optional<HermitianMatrix> find_ball_violation(const LinearMap& phi, double a, int random_starts = 8,
                                                   std::uint64_t seed = 0xB0B5);

/// Every quantity in the chain
///   ||phi~(A)|| = ||phi~(A')|| <= ||Phi^inf|| <= ||M|| <= gamma ||A||_2
/// where A' is A with traceless off-diagonal blocks, Phi^inf_ij =
/// ||phi(A'^ij)||_inf and M has a^-1 ||A'^ii||_2 on the diagonal and
/// lambda ||A'^ij||_2 off it. The last link is only asserted when gamma is
/// defined (a > 1/d2).
struct BlockChainReport {
  double tilde_norm;
  double tilde_norm_rotated;
  double block_norm_bound;
  double entrywise_bound;
  std::optional<double> gamma_bound;
  bool holds;
};

BlockChainReport block_chain_report(const LinearMap& phi, const HermitianMatrix& a_mat, double a);
bool block_chain_check(const LinearMap& phi, const HermitianMatrix& a_mat, double a);

}  // namespace sepball::extremal
