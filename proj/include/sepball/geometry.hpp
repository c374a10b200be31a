#pragma once
// Coefficients of symmetry for the separable and maximally-entangled hulls,
// with explicit convex decompositions, and the inner-ball figures that follow
// from John's theorem.

#include <vector>

#include "sepball/matcore.hpp"

namespace sepball::geometry {

/// target = sum weights[i] * states[i].
struct ConvexWitness {
  std::vector<double> weights;
  std::vector<HermitianMatrix> states;
  HermitianMatrix target;
};

/// Largest entrywise modulus of sum w_i rho_i - target.
double reconstruction_error(const ConvexWitness& w);

/// Orthonormal basis (as columns) whose first column is a phase multiple of
/// the unit vector x, from the Householder reflection sending e_1 there.
CMat complete_basis(const CVec& x);

/// (I - pi)/(d - 1) for pi the product projector of `local_vectors`, written
/// as the uniform mixture of the d - 1 other product basis projectors.
ConvexWitness sep_symmetry_witness(const Dims& dims, const std::vector<CVec>& local_vectors);

/// 1/(d - 1).
double sep_symmetry_coefficient(int d);

/// (1 + alpha) I/d - alpha pi: the reflection of the pure state pi through
/// I/d, scaled by alpha.
HermitianMatrix symmetric_point(const HermitianMatrix& pi, double alpha);

struct JohnFigures {
  double shrink;            // (1/d) sqrt(1/(d - 1))
  double inner_ball_bound;  // shrink * covering_ball = d^(-3/2)
  double covering_ball;     // sqrt((d - 1)/d)
};

/// Inner-ball radius bound, not the ellipsoid's least axis.
JohnFigures john_ball_figures(int d);

/// {P^k S^l}, entry k n + l, with P = diag(omega^j), omega = exp(2 pi i/n),
/// and S_ij = 1 iff j = i + 1 mod n. Entry 0 is I.
std::vector<CMat> unitary_basis(int n);

/// psi psi^dagger with psi = sum_i |ii>/sqrt(n).
HermitianMatrix maximally_entangled_projector(int n);

/// (I - pi)/(n^2 - 1) as the uniform mixture of (I (x) U_i) pi (I (x) U_i)^dagger
/// over the non-identity basis unitaries.
ConvexWitness mes_symmetry_witness(int n);

}  // namespace sepball::geometry
