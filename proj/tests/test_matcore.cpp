#include <doctest.h>

#include <cmath>

#include "sepball/matcore.hpp"
#include "sepball/sampling.hpp"

using namespace sepball;

namespace {

CMat pauli_z() {
  CMat z = CMat::Zero(2, 2);
  z(0, 0) = 1;
  z(1, 1) = -1;
  return z;
}

HermitianMatrix bell_state() {
  CVec psi = CVec::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return HermitianMatrix::projector(psi);
}

double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("matcore") {

TEST_CASE("norms of sigma_z") {
  const CMat z = pauli_z();
  CHECK(operator_norm(z) == doctest::Approx(1.0));
  CHECK(frobenius_norm(z) == doctest::Approx(std::sqrt(2.0)));
  CHECK(trace_norm(z) == doctest::Approx(2.0));
}

TEST_CASE("norm ordering on random matrices") {
  auto rng = sampling::make_rng(1);
  for (int k = 0; k < 100; ++k) {
    const CMat m = sampling::gaussian_complex(1 + k % 6, 1 + (k / 6) % 5, rng);
    CHECK(operator_norm(m) <= frobenius_norm(m) * (1 + 1e-12));
    CHECK(frobenius_norm(m) <= trace_norm(m) * (1 + 1e-12));
  }
}

TEST_CASE("Hermitian construction symmetrizes and rejects") {
  CMat a(2, 2);
  a << cplx(1, 1e-12), cplx(2, 3), cplx(2, -3 + 1e-12), 4.0;
  const HermitianMatrix h(a);
  CHECK(h(0, 0).imag() == 0.0);
  CHECK(h(0, 1) == std::conj(h(1, 0)));

  CMat bad(2, 2);
  bad << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_AS(HermitianMatrix{bad}, DomainError);
  CHECK_THROWS_AS(HermitianMatrix{CMat(2, 3)}, DimensionError);
  CMat nan = CMat::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(HermitianMatrix{nan}, DomainError);
}

TEST_CASE("eigenvalues are decreasing and reconstruct the matrix") {
  auto rng = sampling::make_rng(2);
  const HermitianMatrix h = sampling::gaussian_hermitian(5, rng);
  const EigenSystem es = eigensystem(h);
  for (std::size_t i = 1; i < es.values.size(); ++i) CHECK(es.values[i - 1] >= es.values[i]);
  RVec v(5);
  for (int i = 0; i < 5; ++i) v(i) = es.values[i];
  const CMat back = es.vectors * v.cast<cplx>().asDiagonal() * es.vectors.adjoint();
  CHECK(max_abs(back - h.mat()) < 1e-12);
  CHECK(lambda_min(h) == doctest::Approx(es.values.back()));
}

TEST_CASE("PSD test") {
  CHECK(is_psd(HermitianMatrix::identity(3)));
  CHECK_FALSE(is_psd(HermitianMatrix(pauli_z())));
  CHECK(is_psd(HermitianMatrix::diagonal({1.0, 0.0, -1e-13})));
  CHECK_FALSE(is_psd(HermitianMatrix::diagonal({1.0, -1e-6})));
}

TEST_CASE("Dims") {
  const Dims d({2, 3, 2});
  CHECK(d.size() == 3);
  CHECK(d.materialized_total() == 12);
  CHECK(d.to_string() == "(2,3,2)");
  CHECK_FALSE(d.homogeneous());
  CHECK(Dims::qubits(4).homogeneous());
  CHECK(d.log_total() == doctest::Approx(std::log(12.0)));
  CHECK_THROWS_AS(Dims({}), DimensionError);
  CHECK_THROWS_AS(Dims({2, 1}), DimensionError);
  CHECK_FALSE(Dims::qubits(100).total().has_value());
  CHECK(Dims::qubits(100).log_total() == doctest::Approx(100 * std::log(2.0)));
  CHECK_THROWS_AS(Dims::qubits(13).materialized_total(), CapExceededError);
  CHECK(Dims::qubits(12).materialized_total() == 4096);
}

TEST_CASE("kron") {
  CMat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const CMat k = kron(a, b).mat();
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == cplx(1));
  CHECK(k(1, 2) == cplx(2));
  CHECK(k(3, 2) == cplx(4));
  CHECK(k(2, 2) == cplx(0));
  CHECK_THROWS_AS(kron(CMat::Identity(128, 128), CMat::Identity(64, 64)), CapExceededError);
}

TEST_CASE("partial transpose of a Bell state has eigenvalue -1/2") {
  const HermitianMatrix pt = partial_transpose(bell_state(), Dims({2, 2}), 1);
  CHECK(lambda_min(pt) == doctest::Approx(-0.5));
  const HermitianMatrix pt0 = partial_transpose(bell_state(), Dims({2, 2}), 0);
  CHECK(max_abs(pt0.mat() - pt.mat()) < 1e-15);
}

TEST_CASE("partial transpose of a product is the product of transposes") {
  auto rng = sampling::make_rng(3);
  const CMat a = sampling::gaussian_hermitian(2, rng).mat();
  const CMat b = sampling::gaussian_hermitian(3, rng).mat();
  const HermitianMatrix ab(kron(a, b).mat());
  const CMat expect = kron(a, b.transpose()).mat();
  CHECK(max_abs(partial_transpose(ab, Dims({2, 3}), 1).mat() - expect) < 1e-14);
  CHECK(max_abs(partial_transpose(ab, Dims({2, 3}), std::vector<bool>{true, true}).mat() - ab.mat().transpose()) <
        1e-14);
}

TEST_CASE("partial trace") {
  auto rng = sampling::make_rng(4);
  const HermitianMatrix a = sampling::density_matrix(2, 2, rng);
  const HermitianMatrix b = sampling::density_matrix(3, 1, rng);
  const HermitianMatrix ab = kron(a, b);
  CHECK(max_abs(partial_trace(ab, Dims({2, 3}), {true, false}).mat() - a.mat()) < 1e-14);
  CHECK(max_abs(partial_trace(ab, Dims({2, 3}), {false, true}).mat() - b.mat()) < 1e-14);
  const HermitianMatrix half = partial_trace(bell_state(), Dims({2, 2}), {true, false});
  CHECK(max_abs(half.mat() - CMat::Identity(2, 2) / 2.0) < 1e-15);
}

TEST_CASE("schur product") {
  CMat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << cplx(0, 1), 2, 0.5, -1;
  const CMat s = schur(a, b).mat();
  CHECK(s(0, 0) == cplx(0, 1));
  CHECK(s(0, 1) == cplx(4));
  CHECK(s(1, 0) == cplx(1.5));
  CHECK(s(1, 1) == cplx(-4));
  CHECK_THROWS_AS(schur(CMat(2, 2), CMat(3, 3)), DimensionError);
}

TEST_CASE("blocks") {
  CMat x(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) x(i, j) = 10 * i + j;
  const CMat b01 = block(x, 2, 0, 1);
  CHECK(b01(0, 0) == cplx(2));
  CHECK(b01(1, 1) == cplx(13));
  const CMat traces = block_trace_matrix(x, 2, 2);
  CHECK(traces(1, 0) == cplx(20 + 31));
  const RMat norms = block_norm_matrix(x, 2, 2, BlockNorm::two);
  CHECK(norms(0, 1) == doctest::Approx(frobenius_norm(b01)));
}

TEST_CASE("tracelessify makes off-diagonal blocks traceless") {
  auto rng = sampling::make_rng(5);
  for (int k = 0; k < 20; ++k) {
    const HermitianMatrix x = sampling::gaussian_hermitian(9, rng);
    const Tracelessified t = tracelessify_offdiag(x, 3, 3);
    CHECK(max_abs(t.unitary * t.unitary.adjoint() - CMat::Identity(3, 3)) < 1e-12);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(std::abs(block(t.matrix.mat(), 3, i, j).trace()) < 1e-12);
    CHECK(frobenius_norm(t.matrix.mat()) == doctest::Approx(frobenius_norm(x.mat())));
  }
}

TEST_CASE("linear maps") {
  const LinearMap id = LinearMap::identity(3);
  auto rng = sampling::make_rng(6);
  const CMat x = sampling::gaussian_complex(3, 3, rng);
  CHECK(max_abs(apply_map(id, x).mat() - x) < 1e-15);
  CHECK(max_abs(id.adjoint_apply(x).mat() - x) < 1e-15);

  // Transpose: stochastic, Hermiticity preserving, self-adjoint.
  const LinearMap t = LinearMap::from_function(3, 3, [](const CMat& m) { return CMat(m.transpose()); }, true);
  CHECK(max_abs(apply_map(t, x).mat() - x.transpose()) < 1e-15);
  const CMat w = sampling::gaussian_complex(3, 3, rng);
  // <phi(x), w> = <x, phi*(w)>
  const cplx lhs = (apply_map(t, x).mat().adjoint() * w).trace();
  const cplx rhs = (x.adjoint() * t.adjoint_apply(w).mat()).trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);

  CHECK_THROWS_AS(LinearMap::from_function(2, 2, [](const CMat& m) { return CMat(2.0 * m); }, true), DomainError);
  CHECK_THROWS_AS(
      LinearMap::from_function(2, 2, [](const CMat& m) { return CMat(cplx(0, 1) * m); }, false), DomainError);
}

TEST_CASE("tilde apply of a stochastic map fixes the identity") {
  const LinearMap t = LinearMap::from_function(2, 2, [](const CMat& m) { return CMat(m.transpose()); }, true);
  const HermitianMatrix out = tilde_apply(t, HermitianMatrix::identity(6), 3);
  CHECK(max_abs(out.mat() - CMat::Identity(6, 6)) == 0.0);
  // Blockwise transpose is the partial transpose on the second factor.
  const HermitianMatrix bell_pt = tilde_apply(t, bell_state(), 2);
  CHECK(max_abs(bell_pt.mat() - partial_transpose(bell_state(), Dims({2, 2}), 1).mat()) < 1e-15);
}

}
