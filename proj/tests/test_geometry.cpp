#include <doctest.h>

#include <cmath>

#include "sepball/geometry.hpp"
#include "sepball/sampling.hpp"

using namespace sepball;
using namespace sepball::geometry;

namespace {

double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

CVec e1(int n) {
  CVec v = CVec::Zero(n);
  v(0) = 1;
  return v;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("basis completion") {
  auto rng = sampling::make_rng(41);
  for (int n = 1; n <= 6; ++n) {
    const CVec x = sampling::unit_vector(static_cast<std::size_t>(n), rng);
    const CMat b = complete_basis(x);
    CHECK(max_abs(b.adjoint() * b - CMat::Identity(n, n)) < 1e-14);
    CHECK(std::abs(std::abs(x.dot(b.col(0))) - 1.0) < 1e-14);
  }
  CHECK(max_abs(complete_basis(e1(3)) - CMat::Identity(3, 3)) == 0.0);
  CHECK_THROWS_AS(complete_basis(2.0 * e1(2)), DomainError);
}

TEST_CASE("separable witness for two qubits at |00>") {
  const ConvexWitness w = sep_symmetry_witness(Dims({2, 2}), {e1(2), e1(2)});
  CHECK(w.states.size() == 3);
  for (double x : w.weights) CHECK(x == doctest::Approx(1.0 / 3.0));
  CMat target = CMat::Identity(4, 4);
  target(0, 0) = 0;
  CHECK(max_abs(w.target.mat() - target / 3.0) < 1e-15);
  CHECK(reconstruction_error(w) < 1e-15);
}

TEST_CASE("separable witness, single party") {
  const ConvexWitness w = sep_symmetry_witness(Dims({2}), {e1(2)});
  REQUIRE(w.states.size() == 1);
  CHECK(w.states[0](1, 1).real() == doctest::Approx(1.0));
  CHECK(reconstruction_error(w) < 1e-15);
}

TEST_CASE("separable witness at random product states") {
  auto rng = sampling::make_rng(42);
  for (const auto& dv : std::vector<std::vector<int>>{{2, 2, 2}, {3, 3}, {2, 4}, {2, 3}}) {
    std::vector<CVec> local;
    for (int d : dv) local.push_back(sampling::unit_vector(static_cast<std::size_t>(d), rng));
    const ConvexWitness w = sep_symmetry_witness(Dims(dv), local);
    const std::size_t d = Dims(dv).materialized_total();
    CHECK(w.states.size() == d - 1);
    CHECK(reconstruction_error(w) < 1e-13);
    for (const auto& s : w.states) {
      CHECK(is_psd(s));
      CHECK(s.trace() == doctest::Approx(1.0));
    }
  }
  CHECK_THROWS_AS(sep_symmetry_witness(Dims({2, 2}), {e1(2)}), DimensionError);
  CHECK_THROWS_AS(sep_symmetry_witness(Dims({2, 2}), {e1(2), 2.0 * e1(2)}), DomainError);
}

TEST_CASE("coefficient of symmetry is critical") {
  CHECK(sep_symmetry_coefficient(4) == doctest::Approx(1.0 / 3.0));
  CHECK(sep_symmetry_coefficient(2) == 1.0);
  CHECK(sep_symmetry_coefficient(8) == doctest::Approx(1.0 / 7.0));
  CHECK_THROWS_AS(sep_symmetry_coefficient(1), DomainError);
  auto rng = sampling::make_rng(43);
  for (int d = 2; d <= 9; ++d) {
    const HermitianMatrix pi = HermitianMatrix::projector(sampling::unit_vector(static_cast<std::size_t>(d), rng));
    const double alpha = sep_symmetry_coefficient(d);
    CHECK(std::abs(lambda_min(symmetric_point(pi, alpha))) < 1e-12);
    CHECK_FALSE(is_psd(symmetric_point(pi, 1.05 * alpha)));
  }
}

TEST_CASE("John figures") {
  const JohnFigures f = john_ball_figures(4);
  CHECK(f.shrink == doctest::Approx(1.0 / (4.0 * std::sqrt(3.0))));
  CHECK(f.covering_ball == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(f.inner_ball_bound == doctest::Approx(1.0 / 8.0));
  CHECK(f.shrink * f.covering_ball == doctest::Approx(f.inner_ball_bound));
  CHECK(john_ball_figures(2).covering_ball == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("unitary basis") {
  const auto b2 = unitary_basis(2);
  REQUIRE(b2.size() == 4);
  CHECK(max_abs(b2[0] - CMat::Identity(2, 2)) == 0.0);
  CMat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  CHECK(max_abs(b2[1] - x) < 1e-15);
  CHECK(max_abs(b2[2] - z) < 1e-15);

  const auto b3 = unitary_basis(3);
  CMat g(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) g(i, j) = (b3[i].adjoint() * b3[j]).trace();
  CHECK(max_abs(g - 3.0 * CMat::Identity(9, 9)) < 1e-12);

  auto rng = sampling::make_rng(44);
  for (int n = 2; n <= 5; ++n) {
    const CMat m = sampling::gaussian_complex(n, n, rng);
    CMat avg = CMat::Zero(n, n);
    for (const CMat& u : unitary_basis(n)) avg += u * m * u.adjoint();
    CHECK(max_abs(avg / double(n) - m.trace() * CMat::Identity(n, n)) < 1e-11);
  }
}

TEST_CASE("maximally entangled witness") {
  for (int n : {2, 3}) {
    const ConvexWitness w = mes_symmetry_witness(n);
    CHECK(w.states.size() == static_cast<std::size_t>(n * n - 1));
    CHECK(reconstruction_error(w) < 1e-12);
    const CMat half = CMat::Identity(n, n) / double(n);
    for (const auto& s : w.states) {
      CHECK(max_abs(partial_trace(s, Dims({n, n}), {true, false}).mat() - half) < 1e-12);
      CHECK(max_abs(partial_trace(s, Dims({n, n}), {false, true}).mat() - half) < 1e-12);
    }
  }
  CHECK_THROWS_AS(mes_symmetry_witness(65), CapExceededError);
}

}
