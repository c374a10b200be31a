#include <doctest.h>

#include <cmath>

#include "sepball/sampling.hpp"
#include "sepball/schurnorm.hpp"

using namespace sepball;
using namespace sepball::schurnorm;

namespace {

// Max of y^T C y over a grid on the 2-simplex (n = 3).
double grid_max_3(const RMat& c, int steps) {
  double best = 0.0;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      RVec y(3);
      y << double(i) / steps, double(j) / steps, double(steps - i - j) / steps;
      best = std::max(best, y.dot(c * y));
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("schurnorm") {

TEST_CASE("L matrix: uniform maximizer and closed form") {
  for (double eta : {1.5, 2.0, 3.0}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      CAPTURE(eta);
      CAPTURE(n);
      const HermitianMatrix l = l_matrix(eta, n);
      const SimplexQPResult r = simplex_qp_max(squared_modulus(l.mat()));
      CHECK(std::abs(std::sqrt(r.value) - l_matrix_norm(eta, n)) <= 1e-10);
      CHECK((r.maximizer.array() - 1.0 / n).abs().maxCoeff() <= 1e-10);
      CHECK(r.support.size() == n);
    }
  }
  CHECK(l_matrix_norm(2.0, 3) == doctest::Approx(std::sqrt(3.0)));
  CHECK(schur_two_inf_norm(l_matrix(1.0, 5)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(l_matrix_norm(0.5, 3), DomainError);
}

TEST_CASE("simple instances") {
  // All-ones B: the Schur map is the identity, ||X||_inf <= ||X||_2.
  const HermitianMatrix ones(CMat::Ones(4, 4));
  CHECK(schur_two_inf_norm(ones) == doctest::Approx(1.0));
  // Diagonal B picks out the largest |b_i|.
  CHECK(schur_two_inf_norm(HermitianMatrix::diagonal({0.5, -3.0, 2.0})) == doctest::Approx(3.0));
  // A zero matrix.
  CHECK(schur_two_inf_norm(HermitianMatrix(CMat::Zero(3, 3))) == 0.0);
}

TEST_CASE("ties go to the lexicographically smallest support") {
  const SimplexQPResult r = simplex_qp_max(RMat::Identity(4, 4));
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.support == std::vector<std::size_t>{0});
  RMat c = RMat::Identity(3, 3);
  c(2, 2) = 2.0;
  CHECK(simplex_qp_max(c).support == std::vector<std::size_t>{2});
}

TEST_CASE("exact solver against a simplex grid") {
  auto rng = sampling::make_rng(21);
  for (int k = 0; k < 20; ++k) {
    const RMat c = squared_modulus(sampling::gaussian_hermitian(3, rng).mat());
    const double exact = simplex_qp_max(c).value;
    const double grid = grid_max_3(c, 300);
    CHECK(exact >= grid - 1e-12);
    // Grid spacing 1/300 bounds the gap by roughly the gradient times the spacing.
    CHECK(exact <= grid + 0.05 * c.maxCoeff());
  }
}

TEST_CASE("exact solver against the ascent oracle") {
  auto rng = sampling::make_rng(22);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 7);
    const HermitianMatrix b = sampling::gaussian_hermitian(n, rng);
    const double exact = schur_two_inf_norm(b);
    const double oracle = oracle_two_inf_norm(b, kDefaultOracleRestarts, sampling::derive_seed(5, k));
    CAPTURE(n);
    CHECK(oracle <= exact + 1e-9);
    CHECK(oracle >= exact - 1e-6);
  }
}

TEST_CASE("oracle is a lower bound at any restart count") {
  auto rng = sampling::make_rng(23);
  const HermitianMatrix b = sampling::gaussian_hermitian(6, rng);
  CHECK(oracle_two_inf_norm(b, 1) <= schur_two_inf_norm(b) + 1e-12);
  CHECK_THROWS_AS(oracle_two_inf_norm(b, 0), DomainError);
}

TEST_CASE("oracle handles sizes beyond the exact limit") {
  const HermitianMatrix l = l_matrix(2.0, 20);
  CHECK(oracle_two_inf_norm(l, 8) == doctest::Approx(l_matrix_norm(2.0, 20)).epsilon(1e-8));
  CHECK_THROWS_AS(schur_two_inf_norm(l), CapExceededError);
}

TEST_CASE("input validation") {
  RMat c(2, 2);
  c << 1, 2, 0, 1;
  CHECK_THROWS_AS(simplex_qp_max(c), DomainError);
  c << 1, -1, -1, 1;
  CHECK_THROWS_AS(simplex_qp_max(c), DomainError);
  CHECK_THROWS_AS(simplex_qp_max(RMat(2, 3)), DimensionError);
}

TEST_CASE("majorization") {
  CHECK(majorizes({1, 0, 0}, {0.5, 0.5, 0}));
  CHECK_FALSE(majorizes({0.5, 0.5, 0}, {1, 0, 0}));
  CHECK(majorizes({0.3, 0.7}, {0.7, 0.3}));
  // Zero padding for unequal lengths.
  CHECK(majorizes({1}, {0.25, 0.25, 0.25, 0.25}));
  CHECK_THROWS_AS(majorizes({1, 0}, {0.5, 0.4}), DomainError);
}

TEST_CASE("Gram matrices") {
  CVec a(2), b(2);
  a << 1, 0;
  b << cplx(0, 1) / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const HermitianMatrix g = gram({a, b});
  CHECK(std::abs(g(0, 1) - cplx(0, 1) / std::sqrt(2.0)) < 1e-15);
  CHECK(g(1, 1).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(gram({}), DomainError);
}

TEST_CASE("separable states are more disordered globally than locally") {
  for (int k = 0; k < 50; ++k) {
    auto rng = sampling::make_rng(24, static_cast<std::uint64_t>(k));
    std::vector<std::pair<CVec, CVec>> pairs;
    const int terms = 1 + k % 9;
    const RVec w = sampling::simplex_point(static_cast<std::size_t>(terms), rng);
    for (int t = 0; t < terms; ++t) {
      pairs.emplace_back(std::sqrt(w(t)) * sampling::unit_vector(3, rng), sampling::unit_vector(3, rng));
    }
    const SeparableEnsemble e(pairs);
    CHECK(e.state().trace() == doctest::Approx(1.0));
    CHECK(nielsen_kempe_check(e));
  }
  CVec x(2), y(3);
  x << 1, 0;
  y << 1, 1, 0;
  CHECK_THROWS_AS(SeparableEnsemble({{x, y}}), DomainError);
}

TEST_CASE("Schur product with a correlation matrix is a doubly stochastic action") {
  for (int k = 0; k < 100; ++k) {
    auto rng = sampling::make_rng(25, static_cast<std::uint64_t>(k));
    const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
    const HermitianMatrix b = sampling::correlation_matrix(n, 1 + k % 3, rng);
    const HermitianMatrix x = sampling::gaussian_hermitian(n, rng);
    CHECK(ds_schur_majorization_check(b, x));
  }
  CHECK_THROWS_AS(ds_schur_majorization_check(HermitianMatrix::diagonal({2, 1}), HermitianMatrix::identity(2)),
                  DomainError);
}

}
