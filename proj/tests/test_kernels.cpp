#include <doctest.h>

#include <vector>

#include "sepball/kernels.hpp"
#include "sepball/sampling.hpp"

using namespace sepball;
namespace k = sepball::kernels;

TEST_SUITE("kernels") {

TEST_CASE("scalar table is always available") {
  REQUIRE(k::table_for(k::Isa::scalar) != nullptr);
  CHECK(k::table_for(k::Isa::scalar)->isa == k::Isa::scalar);
  CHECK(k::isa_name(k::Isa::scalar) == "scalar");
}

TEST_CASE("SIMD variants agree with the scalar reference") {
  const k::KernelTable* simd = k::table_for(k::Isa::avx2);
  if (!simd) {
    MESSAGE("AVX2 table not available here; nothing to compare");
    return;
  }
  const k::KernelTable& ref = k::scalar::table();
  auto rng = sampling::make_rng(11);
  // Lengths straddle the vector width and the unrolled tail.
  for (std::size_t n = 0; n <= 37; ++n) {
    CAPTURE(n);
    const CMat a = sampling::gaussian_complex(n, 1, rng);
    const CMat b = sampling::gaussian_complex(n, 1, rng);

    const double s_ref = ref.sum_abs2(a.data(), n);
    CHECK(simd->sum_abs2(a.data(), n) == doctest::Approx(s_ref).epsilon(1e-14));

    CMat h_ref(n, 1), h_simd(n, 1);
    ref.hadamard(a.data(), b.data(), h_ref.data(), n);
    simd->hadamard(a.data(), b.data(), h_simd.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(h_ref(i) - h_simd(i)) <= 1e-15 * (1 + std::abs(h_ref(i))));

    CMat y_ref = b, y_simd = b;
    const cplx alpha(0.3, -1.7);
    ref.axpy(alpha, a.data(), y_ref.data(), n);
    simd->axpy(alpha, a.data(), y_simd.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y_ref(i) - y_simd(i)) <= 1e-14 * (1 + std::abs(y_ref(i))));

    if (n == 0) continue;
    const RMat c = sampling::gaussian_complex(n, n, rng).real();
    const RVec y = sampling::simplex_point(n, rng);
    RVec out_ref(n), out_simd(n);
    ref.matvec(c.data(), y.data(), out_ref.data(), n);
    simd->matvec(c.data(), y.data(), out_simd.data(), n);
    CHECK((out_ref - out_simd).cwiseAbs().maxCoeff() <= 1e-14 * (1 + out_ref.cwiseAbs().maxCoeff()));
    CHECK(simd->quad_form(c.data(), y.data(), n) == doctest::Approx(ref.quad_form(c.data(), y.data(), n)).epsilon(1e-12));
  }
}

TEST_CASE("scalar kernels against direct sums") {
  const k::KernelTable& ref = k::scalar::table();
  const std::vector<cplx> x = {{1, 2}, {-3, 0.5}, {0, -1}};
  CHECK(ref.sum_abs2(x.data(), x.size()) == doctest::Approx(1 + 4 + 9 + 0.25 + 1));
  // C = [[1, 2], [2, 5]], y = (0.25, 0.75): C y = (1.75, 4.25), y^T C y = 3.625
  const std::vector<double> c = {1, 2, 2, 5};
  const std::vector<double> y = {0.25, 0.75};
  std::vector<double> out(2);
  ref.matvec(c.data(), y.data(), out.data(), 2);
  CHECK(out[0] == doctest::Approx(1.75));
  CHECK(out[1] == doctest::Approx(4.25));
  CHECK(ref.quad_form(c.data(), y.data(), 2) == doctest::Approx(3.625));
}

TEST_CASE("span front ends check sizes") {
  std::vector<cplx> a(3), b(4), out(3);
  CHECK_THROWS_AS(k::hadamard(a, b, out), std::invalid_argument);
  std::vector<double> c(9), y(3), o(2);
  CHECK_THROWS_AS(k::matvec(c, y, o), std::invalid_argument);
}

}
