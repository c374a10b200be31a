#include <doctest.h>

#include <cmath>

#include "sepball/certify.hpp"
#include "sepball/nmr.hpp"

using namespace sepball;
using namespace sepball::nmr;

TEST_SUITE("nmr") {

TEST_CASE("thermal states") {
  const HermitianMatrix zero = thermal_state(NmrParams(0.0, 1));
  CHECK(zero(0, 0).real() == 0.5);
  CHECK(zero(1, 1).real() == 0.5);
  const HermitianMatrix two = thermal_state(NmrParams(0.1, 2));
  CHECK(two(0, 0).real() == doctest::Approx(0.3025));
  CHECK(two(1, 1).real() == doctest::Approx(0.2475));
  CHECK(two(2, 2).real() == doctest::Approx(0.2475));
  CHECK(two(3, 3).real() == doctest::Approx(0.2025));
  for (int m = 1; m <= 12; ++m) CHECK(thermal_state(NmrParams(kDefaultEta, m)).trace() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(thermal_state(NmrParams(0.01, 13)), CapExceededError);
}

TEST_CASE("thermal deviation norm") {
  CHECK(thermal_deviation_norm(NmrParams(0.0, 5)) == 0.0);
  CHECK(thermal_deviation_norm(NmrParams(0.1, 1)) == doctest::Approx(std::sqrt(0.005)));
  CHECK(thermal_deviation_norm(NmrParams(kDefaultEta, 17)) == doctest::Approx(4.2664e-7).epsilon(1e-4));
  for (int m = 1; m <= 10; ++m) {
    for (double eta : {1e-4, 0.03, 0.1}) {
      const NmrParams p(eta, m);
      const std::size_t d = std::size_t{1} << m;
      const CMat dev = thermal_state(p).mat() - CMat::Identity(d, d) / double(d);
      CHECK(std::abs(frobenius_norm(dev) - thermal_deviation_norm(p)) <= 1e-12);
    }
  }
  const NmrParams boundary(kDefaultEta, 17);
  CHECK(thermal_deviation_norm_approx(boundary) == doctest::Approx(thermal_deviation_norm(boundary)).epsilon(0.01));
  CHECK(std::isfinite(thermal_deviation_log_norm(NmrParams(0.05, 400))));
}

TEST_CASE("pseudopure weight") {
  CHECK(pseudopure_epsilon(NmrParams(0.02, 1)) == doctest::Approx(0.01));
  CHECK(pseudopure_epsilon(NmrParams(kDefaultEta, 36)) == doctest::Approx(1.3486e-3 / std::exp2(36)).epsilon(1e-4));
  for (int m = 2; m < 60; ++m) {
    CHECK(pseudopure_epsilon(NmrParams(kDefaultEta, m + 1)) < pseudopure_epsilon(NmrParams(kDefaultEta, m)));
  }
  const HermitianMatrix rho = pseudopure_state(NmrParams(0.05, 3));
  CHECK(rho.trace() == doctest::Approx(1.0));
  const double eps = pseudopure_epsilon(NmrParams(0.05, 3));
  CHECK(rho(0, 0).real() == doctest::Approx(eps + (1 - eps) / 8));
}

TEST_CASE("thresholds at the default polarization") {
  CHECK(pseudopure_threshold(kDefaultEta) == 35);
  CHECK(pseudopure_threshold(kDefaultEta, Baseline::gb03) == 22);
  CHECK(thermal_threshold(kDefaultEta) == 16);
  CHECK(thermal_threshold(kDefaultEta, Baseline::gb03) == 13);
}

TEST_CASE("thermal boundary is decided by a clear margin") {
  CHECK(thermal_margin(kDefaultEta, 16) > 0.01);
  CHECK(thermal_margin(kDefaultEta, 17) < -0.01);
  CHECK(pseudopure_margin(kDefaultEta, 35) > 0.0);
  CHECK(pseudopure_margin(kDefaultEta, 36) < 0.0);
}

TEST_CASE("thresholds do not increase with eta") {
  int pp = 1 << 30, th = 1 << 30;
  for (double eta : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
    CHECK(pseudopure_threshold(eta) <= pp);
    CHECK(thermal_threshold(eta) <= th);
    pp = pseudopure_threshold(eta);
    th = thermal_threshold(eta);
  }
  CHECK(pseudopure_threshold(10 * kDefaultEta) < pseudopure_threshold(kDefaultEta));
}

TEST_CASE("scan limits") {
  CHECK_THROWS_AS(pseudopure_threshold(0.2), DomainError);
  CHECK_THROWS_AS(thermal_threshold(0.0), DomainError);
  CHECK_THROWS_AS(pseudopure_threshold(1e-80), CapExceededError);
  CHECK(thermal_threshold(1e-12) > thermal_threshold(kDefaultEta));
}

TEST_CASE("pseudopure certificate and materialized state agree") {
  for (int m = 2; m <= 10; ++m) {
    for (double eta : {1e-5, 1e-3, 0.01, 0.05, 0.099}) {
      const NmrParams p(eta, m);
      const Dims dims = Dims::qubits(m);
      CHECK(certify::certify_normalized(pseudopure_state(p), dims).verdict ==
            certify::certify_pseudopure(pseudopure_epsilon(p), dims).verdict);
    }
  }
}

TEST_CASE("params and helpers") {
  CHECK_FALSE(NmrParams(0.05, 3).warning().has_value());
  CHECK(NmrParams(0.2, 3).warning().has_value());
  CHECK_THROWS_AS(NmrParams(-0.1, 3), DomainError);
  CHECK_THROWS_AS(NmrParams(0.01, 0), DomainError);
  CHECK(bipartite_qubit_count(kDefaultEta) == doctest::Approx(26695.1).epsilon(1e-5));
  CHECK(bipartite_qubit_count(0.5) == doctest::Approx(2.0));
  CHECK(bipartite_qubit_count(1e-3) == doctest::Approx(1000.0));
  CHECK(mode_from_name(mode_name(Mode::thermal)) == Mode::thermal);
  CHECK(baseline_from_name("gb03") == Baseline::gb03);
  CHECK_THROWS_AS(baseline_from_name("other"), ParseError);
}

}
