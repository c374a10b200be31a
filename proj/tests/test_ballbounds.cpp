#include <doctest.h>

#include <cmath>
#include <vector>

#include "sepball/ballbounds.hpp"

using namespace sepball;
using namespace sepball::bounds;

namespace {

// The recursion run directly on a_n^2 in long double, no logs.
long double direct_recursion(const std::vector<int>& dims) {
  long double a2 = 1.0L;
  long double total = static_cast<long double>(dims[0]) * dims[1];
  for (std::size_t n = 2; n < dims.size(); ++n) {
    const long double dn = dims[n];
    a2 = a2 * dn / (2.0L * (1.0L - a2 / total) * (dn - 1.0L) + 1.0L);
    total *= dn;
  }
  return std::sqrt(a2);
}

}  // namespace

TEST_SUITE("ballbounds") {

TEST_CASE("bipartite base case is exactly one") {
  CHECK(recursion_radius(Dims({2, 2})) == 1.0);
  CHECK(recursion_radius(Dims({3, 5})) == 1.0);
}

TEST_CASE("small cases by hand") {
  CHECK(recursion_radius(Dims({2, 2, 2})) == doctest::Approx(std::sqrt(4.0 / 5.0)).epsilon(1e-14));
  CHECK(recursion_radius(Dims({2, 2, 2, 2})) == doctest::Approx(std::sqrt(4.0 / 7.0)).epsilon(1e-14));
  CHECK(recursion_radius(Dims({3, 3, 3})) == doctest::Approx(std::sqrt(27.0 / 41.0)).epsilon(1e-14));
  CHECK(closed_form_radius(2, 3) == doctest::Approx(std::sqrt(4.0 / 5.0)).epsilon(1e-14));
}

TEST_CASE("recursion matches a direct evaluation, heterogeneous dims") {
  const std::vector<std::vector<int>> cases = {{2, 3, 4}, {4, 3, 2}, {5, 2, 2, 7}, {2, 2, 2, 2, 2, 3}, {6, 6, 6, 6}};
  for (const auto& dv : cases) {
    CAPTURE(Dims(dv).to_string());
    CHECK(recursion_radius(Dims(dv)) == doctest::Approx(static_cast<double>(direct_recursion(dv))).epsilon(1e-13));
  }
}

TEST_CASE("folding order matters for heterogeneous dims") {
  CHECK(recursion_radius(Dims({2, 3, 4})) != doctest::Approx(recursion_radius(Dims({4, 3, 2}))).epsilon(1e-6));
}

TEST_CASE("closed form solves the recursion") {
  for (int d0 = 2; d0 <= 6; ++d0) {
    for (int m = 2; m <= 12; ++m) {
      CAPTURE(d0);
      CAPTURE(m);
      const double r = recursion_radius(Dims::uniform(d0, m));
      CHECK(std::abs(r - closed_form_radius(d0, m)) <= 1e-12 * r);
    }
  }
}

TEST_CASE("log domain survives hundreds of parties") {
  const double log_r = recursion_log_radius(Dims::qubits(400));
  CHECK(std::isfinite(log_r));
  CHECK(log_r == doctest::Approx(closed_form_log_radius(2, 400)).epsilon(1e-12));
  CHECK(log_r == doctest::Approx(0.5 * std::log(3.0) - qubit_asymptotic_exponent() * 400 * std::log(2.0)).epsilon(1e-9));
  CHECK(std::isfinite(normalized_log_radius(log_r, 400 * std::log(2.0))));
}

TEST_CASE("qubit exponent") {
  CHECK(qubit_asymptotic_exponent() == doctest::Approx(0.29248125).epsilon(1e-7));
  double prev = 0.0;
  for (int m : {10, 20, 30}) {
    const double s = closed_form_radius(2, m) * std::exp2(qubit_asymptotic_exponent() * m);
    CHECK(s > prev);
    CHECK(s < std::sqrt(3.0));
    prev = s;
  }
}

TEST_CASE("weak and baseline bounds") {
  CHECK(weak_radius(2, 2) == 1.0);
  CHECK(weak_radius(2, 4) == doctest::Approx(2.0 / 3.0));
  CHECK(gb03_baseline(4) == doctest::Approx(0.5));
  for (int m = 3; m <= 20; ++m) {
    CAPTURE(m);
    CHECK(gb03_baseline(m) <= weak_radius(2, m));
    CHECK(weak_radius(2, m) <= closed_form_radius(2, m));
  }
}

TEST_CASE("normalized radius") {
  CHECK(normalized_radius(1.0, 4.0) == doctest::Approx(1.0 / std::sqrt(12.0)));
  CHECK(std::exp(normalized_log_radius(0.0, std::log(4.0))) == doctest::Approx(1.0 / std::sqrt(12.0)));
  CHECK_THROWS_AS(normalized_radius(2.0, 4.0), DomainError);
  for (int m = 2; m <= 12; ++m) {
    CHECK(std::abs(qubit_normalized_radius(m) - closed_form_radius(2, m) / std::exp2(m)) <= 1e-12);
  }
}

TEST_CASE("map norm bounds") {
  // d1 = 1 reduces gamma to 1/a.
  CHECK(gamma_bound(1, 4, 0.5) == doctest::Approx(2.0));
  CHECK(gamma_bound(2, 2, 1.0) == doctest::Approx(1.0));
  CHECK(lambda_bound(1.0, 4) == doctest::Approx(std::sqrt(1.5)));
  CHECK(lambdaprime_bound(1.0, 4) == doctest::Approx(std::sqrt(7.0) / 2.0));
  CHECK(lambdaprime_bound(0.5, 8) == doctest::Approx(std::sqrt(8.0 - 1.0 / 8.0)));
  CHECK_THROWS_AS(gamma_bound(2, 4, 0.2), DomainError);
  CHECK_THROWS_AS(gamma_bound(2, 4, 1.5), DomainError);
  CHECK_THROWS_AS(lambda_bound(3.0, 4), DomainError);
}

TEST_CASE("reports and method restrictions") {
  const RadiusReport r = radius_report(Dims({2, 2, 2}), Method::recursion);
  CHECK(r.unnormalized_radius == doctest::Approx(std::sqrt(0.8)));
  CHECK(r.normalized_radius == doctest::Approx(normalized_radius(std::sqrt(0.8), 8)));
  CHECK_THROWS_AS(radius_report(Dims({2, 3}), Method::closed_form), DomainError);
  CHECK_THROWS_AS(radius_report(Dims({3, 3}), Method::gb03_baseline), DomainError);
  CHECK_THROWS_AS(recursion_radius(Dims({2})), DomainError);
}

TEST_CASE("ball cone parameters") {
  CHECK(BallConeParams(4, 0.5).exceeds_unit == false);
  CHECK(BallConeParams(4, 2.0).exceeds_unit == true);
  CHECK_THROWS_AS(BallConeParams(4, 0.0), DomainError);
  CHECK_THROWS_AS(BallConeParams(2, 2.0), DomainError);
}

}
