#include "sepball/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "sepball/ballbounds.hpp"
#include "sepball/certify.hpp"
#include "sepball/extremal.hpp"
#include "sepball/geometry.hpp"
#include "sepball/io.hpp"
#include "sepball/kernels.hpp"
#include "sepball/nmr.hpp"
#include "sepball/schurnorm.hpp"

namespace sepball::verify {
namespace {

using sampling::make_rng;

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome pass(std::string detail = "") { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

// A normalized state on the boundary of the certified ball, in a random
// traceless direction.
HermitianMatrix boundary_state(const Dims& dims, sampling::Rng& rng) {
  const std::size_t d = dims.materialized_total();
  const double r = bounds::normalized_radius(bounds::recursion_radius(dims), static_cast<double>(d));
  const HermitianMatrix delta = sampling::hermitian_on_sphere(d, r, true, rng);
  const CMat eye = CMat::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  return HermitianMatrix(eye / static_cast<double>(d) + delta.mat());
}

Outcome ppt_on_boundary(const Dims& dims, int samples, std::uint64_t seed) {
  for (int k = 0; k < samples; ++k) {
    sampling::Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    const HermitianMatrix rho = boundary_state(dims, rng);
    const certify::Certificate c = certify::certify_normalized(rho, dims);
    if (c.verdict != certify::Verdict::separable) {
      return fail("boundary sample " + std::to_string(k) + " not certified: " + std::string(verdict_name(c.verdict)));
    }
    if (!certify::ppt_all_cuts(rho, dims)) return fail("certified sample " + std::to_string(k) + " fails PPT");
  }
  return pass(std::to_string(samples) + " boundary states certified and PPT");
}

std::vector<Check> build_registry() {
  std::vector<Check> c;

  c.push_back({"kernels.simd_matches_scalar", false, [](std::uint64_t seed) {
                 const kernels::KernelTable* simd = kernels::table_for(kernels::Isa::avx2);
                 if (!simd) return pass("no SIMD table on this machine");
                 const kernels::KernelTable& ref = kernels::scalar::table();
                 sampling::Rng rng = make_rng(seed, 1);
                 for (std::size_t n : {1u, 3u, 4u, 7u, 16u, 33u}) {
                   const CMat a = sampling::gaussian_complex(n, 1, rng);
                   const CMat b = sampling::gaussian_complex(n, 1, rng);
                   const double s1 = ref.sum_abs2(a.data(), n), s2 = simd->sum_abs2(a.data(), n);
                   if (rel(s2, s1) > 1e-13) return fail(fmt("sum_abs2 differs: %.17g vs %.17g", s2, s1));
                   CMat o1(n, 1), o2(n, 1);
                   ref.hadamard(a.data(), b.data(), o1.data(), n);
                   simd->hadamard(a.data(), b.data(), o2.data(), n);
                   if ((o1 - o2).cwiseAbs().maxCoeff() > 1e-14 * o1.cwiseAbs().maxCoeff()) {
                     return fail("hadamard differs");
                   }
                   const RMat cm = sampling::gaussian_complex(n, n, rng).real();
                   const RVec y = sampling::simplex_point(n, rng);
                   const double q1 = ref.quad_form(cm.data(), y.data(), n);
                   const double q2 = simd->quad_form(cm.data(), y.data(), n);
                   if (std::abs(q1 - q2) > 1e-13 * std::max(1.0, cm.cwiseAbs().maxCoeff())) return fail("quad_form differs");
                 }
                 return pass();
               }});

  c.push_back({"matcore.partial_transpose_involution", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 2);
                 const Dims dims({2, 3, 2});
                 const HermitianMatrix h = sampling::gaussian_hermitian(12, rng);
                 for (std::size_t k = 0; k < 3; ++k) {
                   const HermitianMatrix twice = partial_transpose(partial_transpose(h, dims, k), dims, k);
                   if ((twice.mat() - h.mat()).cwiseAbs().maxCoeff() != 0.0) return fail("PT twice is not the identity");
                 }
                 return pass();
               }});

  c.push_back({"matcore.kron_norms_multiply", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 3);
                 for (int k = 0; k < 20; ++k) {
                   const CMat a = sampling::gaussian_complex(3, 3, rng), b = sampling::gaussian_complex(4, 4, rng);
                   const CMat ab = kron(a, b).mat();
                   if (rel(frobenius_norm(ab), frobenius_norm(a) * frobenius_norm(b)) > 1e-12 ||
                       rel(operator_norm(ab), operator_norm(a) * operator_norm(b)) > 1e-10) {
                     return fail("norm of a Kronecker product is not the product of norms");
                   }
                 }
                 return pass();
               }});

  c.push_back({"ballbounds.base_case", false, [](std::uint64_t) {
                 const double r = bounds::recursion_radius(Dims({2, 2}));
                 return r == 1.0 ? pass() : fail(fmt("recursion (2,2) = %.17g", r));
               }});

  c.push_back({"ballbounds.tripartite_qubits", false, [](std::uint64_t) {
                 const double r = bounds::recursion_radius(Dims({2, 2, 2}));
                 return std::abs(r - std::sqrt(0.8)) <= 1e-12 ? pass() : fail(fmt("recursion (2,2,2) = %.17g", r));
               }});

  c.push_back({"ballbounds.closed_form_solves_recursion", false, [](std::uint64_t) {
                 for (int d0 = 2; d0 <= 6; ++d0) {
                   for (int m = 2; m <= 12; ++m) {
                     const double r = bounds::recursion_radius(Dims::uniform(d0, m));
                     const double f = bounds::closed_form_radius(d0, m);
                     if (rel(r, f) > 1e-12) return fail(fmt("d0=%g m=%g: rel diff %.3g", d0, m, rel(r, f)));
                   }
                 }
                 return pass();
               }});

  c.push_back({"ballbounds.qubit_exponent", false, [](std::uint64_t) {
                 const double g = bounds::qubit_asymptotic_exponent();
                 if (std::abs(g - 0.29248125) > 1e-7) return fail(fmt("gamma = %.12g", g));
                 double prev = 0.0;
                 for (int m : {10, 20, 30}) {
                   const double s = bounds::closed_form_radius(2, m) * std::exp2(g * m);
                   if (!(s > prev) || s >= std::sqrt(3.0)) return fail(fmt("r_m 2^(gamma m) = %.12g at m=%g", s, m));
                   prev = s;
                 }
                 return pass();
               }});

  c.push_back({"ballbounds.qubit_normalized", false, [](std::uint64_t) {
                 for (int m = 2; m <= 12; ++m) {
                   const double lhs = bounds::qubit_normalized_radius(m);
                   const double rhs = bounds::closed_form_radius(2, m) / std::exp2(m);
                   if (std::abs(lhs - rhs) > 1e-12) return fail(fmt("m=%g: %.17g vs %.17g", m, lhs, rhs));
                 }
                 return pass();
               }});

  c.push_back({"ballbounds.ordering_of_bounds", false, [](std::uint64_t) {
                 for (int d0 = 2; d0 <= 6; ++d0) {
                   for (int m = 2; m <= 40; ++m) {
                     const double closed = bounds::closed_form_log_radius(d0, m);
                     if (bounds::weak_log_radius(d0, m) > closed + 1e-12) return fail(fmt("weak above closed at d0=%g m=%g", d0, m));
                     if (d0 == 2 && bounds::gb03_log_baseline(m) > bounds::weak_log_radius(2, m) + 1e-12) {
                       return fail(fmt("gb03 above weak at m=%g", m));
                     }
                   }
                 }
                 return pass();
               }});

  c.push_back({"certify.ppt_on_boundary_2x2", false,
               [](std::uint64_t seed) { return ppt_on_boundary(Dims({2, 2}), 200, sampling::derive_seed(seed, 10)); }});

  c.push_back({"certify.ppt_on_boundary_2x2x2", false,
               [](std::uint64_t seed) { return ppt_on_boundary(Dims({2, 2, 2}), 200, sampling::derive_seed(seed, 11)); }});

  c.push_back({"certify.mu_attained", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 12);
                 for (int k = 0; k < 20; ++k) {
                   const HermitianMatrix rho = sampling::density_matrix(6, 3, rng);
                   const double purity = rho.mat().squaredNorm();
                   const CMat delta = rho.mat() / purity - CMat::Identity(6, 6);
                   if (rel(frobenius_norm(delta), certify::mu(rho)) > 1e-10) return fail("mu not attained at alpha = tr rho^2");
                 }
                 return pass();
               }});

  c.push_back({"certify.pseudopure_matches_materialized", false, [](std::uint64_t) {
                 for (int m = 2; m <= 10; ++m) {
                   for (double eta : {1e-5, 1e-3, 0.05, 0.3}) {
                     const nmr::NmrParams p(eta, m);
                     const Dims dims = Dims::qubits(m);
                     const auto full = certify::certify_normalized(nmr::pseudopure_state(p), dims);
                     const auto fast = certify::certify_pseudopure(nmr::pseudopure_epsilon(p), dims);
                     if (full.verdict != fast.verdict) return fail(fmt("verdicts differ at m=%g eta=%g", m, eta));
                   }
                 }
                 return pass();
               }});

  c.push_back({"schurnorm.l_matrix", false, [](std::uint64_t seed) {
                 for (double eta : {1.5, 2.0, 3.0}) {
                   for (std::size_t n = 2; n <= 8; ++n) {
                     const HermitianMatrix l = schurnorm::l_matrix(eta, n);
                     const auto qp = schurnorm::simplex_qp_max(schurnorm::squared_modulus(l.mat()));
                     const double expect = schurnorm::l_matrix_norm(eta, n);
                     if (std::abs(std::sqrt(qp.value) - expect) > 1e-10) return fail(fmt("eta=%g n=%g exact %.17g", eta, double(n), std::sqrt(qp.value)));
                     if ((qp.maximizer.array() - 1.0 / n).abs().maxCoeff() > 1e-10) return fail("maximizer not uniform");
                     const double oracle = schurnorm::oracle_two_inf_norm(l, schurnorm::kDefaultOracleRestarts, seed);
                     if (std::abs(oracle - expect) > 1e-6) return fail(fmt("eta=%g n=%g oracle %.17g", eta, double(n), oracle));
                   }
                 }
                 return pass();
               }});

  c.push_back({"schurnorm.exact_matches_oracle", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 13);
                 for (int k = 0; k < 30; ++k) {
                   const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
                   const HermitianMatrix b = sampling::gaussian_hermitian(n, rng);
                   const double exact = schurnorm::schur_two_inf_norm(b);
                   const double oracle = schurnorm::oracle_two_inf_norm(b, schurnorm::kDefaultOracleRestarts,
                                                                        sampling::derive_seed(seed, 100 + k));
                   if (oracle > exact + 1e-9 || oracle < exact - 1e-6) return fail(fmt("exact %.17g oracle %.17g", exact, oracle));
                 }
                 return pass();
               }});

  c.push_back({"schurnorm.nielsen_kempe", false, [](std::uint64_t seed) {
                 for (int k = 0; k < 50; ++k) {
                   sampling::Rng rng = make_rng(sampling::derive_seed(seed, 14), static_cast<std::uint64_t>(k));
                   std::vector<std::pair<CVec, CVec>> pairs;
                   const int terms = 1 + k % 9;
                   const RVec w = sampling::simplex_point(static_cast<std::size_t>(terms), rng);
                   for (int t = 0; t < terms; ++t) {
                     pairs.emplace_back(std::sqrt(w(t)) * sampling::unit_vector(3, rng), sampling::unit_vector(3, rng));
                   }
                   if (!schurnorm::nielsen_kempe_check(schurnorm::SeparableEnsemble(pairs))) {
                     return fail("ensemble " + std::to_string(k) + " violates global-local majorization");
                   }
                 }
                 return pass("50 ensembles");
               }});

  c.push_back({"schurnorm.ds_schur_majorization", false, [](std::uint64_t seed) {
                 for (int k = 0; k < 100; ++k) {
                   sampling::Rng rng = make_rng(sampling::derive_seed(seed, 15), static_cast<std::uint64_t>(k));
                   const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
                   const HermitianMatrix b = sampling::correlation_matrix(n, 1 + k % 3, rng);
                   const HermitianMatrix x = sampling::gaussian_hermitian(n, rng);
                   if (!schurnorm::ds_schur_majorization_check(b, x)) return fail("pair " + std::to_string(k) + " fails");
                 }
                 return pass("100 pairs");
               }});

  c.push_back({"extremal.tau_stochastic", false, [](std::uint64_t) {
                 for (int d2 : {4, 6, 9}) {
                   for (int d1 : {2, 3}) {
                     const LinearMap tau = extremal::build_tau(0.6, d2, d1);
                     const auto eye = HermitianMatrix::identity(static_cast<std::size_t>(d1 * d2));
                     const HermitianMatrix out = tilde_apply(tau, eye, static_cast<std::size_t>(d1));
                     if ((out.mat() - CMat::Identity(d1 * d1, d1 * d1)).cwiseAbs().maxCoeff() > 1e-15) {
                       return fail("tilde tau(I) != I");
                     }
                   }
                 }
                 return pass();
               }});

  c.push_back({"extremal.tau_attains_lambdaprime", false, [](std::uint64_t) {
                 std::string worst;
                 bool ok = true;
                 for (double a : {0.3, 0.6, 1.0}) {
                   for (int d2 : {4, 6, 9}) {
                     const double ratio = extremal::achieved_ratio(extremal::build_tau(a, d2), extremal::worst_case_input(a, d2));
                     const double target = bounds::lambdaprime_bound(a, d2);
                     if (std::abs(ratio - target) > 1e-9) {
                       ok = false;
                       if (worst.empty()) worst = fmt("a=%g: ratio %.9g vs lambda' %.9g", a, ratio, target) + " (d2=" + std::to_string(d2) + ")";
                     }
                   }
                 }
                 return ok ? pass() : fail(worst);
               }});

  c.push_back({"extremal.traceless_ratio_below_lambda", false, [](std::uint64_t seed) {
                 for (double a : {0.3, 0.6, 1.0}) {
                   for (int d2 : {4, 6}) {
                     const LinearMap tau = extremal::build_tau(a, d2);
                     const double lambda = bounds::lambda_bound(a, d2);
                     for (int k = 0; k < 1000; ++k) {
                       sampling::Rng rng = make_rng(sampling::derive_seed(seed, 16), static_cast<std::uint64_t>(k));
                       const HermitianMatrix x = sampling::hermitian_on_sphere(static_cast<std::size_t>(d2), 1.0, true, rng);
                       if (extremal::achieved_ratio(tau, x.mat()) > lambda + 1e-9) return fail(fmt("a=%g d2=%g exceeds lambda", a, d2));
                     }
                   }
                 }
                 return pass();
               }});

  c.push_back({"extremal.gamma_consistency", false, [](std::uint64_t seed) {
                 for (double a : {0.6, 1.0}) {
                   const int d2 = 4;
                   const LinearMap tau = extremal::build_tau(a, d2);
                   const double gamma = bounds::gamma_bound(2, d2, a);
                   for (int k = 0; k < 500; ++k) {
                     sampling::Rng rng = make_rng(sampling::derive_seed(seed, 17), static_cast<std::uint64_t>(k));
                     const HermitianMatrix x = sampling::hermitian_on_sphere(8, 1.0, false, rng);
                     if (operator_norm(tilde_apply(tau, x, 2).mat()) > gamma + 1e-9) return fail(fmt("a=%g exceeds gamma", a));
                   }
                 }
                 return pass();
               }});

  c.push_back({"extremal.block_chain", false, [](std::uint64_t seed) {
                 const LinearMap tau = extremal::build_tau(1.0, 4, 2);
                 for (int k = 0; k < 200; ++k) {
                   sampling::Rng rng = make_rng(sampling::derive_seed(seed, 18), static_cast<std::uint64_t>(k));
                   if (!extremal::block_chain_check(tau, sampling::gaussian_hermitian(8, rng), 1.0)) {
                     return fail("chain broken for sample " + std::to_string(k));
                   }
                 }
                 return pass("200 samples");
               }});

  c.push_back({"extremal.inflated_tau_violation", false, [](std::uint64_t seed) {
                 for (double a : {0.3, 0.6, 1.0}) {
                   for (int d2 : {4, 6, 9}) {
                     auto spec = extremal::TauMapSpec::critical(a, d2);
                     spec.mu *= 1.05;
                     if (!extremal::find_ball_violation(extremal::build_tau(spec), a, 4, seed)) {
                       return fail(fmt("no violation found for a=%g d2=%g", a, d2));
                     }
                   }
                 }
                 return pass();
               }});

  c.push_back({"extremal.tau_ball_positive_sampled", true, [](std::uint64_t seed) {
                 for (double a : {0.3, 0.6, 1.0}) {
                   for (int d2 : {4, 6, 9}) {
                     if (!extremal::ball_positivity_check(extremal::build_tau(a, d2), a, 10000, seed)) {
                       return fail(fmt("critical tau not positive at a=%g d2=%g", a, d2));
                     }
                   }
                 }
                 return pass("10^4 samples per (a, d2)");
               }});

  c.push_back({"geometry.sep_witness", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 19);
                 for (const auto& dv : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 2, 2}}) {
                   const Dims dims(dv);
                   std::vector<CVec> local;
                   for (int d : dv) local.push_back(sampling::unit_vector(static_cast<std::size_t>(d), rng));
                   const auto w = geometry::sep_symmetry_witness(dims, local);
                   if (geometry::reconstruction_error(w) > 1e-12) return fail("reconstruction error for dims " + dims.to_string());
                 }
                 return pass();
               }});

  c.push_back({"geometry.mes_witness", false, [](std::uint64_t) {
                 for (int n : {2, 3}) {
                   const auto w = geometry::mes_symmetry_witness(n);
                   if (geometry::reconstruction_error(w) > 1e-12) return fail("reconstruction error at n=" + std::to_string(n));
                   const Dims dims({n, n});
                   const CMat half = CMat::Identity(n, n) / static_cast<double>(n);
                   for (const auto& s : w.states) {
                     for (bool first : {true, false}) {
                       const auto marg = partial_trace(s, dims, {first, !first});
                       if ((marg.mat() - half).cwiseAbs().maxCoeff() > 1e-12) return fail("witness state is not maximally entangled");
                     }
                   }
                 }
                 return pass();
               }});

  c.push_back({"geometry.symmetry_coefficient_critical", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 20);
                 for (int d = 2; d <= 9; ++d) {
                   const HermitianMatrix pi = HermitianMatrix::projector(sampling::unit_vector(static_cast<std::size_t>(d), rng));
                   const double alpha = geometry::sep_symmetry_coefficient(d);
                   if (lambda_min(geometry::symmetric_point(pi, alpha)) < -1e-12) return fail(fmt("not PSD at alpha for d=%g", d));
                   if (is_psd(geometry::symmetric_point(pi, 1.05 * alpha))) return fail(fmt("PSD above alpha for d=%g", d));
                 }
                 return pass();
               }});

  c.push_back({"geometry.unitary_basis", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 21);
                 for (int n = 2; n <= 4; ++n) {
                   const auto basis = geometry::unitary_basis(n);
                   for (std::size_t i = 0; i < basis.size(); ++i) {
                     if ((basis[i] * basis[i].adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12) return fail("not unitary");
                     for (std::size_t j = 0; j < i; ++j) {
                       if (std::abs((basis[i].adjoint() * basis[j]).trace()) > 1e-10) return fail("not trace-orthogonal");
                     }
                   }
                   const CMat x = sampling::gaussian_complex(n, n, rng);
                   CMat avg = CMat::Zero(n, n);
                   for (const CMat& u : basis) avg += u * x * u.adjoint();
                   avg /= static_cast<double>(n);
                   if ((avg - x.trace() * CMat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-11) return fail("depolarizing identity fails");
                 }
                 return pass();
               }});

  c.push_back({"nmr.thresholds", false, [](std::uint64_t) {
                 using nmr::Baseline;
                 const int pp = nmr::pseudopure_threshold(nmr::kDefaultEta);
                 const int pg = nmr::pseudopure_threshold(nmr::kDefaultEta, Baseline::gb03);
                 const int th = nmr::thermal_threshold(nmr::kDefaultEta);
                 const int tg = nmr::thermal_threshold(nmr::kDefaultEta, Baseline::gb03);
                 if (pp != 35 || pg != 22 || th != 16 || tg != 13) {
                   return fail("thresholds " + std::to_string(pp) + "/" + std::to_string(pg) + "/" + std::to_string(th) + "/" +
                               std::to_string(tg));
                 }
                 return pass("35/22/16/13");
               }});

  c.push_back({"nmr.thermal_closed_form", false, [](std::uint64_t) {
                 for (int m = 1; m <= 10; ++m) {
                   for (double eta : {1e-3, 0.05, 0.1}) {
                     const nmr::NmrParams p(eta, m);
                     const std::size_t d = std::size_t{1} << m;
                     const CMat dev = nmr::thermal_state(p).mat() - CMat::Identity(d, d) / static_cast<double>(d);
                     if (std::abs(frobenius_norm(dev) - nmr::thermal_deviation_norm(p)) > 1e-12) return fail(fmt("m=%g eta=%g", m, eta));
                   }
                 }
                 return pass();
               }});

  c.push_back({"nmr.approximations_near_boundary", false, [](std::uint64_t) {
                 const nmr::NmrParams p(nmr::kDefaultEta, 17);
                 if (rel(nmr::thermal_deviation_norm_approx(p), nmr::thermal_deviation_norm(p)) > 0.01) return fail("thermal approximation off by > 1%");
                 return pass();
               }});

  c.push_back({"nmr.thresholds_monotone_in_eta", false, [](std::uint64_t) {
                 int prev_pp = 1 << 30, prev_th = 1 << 30;
                 for (double eta : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
                   const int pp = nmr::pseudopure_threshold(eta), th = nmr::thermal_threshold(eta);
                   if (pp > prev_pp || th > prev_th) return fail(fmt("threshold increased at eta=%g", eta));
                   prev_pp = pp;
                   prev_th = th;
                 }
                 return pass();
               }});

  c.push_back({"io.json_round_trip", false, [](std::uint64_t seed) {
                 sampling::Rng rng = make_rng(seed, 22);
                 const Dims dims({2, 2});
                 const HermitianMatrix rho = sampling::density_matrix(4, 2, rng);
                 const auto cert = certify::certify_normalized(rho, dims);
                 if (io::certificate_from_json(nlohmann::json::parse(io::to_json(cert).dump())) != cert) return fail("certificate");
                 const auto m = io::parse_matrix_json(io::matrix_json(dims, rho.mat()));
                 if (m.matrix.mat() != rho.mat()) return fail("matrix");
                 const auto rep = nmr::threshold_report(nmr::Mode::thermal, nmr::kDefaultEta);
                 if (io::threshold_report_from_json(nlohmann::json::parse(io::to_json(rep).dump())) != rep) return fail("threshold report");
                 return pass();
               }});

  return c;
}

}  // namespace

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = build_registry();
  return checks;
}

std::vector<CheckResult> run(const Options& opts, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> results;
  for (const Check& check : registry()) {
    if (check.slow && opts.suite == Suite::fast) continue;
    if (!opts.filter.empty() && check.name.find(opts.filter) == std::string::npos) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check.run(opts.seed);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    results.push_back({check.name, o.passed, std::move(o.detail), took.count()});
    if (on_result) on_result(results.back());
  }
  return results;
}

}  // namespace sepball::verify
