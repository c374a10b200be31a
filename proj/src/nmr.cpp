#include "sepball/nmr.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sepball/ballbounds.hpp"
#include "sepball/certify.hpp"

namespace sepball::nmr {
namespace {

// log(e^x - 1) for x > 0.
double log_expm1(double x) { return x > 30.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x)); }

void check_scan_eta(double eta) {
  if (!(eta > 0.0 && eta < 0.1)) throw DomainError("threshold scans need 0 < eta < 0.1");
}

bounds::Method method_for(Baseline b) {
  return b == Baseline::gb03 ? bounds::Method::gb03_baseline : bounds::Method::recursion;
}

int scan(double eta, Baseline baseline, double (*margin)(double, int, Baseline)) {
  check_scan_eta(eta);
  int last = 1;
  for (int m = 2; m <= kScanCap; ++m) {
    if (margin(eta, m, baseline) >= 0.0) last = m;
  }
  if (last == kScanCap) throw CapExceededError("cap reached: still certified at m = " + std::to_string(kScanCap));
  return last;
}

}  // namespace

NmrParams::NmrParams(double eta_, int m_) : eta(eta_), m(m_) {
  if (!(eta >= 0.0 && eta < 1.0)) throw DomainError("eta must lie in [0, 1)");
  if (m < 1) throw DomainError("need at least one qubit");
}

std::optional<std::string> NmrParams::warning() const {
  if (eta > 0.1) return "eta above 0.1: the linearized Boltzmann weights are inaccurate";
  return std::nullopt;
}

HermitianMatrix thermal_state(const NmrParams& p) {
  const std::size_t d = Dims::qubits(p.m).materialized_total();
  std::vector<double> diag(d);
  for (std::size_t i = 0; i < d; ++i) {
    double v = 1.0;
    for (int k = 0; k < p.m; ++k) v *= ((i >> k) & 1U) ? (1.0 - p.eta) / 2.0 : (1.0 + p.eta) / 2.0;
    diag[i] = v;
  }
  return HermitianMatrix::diagonal(diag);
}

double thermal_deviation_log_norm(const NmrParams& p) {
  if (p.eta == 0.0) return -std::numeric_limits<double>::infinity();
  return 0.5 * (log_expm1(p.m * std::log1p(p.eta * p.eta)) - p.m * std::log(2.0));
}

double thermal_deviation_norm(const NmrParams& p) { return std::exp(thermal_deviation_log_norm(p)); }

double thermal_deviation_norm_approx(const NmrParams& p) {
  return std::sqrt(static_cast<double>(p.m)) * p.eta * std::exp(-0.5 * p.m * std::log(2.0));
}

double pseudopure_epsilon(const NmrParams& p) { return p.eta * p.m * std::exp(-p.m * std::log(2.0)); }

HermitianMatrix pseudopure_state(const NmrParams& p) {
  const std::size_t d = Dims::qubits(p.m).materialized_total();
  const double eps = pseudopure_epsilon(p);
  std::vector<double> diag(d, (1.0 - eps) / static_cast<double>(d));
  diag[0] += eps;
  return HermitianMatrix::diagonal(diag);
}

std::string_view baseline_name(Baseline b) { return b == Baseline::gb03 ? "gb03" : "recursion"; }

Baseline baseline_from_name(std::string_view name) {
  if (name == "recursion") return Baseline::recursion;
  if (name == "gb03") return Baseline::gb03;
  throw ParseError("unknown baseline '" + std::string(name) + "'");
}

std::string_view mode_name(Mode m) { return m == Mode::thermal ? "thermal" : "pseudopure"; }

Mode mode_from_name(std::string_view name) {
  if (name == "thermal") return Mode::thermal;
  if (name == "pseudopure") return Mode::pseudopure;
  throw ParseError("unknown mode '" + std::string(name) + "'");
}

double pseudopure_margin(double eta, int m, Baseline baseline) {
  const Dims dims = Dims::qubits(m);
  const NmrParams p(eta, m);
  const certify::Certificate c =
      certify::certify_pseudopure(pseudopure_epsilon(p), dims, bounds::log_radius(dims, method_for(baseline)));
  return c.margin / c.bound;
}

double thermal_margin(double eta, int m, Baseline baseline) {
  const Dims dims = Dims::qubits(m);
  const double log_bound = bounds::normalized_log_radius(bounds::log_radius(dims, method_for(baseline)),
                                                         dims.log_total());
  const double log_measured = thermal_deviation_log_norm(NmrParams(eta, m));
  return -std::expm1(log_measured - log_bound);
}

int pseudopure_threshold(double eta, Baseline baseline) { return scan(eta, baseline, &pseudopure_margin); }

int thermal_threshold(double eta, Baseline baseline) { return scan(eta, baseline, &thermal_margin); }

ThresholdReport threshold_report(Mode mode, double eta, Baseline baseline) {
  auto margin = mode == Mode::thermal ? &thermal_margin : &pseudopure_margin;
  const int t = mode == Mode::thermal ? thermal_threshold(eta, baseline) : pseudopure_threshold(eta, baseline);
  return {mode, baseline, eta, t, margin(eta, t, baseline), margin(eta, t + 1, baseline)};
}

double bipartite_qubit_count(double eta) {
  if (!(eta > 0.0)) throw DomainError("eta must be positive");
  return 1.0 / eta;
}

}  // namespace sepball::nmr
