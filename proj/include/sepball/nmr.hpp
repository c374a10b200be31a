#pragma once
// Thermal and pseudopure NMR states of m spin-1/2 nuclei, their distance from
// the maximally mixed state, and the largest qubit counts the ball bounds
// still certify as separable.

#include <optional>
#include <string>
#include <string_view>

#include "sepball/matcore.hpp"

namespace sepball::nmr {

/// Polarization beta mu B for protons at T = 300 K in an 11 T field.
inline constexpr double kDefaultEta = 3.746e-5;

/// Thresholds are searched over m = 2 .. kScanCap.
inline constexpr int kScanCap = 500;

struct NmrParams {
  NmrParams(double eta, int m);

  double eta;
  int m;

  /// Set when eta > 0.1, where e^(+-eta) ~ 1 +- eta stops being accurate.
  std::optional<std::string> warning() const;
};

/// m-fold tensor power of diag((1 + eta)/2, (1 - eta)/2).
HermitianMatrix thermal_state(const NmrParams& p);

/// ||rho - I/d||_2 = sqrt(((1 + eta^2)^m - 1) / 2^m), evaluated without
/// overflow for any m.
double thermal_deviation_norm(const NmrParams& p);
double thermal_deviation_log_norm(const NmrParams& p);
/// Small-eta form sqrt(m eta^2 / 2^m).
double thermal_deviation_norm_approx(const NmrParams& p);

/// eps = eta m / 2^m.
double pseudopure_epsilon(const NmrParams& p);
/// eps |0..0><0..0| + (1 - eps) I/d.
HermitianMatrix pseudopure_state(const NmrParams& p);

enum class Baseline { recursion, gb03 };
std::string_view baseline_name(Baseline b);
Baseline baseline_from_name(std::string_view name);

enum class Mode { thermal, pseudopure };
std::string_view mode_name(Mode m);
Mode mode_from_name(std::string_view name);

/// Relative margin (bound - measured)/bound for m qubits; positive means
/// certified separable.
double pseudopure_margin(double eta, int m, Baseline baseline = Baseline::recursion);
double thermal_margin(double eta, int m, Baseline baseline = Baseline::recursion);

/// Largest m in 2 .. kScanCap that is certified separable. Requires
/// 0 < eta < 0.1; throws CapExceededError if m = kScanCap is still certified.
int pseudopure_threshold(double eta, Baseline baseline = Baseline::recursion);
int thermal_threshold(double eta, Baseline baseline = Baseline::recursion);

struct ThresholdReport {
  Mode mode;
  Baseline baseline;
  double eta;
  int threshold;
  double margin_at_threshold;
  double margin_after_threshold;

  friend bool operator==(const ThresholdReport&, const ThresholdReport&) = default;
};

ThresholdReport threshold_report(Mode mode, double eta, Baseline baseline = Baseline::recursion);

/// 1/eta: the qubit count at which a single bipartite cut stops being
/// certified.
double bipartite_qubit_count(double eta);

}  // namespace sepball::nmr
