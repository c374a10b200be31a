#pragma once
// Separability certificates for concrete states from the ball bounds, with
// the PPT test as an independent necessary condition.

#include <optional>
#include <string_view>

#include "sepball/matcore.hpp"

namespace sepball::certify {

enum class Verdict { separable, inconclusive, not_psd, not_normalized };

std::string_view verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

/// Relative width of the band around the bound inside which a verdict is
/// reported separable and flagged `boundary`.
inline constexpr double kBoundaryBand = 1e-9;

/// Normalization tolerance on tr(rho).
inline constexpr double kTraceTol = 1e-10;

struct Certificate {
  Verdict verdict;
  double bound;
  double measured;
  double margin;  // bound - measured
  Dims dims;
  bool boundary = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Smallest ||Delta||_2 over all ways of writing rho = alpha (I + Delta),
/// alpha > 0: sqrt(d - 1/tr(rho^2)), attained at alpha = tr(rho^2).
/// Requires tr(rho) = 1 and rho PSD.
double mu(const HermitianMatrix& rho);

/// Separable iff ||X - I||_2 <= recursion_radius(dims).
Certificate certify_unnormalized(const HermitianMatrix& x, const Dims& dims);

/// Separable iff ||rho - I/d||_2 <= a / sqrt(d (d - a^2)); a defaults to
/// recursion_radius(dims). Unnormalized or non-PSD input yields the
/// corresponding verdict rather than an exception.
Certificate certify_normalized(const HermitianMatrix& rho, const Dims& dims,
                               std::optional<double> radius = std::nullopt);

/// Certificate for eps*pi + (1 - eps) I/d without materializing it, valid for
/// any number of parties. The bound is the largest eps for which the
/// normalized ball test passes: b / sqrt((d - 1)(d - b^2)).
Certificate certify_pseudopure(double eps, const Dims& dims, std::optional<double> log_radius = std::nullopt);

/// True iff the partial transpose across every bipartition of the parties is
/// PSD.
bool ppt_all_cuts(const HermitianMatrix& rho, const Dims& dims, double tol = kDefaultPsdTol);

}  // namespace sepball::certify
