// sepball: separable-ball radii, certificates, Schur-map norms, NMR
// thresholds and the invariant suite.
//
// Exit codes: 0 success / separable, 1 verify failure, 2 usage or input
// error, 3 inconclusive, 4 not PSD or not normalized.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepball/ballbounds.hpp"
#include "sepball/certify.hpp"
#include "sepball/io.hpp"
#include "sepball/nmr.hpp"
#include "sepball/schurnorm.hpp"
#include "sepball/verify.hpp"

namespace {

using namespace sepball;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInvalidState = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string seed_text;
  std::string format = "human";
  bool json() const { return format == "json"; }
};

std::string g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("bad seed '" + text + "'");
  return v;
}

std::uint64_t resolve_seed(const Global& g) {
  if (!g.seed_text.empty()) return parse_seed(g.seed_text);
  if (const char* env = std::getenv("SEPBALL_SEED"); env && *env) return parse_seed(env);
  return sampling::kDefaultSeed;
}

// bound

struct BoundArgs {
  std::vector<int> dims;
  int qubits = 0;
  bool all_orders = false;
};

int cmd_bound(const Global& g, const BoundArgs& args) {
  if (args.qubits && !args.dims.empty()) throw UsageError("give either dims or --qubits, not both");
  if (!args.qubits && args.dims.empty()) throw UsageError("no dims given");
  const Dims dims = args.qubits ? Dims::qubits(args.qubits) : Dims(args.dims);
  if (dims.size() < 2) throw UsageError("need at least two parties");

  std::vector<bounds::RadiusReport> rows;
  for (auto m : {bounds::Method::recursion, bounds::Method::closed_form, bounds::Method::weak_corollary,
                 bounds::Method::gb03_baseline}) {
    if (m != bounds::Method::recursion && !dims.homogeneous()) continue;
    if (m == bounds::Method::gb03_baseline && dims[0] != 2) continue;
    rows.push_back(bounds::radius_report(dims, m));
  }
  const bool qubits = dims.homogeneous() && dims[0] == 2;

  std::vector<std::pair<std::vector<int>, double>> orders;
  if (args.all_orders) {
    if (dims.size() > 8) throw UsageError("--all-orders is limited to 8 parties");
    std::vector<int> perm = dims.values();
    std::sort(perm.begin(), perm.end());
    do {
      orders.emplace_back(perm, bounds::recursion_radius(Dims(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  if (g.json()) {
    json out = {{"dims", dims.values()}, {"reports", json::array()}};
    for (const auto& r : rows) out["reports"].push_back(io::to_json(r));
    if (qubits) out["gamma"] = bounds::qubit_asymptotic_exponent();
    if (args.all_orders) {
      out["orders"] = json::array();
      for (const auto& [p, r] : orders) out["orders"].push_back({{"dims", p}, {"recursion_radius", r}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("dims %s\n", dims.to_string().c_str());
  std::printf("%-16s %-18s %s\n", "method", "unnormalized", "normalized");
  for (const auto& r : rows) {
    std::printf("%-16s %-18s %s\n", std::string(bounds::method_name(r.method)).c_str(),
                g9(r.unnormalized_radius).c_str(), g9(r.normalized_radius).c_str());
  }
  if (qubits) std::printf("gamma %s\n", g9(bounds::qubit_asymptotic_exponent()).c_str());
  for (const auto& [p, r] : orders) std::printf("order %s recursion %s\n", Dims(p).to_string().c_str(), g9(r).c_str());
  return 0;
}

// certify

struct CertifyArgs {
  std::string file;
  bool normalized = false;
  bool unnormalized = false;
  bool ppt = false;
};

int cmd_certify(const Global& g, const CertifyArgs& args) {
  const io::MatrixFile f = io::read_matrix_file(args.file);
  const HermitianMatrix h = [&] {
    try {
      return HermitianMatrix(f.matrix.mat());
    } catch (const DomainError& e) {
      throw UsageError(std::string("input matrix: ") + e.what());
    }
  }();
  const certify::Certificate c =
      args.unnormalized ? certify::certify_unnormalized(h, f.dims) : certify::certify_normalized(h, f.dims);
  json out = io::to_json(c);
  std::optional<bool> ppt;
  if (args.ppt) {
    ppt = certify::ppt_all_cuts(h, f.dims);
    out["ppt"] = *ppt;
  }

  if (g.json()) {
    std::cout << out.dump() << "\n";
  } else {
    std::printf("verdict  %s%s\n", std::string(certify::verdict_name(c.verdict)).c_str(),
                c.boundary ? " (boundary)" : "");
    std::printf("bound    %s\nmeasured %s\nmargin   %s\n", g9(c.bound).c_str(), g9(c.measured).c_str(),
                g9(c.margin).c_str());
    if (ppt) std::printf("ppt      %s\n", *ppt ? "pass" : "violated");
  }
  switch (c.verdict) {
    case certify::Verdict::separable:
      return 0;
    case certify::Verdict::inconclusive:
      return kExitInconclusive;
    default:
      return kExitInvalidState;
  }
}

// schur-norm

struct SchurArgs {
  std::string file;
  std::vector<double> l_matrix;
  bool oracle_only = false;
  int restarts = schurnorm::kDefaultOracleRestarts;
};

int cmd_schur_norm(const Global& g, const SchurArgs& args, std::uint64_t seed) {
  if (args.file.empty() == args.l_matrix.empty()) throw UsageError("give either FILE or --l-matrix ETA N");
  std::optional<HermitianMatrix> b;
  if (!args.l_matrix.empty()) {
    const double n = args.l_matrix[1];
    if (n < 1 || n != std::floor(n)) throw UsageError("--l-matrix size must be a positive integer");
    b = schurnorm::l_matrix(args.l_matrix[0], static_cast<std::size_t>(n));
  } else {
    const io::MatrixFile f = io::read_matrix_file(args.file);
    try {
      b = HermitianMatrix(f.matrix.mat());
    } catch (const DomainError& e) {
      throw UsageError(std::string("input matrix: ") + e.what());
    }
  }
  if (b->dim() > schurnorm::kExactMaxDim && !args.oracle_only) {
    throw UsageError("n = " + std::to_string(b->dim()) + " exceeds the exact solver limit of " +
                     std::to_string(schurnorm::kExactMaxDim) + "; pass --oracle-only");
  }
  std::optional<double> exact;
  if (!args.oracle_only) exact = schurnorm::schur_two_inf_norm(*b);
  const double oracle = schurnorm::oracle_two_inf_norm(*b, args.restarts, seed);

  if (g.json()) {
    json out = {{"n", b->dim()}, {"oracle", oracle}};
    if (exact) {
      out["exact"] = *exact;
      out["gap"] = *exact - oracle;
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (exact) std::printf("exact  %s\n", g9(*exact).c_str());
  std::printf("oracle %s\n", g9(oracle).c_str());
  if (exact) std::printf("gap    %s\n", g9(*exact - oracle).c_str());
  return 0;
}

// nmr

struct NmrArgs {
  double eta = nmr::kDefaultEta;
  std::string mode = "pseudopure";
  std::string baseline = "recursion";
};

int cmd_nmr(const Global& g, const NmrArgs& args) {
  if (!(args.eta > 0.0 && args.eta < 0.1)) throw UsageError("--eta must lie in (0, 0.1)");
  const nmr::Mode mode = nmr::mode_from_name(args.mode);
  const nmr::Baseline baseline = nmr::baseline_from_name(args.baseline);
  const nmr::ThresholdReport r = nmr::threshold_report(mode, args.eta, baseline);
  const auto other_baseline = baseline == nmr::Baseline::gb03 ? nmr::Baseline::recursion : nmr::Baseline::gb03;
  const nmr::ThresholdReport other = nmr::threshold_report(mode, args.eta, other_baseline);

  if (g.json()) {
    json out = io::to_json(r);
    out["comparison"] = io::to_json(other);
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::printf("mode %s, baseline %s, eta %s\n", args.mode.c_str(), args.baseline.c_str(), g9(args.eta).c_str());
  std::printf("threshold %d\n", r.threshold);
  std::printf("margin at %d: %s\n", r.threshold, g9(r.margin_at_threshold).c_str());
  std::printf("margin at %d: %s\n", r.threshold + 1, g9(r.margin_after_threshold).c_str());
  std::printf("entanglement not certified possible until %d\n", r.threshold + 1);
  std::printf("%s baseline threshold %d\n", std::string(nmr::baseline_name(other_baseline)).c_str(), other.threshold);
  return 0;
}

// verify

int cmd_verify(const Global& g, const std::string& suite, const std::string& only, std::uint64_t seed) {
  verify::Options opts;
  opts.seed = seed;
  opts.filter = only;
  if (suite == "fast") {
    opts.suite = verify::Suite::fast;
  } else if (suite != "all") {
    throw UsageError("suite must be 'all' or 'fast'");
  }

  std::size_t failed = 0;
  json out = json::array();
  const auto results = verify::run(opts, [&](const verify::CheckResult& r) {
    if (!r.passed) ++failed;
    if (g.json()) {
      out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      return;
    }
    std::printf("%s %s", r.passed ? "PASS" : "FAIL", r.name.c_str());
    if (!r.detail.empty()) std::printf(": %s", r.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
  });
  if (results.empty()) throw UsageError("no checks match '" + only + "'");
  if (g.json()) {
    std::cout << out.dump() << "\n";
  } else {
    std::printf("%zu passed, %zu failed (seed %#llx)\n", results.size() - failed, failed,
                static_cast<unsigned long long>(seed));
  }
  return failed ? kExitVerifyFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable-ball bounds, certificates and checks"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed_text, "Seed for sampled checks (default 0xB0B5, or $SEPBALL_SEED)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "json"}));

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Separable-ball radii for the given local dimensions");
  bound_cmd->add_option("dims", bound.dims, "Local dimensions, in folding order");
  bound_cmd->add_option("--qubits", bound.qubits, "Use N qubits")->check(CLI::Range(2, 100000));
  bound_cmd->add_flag("--all-orders", bound.all_orders, "Also fold the dims in every distinct order");

  CertifyArgs cert;
  auto* cert_cmd = app.add_subcommand("certify", "Certify a matrix file as separable");
  cert_cmd->add_option("file", cert.file, "Matrix JSON file")->required();
  auto* norm_flag = cert_cmd->add_flag("--normalized", cert.normalized, "Treat as a density matrix (default)");
  cert_cmd->add_flag("--unnormalized", cert.unnormalized, "Compare with the ball around I")->excludes(norm_flag);
  cert_cmd->add_flag("--ppt", cert.ppt, "Also run the PPT test on every cut");

  SchurArgs schur;
  auto* schur_cmd = app.add_subcommand("schur-norm", "2 -> inf norm of X -> B o X");
  schur_cmd->add_option("file", schur.file, "Matrix JSON file holding B");
  schur_cmd->add_option("--l-matrix", schur.l_matrix, "Use L(ETA, N)")->expected(2)->type_name("ETA N");
  schur_cmd->add_flag("--oracle-only", schur.oracle_only, "Skip the exact solver");
  schur_cmd->add_option("--restarts", schur.restarts, "Oracle restarts")->check(CLI::Range(1, 1 << 20));

  NmrArgs nmr_args;
  auto* nmr_cmd = app.add_subcommand("nmr", "Qubit-count thresholds for NMR states");
  nmr_cmd->add_option("--eta", nmr_args.eta, "Polarization beta mu B");
  nmr_cmd->add_option("--mode", nmr_args.mode, "thermal or pseudopure")
      ->check(CLI::IsMember({"thermal", "pseudopure"}));
  nmr_cmd->add_option("--baseline", nmr_args.baseline, "recursion or gb03")
      ->check(CLI::IsMember({"recursion", "gb03"}));

  std::string suite = "all";
  std::string only;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("suite", suite, "all or fast")->check(CLI::IsMember({"all", "fast"}));
  verify_cmd->add_option("--only", only, "Run checks whose name contains this text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const std::uint64_t seed = resolve_seed(g);
    if (*bound_cmd) return cmd_bound(g, bound);
    if (*cert_cmd) return cmd_certify(g, cert);
    if (*schur_cmd) return cmd_schur_norm(g, schur, seed);
    if (*nmr_cmd) return cmd_nmr(g, nmr_args);
    if (*verify_cmd) return cmd_verify(g, suite, only, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sepball::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
