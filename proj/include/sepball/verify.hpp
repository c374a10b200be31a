#pragma once
// Named invariant checks across all modules, run by `sepball verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sepball/sampling.hpp"

namespace sepball::verify {

enum class Suite { fast, all };

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct Outcome {
  bool passed;
  std::string detail;
};

struct Check {
  std::string name;
  bool slow;  // excluded from the fast suite
  std::function<Outcome(std::uint64_t seed)> run;
};

/// Every registered check, in a fixed order.
const std::vector<Check>& registry();

struct Options {
  std::uint64_t seed = sampling::kDefaultSeed;
  Suite suite = Suite::all;
  std::string filter;  // substring of the check name; empty runs everything
};

/// Runs the selected checks in registry order. An exception inside a check
/// counts as a failure with the message as detail. `on_result` is called as
/// each check finishes.
std::vector<CheckResult> run(const Options& opts, const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace sepball::verify
