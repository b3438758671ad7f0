#pragma once

// Verification suites behind `atrig verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atrig/algebra.hpp"

namespace atrig::cli {

enum class Suite { kthagorean, lemma, roundtrip, identities, only_pure_power };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct SuiteOptions {
  PresentationPtr algebra;  // null: default sweep
  std::optional<int> samples;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
};

struct CaseResult {
  std::string algebra;
  int samples = 0;
  double worst = 0.0;
  bool passed = false;
  std::string note;
};

struct SuiteReport {
  Suite suite = Suite::kthagorean;
  double tolerance = 0.0;
  std::vector<CaseResult> cases;
  bool passed = false;
};

SuiteReport run_suite(Suite suite, const SuiteOptions& options);

}  // namespace atrig::cli
