#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "etq/abelian.hpp"
#include "etq/report.hpp"

namespace etq {

struct VerifyOptions {
  std::string scope = "all";
  int s_max = 8;      // deepest coefficient level Z/2^s
  int d_max = 512;    // largest quadric dimension in sweeps
  int window = kDefaultStabilizationWindow;
  bool parallel = false;
};

struct CheckResult {
  std::string id;  // "<scope>.<name>"
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<std::string> scopes;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int passed() const;
};

/// Scope names in run order: mod2, integral, z4, tower, rost, quadrics,
/// rings, flag. "all" runs every scope; s2..s9 are aliases in the same order.
std::vector<std::string> verify_scopes();
/// Canonical scope list for a scope argument; throws InvalidArgument.
std::vector<std::string> resolve_scope(std::string_view scope);

/// Runs every check in scope. Checks are independent; with parallel set they
/// run concurrently, and results are always reported in the same order.
VerifyReport run_verify(const VerifyOptions& options);

std::string render(const VerifyReport& report, Format format);

}  // namespace etq
