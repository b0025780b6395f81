#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ietseq {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // JSON object
};

struct VerifyOptions {
  long L = 2;
  long S = 2;
  long r = 0;
  long window = 50;
  unsigned lmax = 8;
  std::size_t samples = 100;
  std::size_t n_max = 2000;
  std::uint64_t seed = 1;
};

/// scaling, restriction, n3, example35, orbit-jls, ls-noncoincidence.
const std::vector<std::string>& verify_suites();

/// Runs one suite, or every suite for "all". InvalidParams for unknown names.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options = {});

/// {"passed": bool, "first_failure": name|null, "checks": [...]}
std::string verify_json(const std::vector<CheckResult>& checks);

}  // namespace ietseq
