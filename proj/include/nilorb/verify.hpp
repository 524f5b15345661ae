#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/algebra.hpp"
#include "nilorb/orbit_catalog.hpp"

namespace nilorb {

enum class CheckStatus { Pass, Fail, Skip };
std::string_view check_status_name(CheckStatus s);

struct CheckResult {
  std::string orbit;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Deliberate corruption of a built triple, for exercising the failure path.
enum class Fault { None, CorruptY, CorruptH, CorruptGram };
Fault fault_from_name(const std::string& s);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int max_verify_n = 6;
  int samples = 3;  // random group points / matrix pairs per orbit
  unsigned threads = 1;
  Fault fault = Fault::None;
};

struct VerifyReport {
  AlgebraSpec algebra;
  VerifyOptions options;
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
};

// Every identity that can be checked for one orbit. Deterministic in `seed`.
std::vector<CheckResult> verify_orbit(const AlgebraSpec& a, const OrbitRecord& r,
                                      const VerifyOptions& opts, std::uint64_t seed);

// All orbits of `a`, fanned out over opts.threads workers; results are in
// catalog order regardless of scheduling. Algebras whose rank parameter
// exceeds max_verify_n are reported as a single skipped check.
VerifyReport run_verify(const AlgebraSpec& a, const VerifyOptions& opts);

// worker cap from NILORB_THREADS (default 1)
unsigned threads_from_env();

// runs job(i) for i in [0, n) on up to `threads` workers
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job);

}  // namespace nilorb
