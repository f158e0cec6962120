#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qtheta {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // e.g. "(5,2) rec5"

  bool ok() const noexcept { return failed == 0; }
  void record(bool pass, const std::string& label);
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool ok() const noexcept;
};

struct VerifyOptions {
  unsigned rows = 12;          // triangle rows n = 0 .. rows-1
  unsigned max_inverse_k = 5;  // 1/f^k for k = 1 .. max_inverse_k
  unsigned enumeration_cap = 22;  // largest n for the partition/composition engines
  unsigned luschny_cap = 25;      // largest n for P_{n,k} based suites
  unsigned threads = 0;           // 0: one per hardware thread
};

/// Runs every identity check; suites run on independent workers, each with
/// its own engines. Suite order in the report is fixed.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace qtheta
