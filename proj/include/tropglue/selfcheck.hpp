#pragma once

#include <string>
#include <vector>

namespace tropglue {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct CheckOptions {
  std::string data_dir;    // holds cp2-corner/ and twisted/
  std::string table_path;  // replaces cp2-corner/table.json when non-empty
  unsigned threads = 1;
  int seeds = 5;
  bool stretch = false;    // also run degree 4
};

// Property suite and exact-count checks at fixed seeds. Never throws; failures
// are reported per check.
std::vector<CheckResult> run_checks(const CheckOptions& options);

}  // namespace tropglue
