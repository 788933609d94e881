#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chordstat::acceptance {

struct CriterionResult {
  std::string id;           ///< "1" .. "15", with letters for split criteria
  std::string description;
  double measured = 0.0;    ///< statistic or worst deviation
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Informational checks are reported but do not affect the overall verdict.
  bool informational = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
};

using Callback = std::function<void(const CriterionResult&)>;

/// Runs every acceptance criterion in order, invoking `on_result` as each
/// result becomes available.
std::vector<CriterionResult> run_all(const Options& options, const Callback& on_result = {});

/// True when every non-informational result passed.
bool all_pass(const std::vector<CriterionResult>& results);

/// One line: "PASS|FAIL|INFO-PASS|INFO-FAIL [id] description: measured ... ".
std::string format_line(const CriterionResult& r);

}  // namespace chordstat::acceptance
