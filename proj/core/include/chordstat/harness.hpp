#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chordstat/stats.hpp"

namespace chordstat::harness {

enum class SamplerKind { insertion, shuffle };

/// Work budget n * trials allowed by default; CHORDSTAT_MAX_WORK overrides it.
inline constexpr std::uint64_t kDefaultMaxWork = 2'000'000'000ULL;
std::uint64_t max_work();

/// Enumeration cap; CHORDSTAT_ENUM_CAP overrides the built-in default.
std::size_t enumeration_cap();

struct TrialPlan {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  SamplerKind sampler = SamplerKind::insertion;
  /// Number of block-count coordinates B_{n,1..k} recorded per trial.
  std::size_t block_k = 4;
  /// Skip play() and record only block data (first match, counts, good intervals).
  bool blocks_only = false;
};

/// Everything measured on one trial. Fields not measured stay zero.
struct TrialRecord {
  std::uint32_t length = 0;
  std::uint32_t lucky = 0;
  std::uint32_t first_match = 0;
  std::uint32_t even_blocks = 0;
  std::uint64_t good_intervals = 0;  ///< insertion sampler only
  std::vector<std::uint32_t> block_counts;  ///< B_{n,1..block_k}
};

struct ReportEntry {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double target = 0.0;
  double sampling_tolerance = 0.0;  ///< about three standard errors
  double bias_tolerance = 0.0;      ///< finite-n allowance
  double tolerance = 0.0;           ///< sampling + bias
  bool pass = false;
};

struct Report {
  TrialPlan plan;
  std::vector<ReportEntry> entries;

  bool all_pass() const;
};

/// Per-trial records in trial order. Trial t uses RngStream(seed, t), so the
/// result does not depend on the thread count. Throws std::invalid_argument for
/// n == 0 or trials == 0 and std::length_error above max_work().
std::vector<TrialRecord> run_records(const TrialPlan& plan);

/// Aggregates records in fixed chunks of 1024 trials merged in order.
Report summarize(const TrialPlan& plan, const std::vector<TrialRecord>& records);

/// run_records followed by summarize.
Report run_trials(const TrialPlan& plan);

/// Builds an entry, filling tolerance and pass.
ReportEntry make_entry(std::string name, double estimate, double std_error, double target,
                       double sampling_tolerance, double bias_tolerance);

}  // namespace chordstat::harness
