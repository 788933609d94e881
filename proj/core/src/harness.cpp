#include "chordstat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "chordstat/game.hpp"
#include "chordstat/limits.hpp"
#include "chordstat/rng.hpp"
#include "chordstat/sampler.hpp"

namespace chordstat::harness {
namespace {

constexpr std::uint64_t kChunk = 1024;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " is not a nonnegative integer");
  }
}

TrialRecord run_one(const TrialPlan& plan, std::uint64_t trial) {
  RngStream rng(plan.seed, trial);
  const Deal deal = plan.sampler == SamplerKind::insertion
                        ? sample_deal_insertion(plan.n, rng).deal
                        : sample_deal_shuffle(plan.n, rng);
  const BlockProfile profile = blocks(deal);
  TrialRecord r;
  r.first_match = profile.lengths.front();
  r.even_blocks = even_block_count(profile);
  r.good_intervals = good_interval_count(profile);
  r.block_counts.resize(plan.block_k);
  for (std::size_t i = 0; i < plan.block_k; ++i) r.block_counts[i] = profile.count(i + 1);
  if (!plan.blocks_only) {
    const GameStats g = play(deal);
    r.length = g.length;
    r.lucky = g.lucky;
  }
  return r;
}

// Accumulates f(record) over records in chunk order.
template <typename F>
MomentAccumulator accumulate(const std::vector<TrialRecord>& records, F f) {
  MomentAccumulator total;
  for (std::size_t start = 0; start < records.size(); start += kChunk) {
    MomentAccumulator chunk;
    const std::size_t end = std::min<std::size_t>(records.size(), start + kChunk);
    for (std::size_t t = start; t < end; ++t) chunk.add(f(records[t]));
    total.merge(chunk);
  }
  return total;
}

ReportEntry mean_entry(std::string name, const MomentAccumulator& acc, double target,
                       double tolerance) {
  const double se = acc.std_error();
  const double sampling = std::min(tolerance, 3.0 * se);
  return make_entry(std::move(name), acc.mean(), se, target, sampling, tolerance - sampling);
}

}  // namespace

std::uint64_t max_work() { return env_u64("CHORDSTAT_MAX_WORK", kDefaultMaxWork); }

std::size_t enumeration_cap() {
  return static_cast<std::size_t>(env_u64("CHORDSTAT_ENUM_CAP", kDefaultEnumerationCap));
}

bool Report::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

ReportEntry make_entry(std::string name, double estimate, double std_error, double target,
                       double sampling_tolerance, double bias_tolerance) {
  ReportEntry e;
  e.name = std::move(name);
  e.estimate = estimate;
  e.std_error = std_error;
  e.target = target;
  e.sampling_tolerance = sampling_tolerance;
  e.bias_tolerance = bias_tolerance;
  e.tolerance = sampling_tolerance + bias_tolerance;
  e.pass = std::abs(estimate - target) <= e.tolerance;
  return e;
}

std::vector<TrialRecord> run_records(const TrialPlan& plan) {
  if (plan.n == 0) throw std::invalid_argument("run_trials: n must be positive");
  if (plan.trials == 0) throw std::invalid_argument("run_trials: trials must be positive");
  const std::uint64_t cap = max_work();
  if (plan.trials > cap / plan.n) {
    throw std::length_error("run_trials: n * trials exceeds the work budget of " +
                            std::to_string(cap) + " (set CHORDSTAT_MAX_WORK to raise it)");
  }

  std::vector<TrialRecord> records(plan.trials);
  const std::uint64_t chunks = (plan.trials + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t end = std::min(plan.trials, (c + 1) * kChunk);
      for (std::uint64_t t = c * kChunk; t < end; ++t) records[t] = run_one(plan, t);
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(plan.threads, 1, chunks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return records;
}

Report summarize(const TrialPlan& plan, const std::vector<TrialRecord>& records) {
  const auto c = limits::named_constants();
  const double n = static_cast<double>(plan.n);
  const double root_n = std::sqrt(n);
  Report report;
  report.plan = plan;

  if (!plan.blocks_only) {
    report.entries.push_back(mean_entry(
        "mean_length_over_n", accumulate(records, [&](const TrialRecord& r) { return r.length / n; }),
        c.game_length_rate, 0.01));

    const auto centered = accumulate(
        records, [&](const TrialRecord& r) { return (r.length - c.game_length_rate * n) / root_n; });
    const double var = centered.variance();
    const double cnt = static_cast<double>(centered.count());
    const double var_se = cnt > 1 ? var * std::sqrt(2.0 / (cnt - 1.0)) : 0.0;
    const double sampling = std::min(0.02, 3.0 * var_se);
    report.entries.push_back(make_entry("var_length_normalized", var, var_se,
                                        c.game_length_variance, sampling, 0.02 - sampling));

    report.entries.push_back(mean_entry(
        "mean_lucky", accumulate(records, [](const TrialRecord& r) { return double(r.lucky); }),
        c.lucky_mean, 0.01));
  }

  report.entries.push_back(mean_entry(
      "mean_first_match_scaled",
      accumulate(records, [&](const TrialRecord& r) { return r.first_match / (2.0 * root_n); }),
      c.weibull2_mean, 0.02));
  report.entries.push_back(mean_entry(
      "mean_even_blocks_over_n",
      accumulate(records, [&](const TrialRecord& r) { return r.even_blocks / n; }),
      c.even_block_mean_rate, 0.01));
  report.entries.push_back(mean_entry(
      "mean_good_intervals_over_n",
      accumulate(records, [&](const TrialRecord& r) { return double(r.good_intervals) / n; }),
      c.good_interval_rate, 0.01));
  for (std::size_t i = 0; i < plan.block_k; ++i) {
    report.entries.push_back(mean_entry(
        "mean_block_fraction_" + std::to_string(i + 1),
        accumulate(records, [&](const TrialRecord& r) { return r.block_counts[i] / n; }),
        limits::NamedConstants::block_rate(static_cast<std::int64_t>(i + 1)), 0.01));
  }
  return report;
}

Report run_trials(const TrialPlan& plan) { return summarize(plan, run_records(plan)); }

}  // namespace chordstat::harness
