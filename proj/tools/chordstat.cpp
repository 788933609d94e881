#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chordstat/acceptance.hpp"
#include "chordstat/game.hpp"
#include "chordstat/harness.hpp"
#include "chordstat/io.hpp"
#include "chordstat/pagraph.hpp"
#include "chordstat/sampler.hpp"
#include "chordstat/urn.hpp"

namespace {

using namespace chordstat;

struct Common {
  std::size_t n = 16;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--n", c.n, "Number of pairs")->check(CLI::PositiveNumber);
  app->add_option("--trials", c.trials, "Number of independent trials")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Base seed");
  app->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--out", c.out, "Output path (default: stdout)");
}

void write(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open " + c.out);
  f << text;
}

std::string urn_report(const Common& c, const std::string& kind) {
  std::ostringstream os;
  if (kind == "counts") {
    RngStream rng(c.seed, 0);
    return io::urn_state_json(urn::urn_simulate(c.n, rng));
  }
  if (kind == "fluctuations") {
    // Columns: trial, type, normalized fluctuation (count - 4n/(i+2)_3)/sqrt(n).
    os << "trial,type,fluctuation\n";
    const double n = static_cast<double>(c.n);
    for (std::uint64_t t = 0; t < c.trials; ++t) {
      RngStream rng(c.seed, t);
      const auto s = urn::urn_simulate(c.n, rng);
      for (std::size_t i = 1; i <= 4; ++i) {
        const double lead = 4.0 * n / (double(i) * (i + 1) * (i + 2));
        os << t << ',' << i << ',' << (static_cast<double>(s.count(i)) - lead) / std::sqrt(n) << '\n';
      }
    }
    return os.str();
  }
  // coupling: drive the urn with insertion types and compare against the deal's blocks.
  std::uint64_t mismatches = 0;
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    RngStream rng(c.seed, t);
    const auto sample = sample_deal_insertion(c.n, rng);
    urn::Urn u;
    for (auto type : sample.trace.drawn_types) u.apply(type);
    const auto profile = blocks(sample.deal);
    for (std::size_t i = 1; i < profile.counts.size(); ++i) {
      if (u.state().count(i) != profile.count(i)) ++mismatches;
    }
  }
  os << "{\n  \"trials\": " << c.trials << ",\n  \"n\": " << c.n << ",\n  \"mismatches\": " << mismatches
     << "\n}\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Memory-game statistics: simulation, exact laws and limit checks"};
  app.require_subcommand(1);

  Common sim, ex, en, ur, gr, ver, con, pl;
  std::string sampler = "insertion";
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo report for one plan");
  add_common(simulate, sim);
  simulate->add_option("--sampler", sampler, "Deal sampler")->check(CLI::IsMember({"insertion", "shuffle"}));

  auto* exact_cmd = app.add_subcommand("exact", "Exact law of the first match and block means");
  add_common(exact_cmd, ex);

  std::size_t cap = harness::enumeration_cap();
  auto* enumerate = app.add_subcommand("enumerate", "Every standard deal with its game statistics");
  add_common(enumerate, en);
  enumerate->add_option("--cap", cap, "Largest n allowed");

  std::string urn_kind = "counts";
  auto* urn_cmd = app.add_subcommand("urn", "Urn with immigration");
  add_common(urn_cmd, ur);
  urn_cmd->add_option("--report", urn_kind, "Report kind")
      ->check(CLI::IsMember({"counts", "fluctuations", "coupling"}));

  std::string histogram;
  auto* graph_cmd = app.add_subcommand("graph", "Preferential-attachment graph from a random diagram");
  add_common(graph_cmd, gr);
  graph_cmd->add_option("--histogram", histogram, "Also write a degree histogram CSV here");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite; nonzero exit on failure");
  add_common(verify, ver);

  std::size_t sigma_k = 4;
  auto* constants = app.add_subcommand("constants", "Named constants and covariance block");
  add_common(constants, con);
  constants->add_option("--k", sigma_k, "Size of the covariance block")->check(CLI::PositiveNumber);

  std::string deal_text;
  auto* play_cmd = app.add_subcommand("play", "Play one deal and print the move trace");
  add_common(play_cmd, pl);
  play_cmd->add_option("--deal", deal_text, "Labels, e.g. 1,2,1,2 (default: random deal of size n)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      harness::TrialPlan plan{sim.n, sim.trials, sim.seed, sim.threads};
      plan.sampler = sampler == "shuffle" ? harness::SamplerKind::shuffle : harness::SamplerKind::insertion;
      const auto report = harness::run_trials(plan);
      write(sim, sim.format == "csv" ? io::report_csv(report) : io::report_json(report));
      return 0;
    }
    if (*exact_cmd) {
      write(ex, ex.format == "csv" ? io::exact_csv(ex.n) : io::exact_json(ex.n));
      return 0;
    }
    if (*enumerate) {
      write(en, en.format == "csv" ? io::enumerate_csv(en.n, cap) : io::enumerate_json(en.n, cap));
      return 0;
    }
    if (*urn_cmd) {
      write(ur, urn_report(ur, urn_kind));
      return 0;
    }
    if (*graph_cmd) {
      RngStream rng(gr.seed, 0);
      const auto g = graph::sample_pa_graph(gr.n, rng);
      write(gr, gr.format == "csv" ? io::degree_histogram_csv(g) : io::graph_json(g));
      if (!histogram.empty()) {
        std::ofstream(histogram) << io::degree_histogram_csv(g);
      }
      return 0;
    }
    if (*verify) {
      acceptance::Options opts{ver.seed, ver.threads};
      const auto results = acceptance::run_all(opts, [](const acceptance::CriterionResult& r) {
        std::cerr << acceptance::format_line(r) << '\n';
      });
      if (ver.format == "json") write(ver, io::acceptance_json(results));
      return acceptance::all_pass(results) ? 0 : 1;
    }
    if (*constants) {
      write(con, io::constants_json(sigma_k));
      return 0;
    }
    if (*play_cmd) {
      RngStream rng(pl.seed, 0);
      const Deal deal = deal_text.empty() ? sample_deal_shuffle(pl.n, rng) : io::parse_deal(deal_text);
      write(pl, io::game_json(deal, play_with_trace(deal)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "chordstat: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
