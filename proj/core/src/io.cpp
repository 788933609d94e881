#include "chordstat/io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "chordstat/exact.hpp"
#include "chordstat/limits.hpp"
#include "chordstat/sampler.hpp"
#include "json.hpp"

namespace chordstat::io {
namespace {

using nlohmann::json;

json rational(const BigRational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

json entry_json(const harness::ReportEntry& e) {
  return {{"name", e.name},
          {"estimate", e.estimate},
          {"std_error", e.std_error},
          {"target", e.target},
          {"sampling_tolerance", e.sampling_tolerance},
          {"bias_tolerance", e.bias_tolerance},
          {"tolerance", e.tolerance},
          {"pass", e.pass}};
}

json game_row(const Deal& d) {
  const GameStats g = play(d);
  return {{"deal", std::vector<Label>(d.labels().begin(), d.labels().end())},
          {"length", g.length},
          {"lucky", g.lucky},
          {"first_match", g.first_match}};
}

}  // namespace

Deal parse_deal(const std::string& text) {
  std::vector<Label> labels;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (const auto& v : json::parse(text)) labels.push_back(v.get<Label>());
  } else {
    std::string cleaned = text;
    for (char& c : cleaned) {
      if (c == ',') c = ' ';
    }
    std::istringstream is(cleaned);
    long long x;
    while (is >> x) {
      if (x < 1) throw std::invalid_argument("deal labels must be positive");
      labels.push_back(static_cast<Label>(x));
    }
    if (!is.eof()) throw std::invalid_argument("deal: unparsable token");
  }
  return Deal(std::move(labels));
}

std::string deal_json(const Deal& deal) {
  return dump({{"n", deal.pairs()},
               {"labels", std::vector<Label>(deal.labels().begin(), deal.labels().end())}});
}

std::string game_json(const Deal& deal, const GameRecord& record) {
  json moves = json::array();
  for (const Move& m : record.trace) {
    json mv = {{"round", m.round}, {"flipped", m.flipped}, {"lucky", m.lucky}};
    mv["removed"] = m.removed ? json(*m.removed) : json(nullptr);
    moves.push_back(std::move(mv));
  }
  return dump({{"deal", std::vector<Label>(deal.labels().begin(), deal.labels().end())},
               {"length", record.stats.length},
               {"lucky", record.stats.lucky},
               {"first_match", record.stats.first_match},
               {"moves", std::move(moves)}});
}

std::string report_json(const harness::Report& report) {
  const auto& p = report.plan;
  json entries = json::array();
  for (const auto& e : report.entries) entries.push_back(entry_json(e));
  return dump({{"plan",
                {{"n", p.n},
                 {"trials", p.trials},
                 {"seed", p.seed},
                 {"sampler", p.sampler == harness::SamplerKind::insertion ? "insertion" : "shuffle"},
                 {"block_k", p.block_k}}},
               {"entries", std::move(entries)},
               {"all_pass", report.all_pass()}});
}

std::string report_csv(const harness::Report& report) {
  std::string out = "name,estimate,std_error,target,sampling_tolerance,bias_tolerance,tolerance,pass\n";
  for (const auto& e : report.entries) {
    out += e.name + "," + csv_number(e.estimate) + "," + csv_number(e.std_error) + "," +
           csv_number(e.target) + "," + csv_number(e.sampling_tolerance) + "," +
           csv_number(e.bias_tolerance) + "," + csv_number(e.tolerance) + "," +
           (e.pass ? "true" : "false") + "\n";
  }
  return out;
}

std::string exact_json(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  json law = json::array();
  for (std::int64_t t = 2; t <= nn + 1; ++t) {
    law.push_back({{"t", t}, {"p", rational(exact::p_first_match(nn, t))}});
  }
  json blocks_mean = json::array();
  for (std::int64_t i = 1; i <= nn + 1; ++i) {
    blocks_mean.push_back({{"i", i},
                           {"mean", rational(exact::mean_B_exact(nn, i))},
                           {"leading_term", exact::mean_B_asymptotic(nn, i)}});
  }
  return dump({{"n", n},
               {"first_match_law", std::move(law)},
               {"first_match_mean", rational(exact::mean_D1(nn))},
               {"first_match_variance", rational(exact::var_D1(nn))},
               {"block_count_means", std::move(blocks_mean)}});
}

std::string exact_csv(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  std::string out = "t,p_num,p_den,p\n";
  for (std::int64_t t = 2; t <= nn + 1; ++t) {
    const BigRational p = exact::p_first_match(nn, t);
    out += std::to_string(t) + "," + p.get_num().get_str() + "," + p.get_den().get_str() + "," +
           csv_number(to_double(p)) + "\n";
  }
  return out;
}

std::string enumerate_json(std::size_t n, std::size_t cap) {
  json rows = json::array();
  StandardDealStream stream(n, cap);
  while (stream.next()) rows.push_back(game_row(stream.current()));
  return dump({{"n", n}, {"count", rows.size()}, {"deals", std::move(rows)}});
}

std::string enumerate_csv(std::size_t n, std::size_t cap) {
  std::string out = "deal,length,lucky,first_match\n";
  StandardDealStream stream(n, cap);
  while (stream.next()) {
    const Deal& d = stream.current();
    const GameStats g = play(d);
    std::string labels;
    for (Label x : d.labels()) labels += (labels.empty() ? "" : " ") + std::to_string(x);
    out += labels + "," + std::to_string(g.length) + "," + std::to_string(g.lucky) + "," +
           std::to_string(g.first_match) + "\n";
  }
  return out;
}

std::string urn_state_json(const urn::UrnState& state) {
  return dump({{"draws", state.draws}, {"counts", state.counts}});
}

std::string graph_json(const graph::PAGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return dump({{"degrees", graph::degrees(g)}, {"edges", std::move(edges)}});
}

std::string degree_histogram_csv(const graph::PAGraph& g) {
  std::map<std::uint32_t, std::size_t> hist;
  for (auto d : graph::degrees(g)) ++hist[d];
  std::string out = "degree,count\n";
  for (const auto& [d, c] : hist) out += std::to_string(d) + "," + std::to_string(c) + "\n";
  return out;
}

std::string constants_json(std::size_t k) {
  const auto c = limits::named_constants();
  json rates = json::array();
  for (std::int64_t i = 1; i <= 10; ++i) rates.push_back(limits::NamedConstants::block_rate(i));
  const auto sigma = limits::sigma_matrix(k);
  json rows = json::array();
  for (std::size_t r = 0; r < k; ++r) {
    rows.push_back(std::vector<double>(sigma.begin() + static_cast<std::ptrdiff_t>(r * k),
                                       sigma.begin() + static_cast<std::ptrdiff_t>((r + 1) * k)));
  }
  return dump({{"even_block_mean_rate", c.even_block_mean_rate},
               {"game_length_rate", c.game_length_rate},
               {"good_interval_rate", c.good_interval_rate},
               {"sigma_sq", c.sigma_sq},
               {"game_length_variance", c.game_length_variance},
               {"sigma_sq_from_covariance", c.sigma_sq_from_covariance},
               {"game_length_variance_from_covariance", c.game_length_variance_from_covariance},
               {"weibull2_mean", c.weibull2_mean},
               {"lucky_mean", c.lucky_mean},
               {"block_rate", std::move(rates)},
               {"sigma", std::move(rows)}});
}

std::string acceptance_json(const std::vector<acceptance::CriterionResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    arr.push_back({{"id", r.id},
                   {"description", r.description},
                   {"measured", r.measured},
                   {"target", r.target},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass},
                   {"informational", r.informational},
                   {"detail", r.detail}});
  }
  return dump({{"criteria", std::move(arr)}, {"all_pass", acceptance::all_pass(results)}});
}

}  // namespace chordstat::io
