#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chordstat/acceptance.hpp"
#include "chordstat/deal.hpp"
#include "chordstat/game.hpp"
#include "chordstat/harness.hpp"
#include "chordstat/pagraph.hpp"
#include "chordstat/urn.hpp"

// Serialization to JSON and CSV text. Rationals are written as
// {"num": "...", "den": "..."} strings so no precision is lost.
namespace chordstat::io {

/// Parses "1,2,1,2", "1 2 1 2" or a JSON array into a validated deal.
Deal parse_deal(const std::string& text);

std::string deal_json(const Deal& deal);
std::string game_json(const Deal& deal, const GameRecord& record);

std::string report_json(const harness::Report& report);
std::string report_csv(const harness::Report& report);

/// Exact law of D_{n,1}, its mean/variance and E[B_{n,i}] for every i.
std::string exact_json(std::size_t n);
std::string exact_csv(std::size_t n);

/// Every standard deal of size n with its game statistics.
std::string enumerate_json(std::size_t n, std::size_t cap);
std::string enumerate_csv(std::size_t n, std::size_t cap);

std::string urn_state_json(const urn::UrnState& state);

std::string graph_json(const graph::PAGraph& g);
/// degree,count rows.
std::string degree_histogram_csv(const graph::PAGraph& g);

/// Named constants and the leading k x k covariance block.
std::string constants_json(std::size_t k);

std::string acceptance_json(const std::vector<acceptance::CriterionResult>& results);

}  // namespace chordstat::io
