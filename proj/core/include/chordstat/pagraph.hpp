#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "chordstat/deal.hpp"
#include "chordstat/rng.hpp"

namespace chordstat::graph {

/// Loopy multigraph built from a chord diagram. Vertices are 0-based.
struct PAGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  ///< (u, v), u <= v
  std::vector<std::uint32_t> degree;                           ///< loops count twice
};

/// Scans points 1..2n left to right and closes a vertex at every right
/// endpoint, so each vertex owns a maximal run of points ending at a right
/// endpoint. Every chord becomes an edge between the owners of its endpoints.
PAGraph build_graph(const ChordDiagram& diagram);

/// Degree per vertex, loops counting 2.
std::vector<std::uint32_t> degrees(const PAGraph& g);

/// Random graph on n vertices grown by sequential insertion: a new vertex
/// attaches to an existing one with probability proportional to its degree,
/// or to itself with probability 1/(2k-1).
PAGraph sample_pa_graph(std::size_t n, RngStream& rng);

}  // namespace chordstat::graph
