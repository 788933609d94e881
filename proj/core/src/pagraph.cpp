#include "chordstat/pagraph.hpp"

#include <algorithm>

#include "chordstat/sampler.hpp"

namespace chordstat::graph {

PAGraph build_graph(const ChordDiagram& diagram) {
  const std::size_t n = diagram.chords();
  std::vector<bool> is_right(2 * n + 1, false);
  for (const Chord& c : diagram.pairs()) is_right[c.right] = true;

  std::vector<std::uint32_t> owner(2 * n + 1, 0);
  std::uint32_t vertex = 0;
  for (std::size_t p = 1; p <= 2 * n; ++p) {
    owner[p] = vertex;
    if (is_right[p]) ++vertex;
  }

  PAGraph g;
  g.vertices = n;
  g.degree.assign(n, 0);
  g.edges.reserve(n);
  for (const Chord& c : diagram.pairs()) {
    const std::uint32_t u = owner[c.left], v = owner[c.right];
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
    ++g.degree[u];
    ++g.degree[v];
  }
  return g;
}

std::vector<std::uint32_t> degrees(const PAGraph& g) {
  std::vector<std::uint32_t> d(g.vertices, 0);
  for (const auto& [u, v] : g.edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

PAGraph sample_pa_graph(std::size_t n, RngStream& rng) {
  return build_graph(chords_from_deal(sample_deal_insertion(n, rng).deal));
}

}  // namespace chordstat::graph
