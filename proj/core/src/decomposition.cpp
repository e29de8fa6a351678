#include "tetra/decomposition.hpp"

#include <string>

namespace tetra {

CycleDecomposition::CycleDecomposition(Graph base, std::vector<std::vector<int>> cycles, std::vector<int> colors)
    : base_(std::move(base)), cycles_(std::move(cycles)), colors_(std::move(colors)) {
  const int n = base_.order();
  DartIndexer idx(base_);
  edge_cycle_.assign(base_.size(), -1);
  at_.assign(n, {-1, -1});
  if (!colors_.empty() && colors_.size() != cycles_.size())
    throw ConstructionError("cycle decomposition: one color per cycle required");
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    const auto& cyc = cycles_[c];
    if (cyc.size() < 3) throw ConstructionError("cycle decomposition: cycle shorter than 3");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (u < 0 || u >= n || v < 0 || v >= n || !base_.adjacent(u, v))
        throw ConstructionError("cycle decomposition: consecutive vertices not adjacent");
      std::size_t e = idx.edge(u, v);
      if (edge_cycle_[e] >= 0) throw ConstructionError("cycle decomposition: edge on two cycles");
      edge_cycle_[e] = static_cast<int>(c);
      auto& slot = at_[u];
      if (slot.first == static_cast<int>(c) || slot.second == static_cast<int>(c))
        throw ConstructionError("cycle decomposition: cycle revisits vertex " + std::to_string(u));
      if (slot.first < 0)
        slot.first = static_cast<int>(c);
      else if (slot.second < 0)
        slot.second = static_cast<int>(c);
      else
        throw ConstructionError("cycle decomposition: vertex " + std::to_string(u) + " on more than two cycles");
    }
  }
  for (int e : edge_cycle_)
    if (e < 0) throw ConstructionError("cycle decomposition: edge not covered");
  for (int v = 0; v < n; ++v) {
    auto& s = at_[v];
    if (s.second < 0) throw ConstructionError("cycle decomposition: vertex " + std::to_string(v) + " on one cycle");
    if (s.first > s.second) std::swap(s.first, s.second);
    if (!colors_.empty() && colors_[s.first] == colors_[s.second])
      throw ConstructionError("cycle decomposition: both cycles at a vertex share a color");
  }
}

std::vector<int> CycleDecomposition::edge_labels(bool by_color) const {
  if (!by_color) return edge_cycle_;
  std::vector<int> out(edge_cycle_.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = colors_.at(edge_cycle_[e]);
  return out;
}

CycleDecomposition decomposition_from_edge_colors(const Graph& g, const std::vector<int>& edge_colors) {
  auto edges = g.edges();
  if (edge_colors.size() != edges.size()) throw ConstructionError("one color per edge required");
  const int n = g.order();
  // Per vertex and color, the two incident neighbors.
  std::vector<std::vector<std::vector<int>>> nb(2, std::vector<std::vector<int>>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int c = edge_colors[i];
    if (c != 0 && c != 1) throw ConstructionError("edge colors must be 0 or 1");
    nb[c][edges[i].u].push_back(edges[i].v);
    nb[c][edges[i].v].push_back(edges[i].u);
  }
  std::vector<std::vector<int>> cycles;
  std::vector<int> colors;
  for (int c = 0; c < 2; ++c) {
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (nb[c][s].size() != 2) throw ConstructionError("color class is not 2-regular");
      if (seen[s]) continue;
      std::vector<int> cyc{s};
      seen[s] = 1;
      int prev = s, cur = nb[c][s][0];
      while (cur != s) {
        cyc.push_back(cur);
        seen[cur] = 1;
        int next = nb[c][cur][0] == prev ? nb[c][cur][1] : nb[c][cur][0];
        prev = cur;
        cur = next;
      }
      cycles.push_back(std::move(cyc));
      colors.push_back(c);
    }
  }
  return CycleDecomposition(g, std::move(cycles), std::move(colors));
}

}  // namespace tetra
