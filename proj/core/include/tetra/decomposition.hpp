#pragma once

#include <utility>
#include <vector>

#include "tetra/graph.hpp"

namespace tetra {

enum CycleColor : int { red = 0, green = 1 };

// Edge-disjoint cycles covering every edge, two through each vertex.
class CycleDecomposition {
 public:
  // Cycles are closed vertex sequences without the repeated endpoint. Colors are
  // empty or one per cycle; throws ConstructionError when malformed.
  CycleDecomposition(Graph base, std::vector<std::vector<int>> cycles, std::vector<int> colors = {});

  const Graph& base() const { return base_; }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  const std::vector<int>& colors() const { return colors_; }
  bool colored() const { return !colors_.empty(); }

  int cycle_of_edge(std::size_t edge_index) const { return edge_cycle_[edge_index]; }
  const std::vector<int>& edge_cycles() const { return edge_cycle_; }
  std::pair<int, int> cycles_at(int v) const { return at_[v]; }  // smaller index first
  int other_cycle(int v, int c) const { return at_[v].first == c ? at_[v].second : at_[v].first; }
  // Cycle-index per edge, or color per edge when colored.
  std::vector<int> edge_labels(bool by_color) const;

 private:
  Graph base_;
  std::vector<std::vector<int>> cycles_;
  std::vector<int> colors_;
  std::vector<int> edge_cycle_;
  std::vector<std::pair<int, int>> at_;
};

// Each color class must be 2-regular; its components become the cycles of that color.
CycleDecomposition decomposition_from_edge_colors(const Graph& g, const std::vector<int>& edge_colors);

}  // namespace tetra
