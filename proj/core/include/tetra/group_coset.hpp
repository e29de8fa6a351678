#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tetra/graph.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

// Element x^v z^zeta a^k b^m of G_t^eps. Bit i of v is the exponent of x_i.
struct GtElement {
  std::uint32_t v = 0;
  int zeta = 0;
  int ak = 0;  // mod 2t
  int bm = 0;
  int epsilon = 0;
  int t = 2;
  bool operator==(const GtElement&) const = default;
};

class GtGroup {
 public:
  GtGroup(int t, int epsilon);  // 2 <= t <= 8
  int t() const { return t_; }
  int epsilon() const { return eps_; }
  std::size_t order() const { return std::size_t(t_) << (2 * t_ + 3); }

  GtElement identity() const { return {0, 0, 0, 0, eps_, t_}; }
  GtElement x(int i) const;
  GtElement z() const;
  GtElement a() const;
  GtElement b() const;

  // Normal forms are numbered ((v*2 + zeta)*2t + k)*2 + m.
  std::size_t index(const GtElement& g) const;
  GtElement element(std::size_t idx) const;

 private:
  int t_, eps_;
};

GtElement gt_multiply(const GtElement& p, const GtElement& q);
GtElement gt_inverse(const GtElement& p);
GtElement gt_power(const GtElement& p, long long k);

// A finite group given by its elements 0..count-1.
struct CosetGraphSpec {
  std::size_t count = 0;
  std::function<std::size_t(std::size_t, std::size_t)> multiply;
  std::function<bool(std::size_t)> in_h;
  std::size_t a = 0;
};

struct CosetGraph {
  Graph graph;
  std::vector<int> coset_of;  // element -> vertex; vertices ordered by smallest element
  // Instances {Hg, Hag} per distinct edge; unequal counts or counts above |H|
  // mean the multigraph had parallel edges.
  std::size_t min_instances = 0, max_instances = 0;
  bool had_loops = false;
};

// Cos(G, H, a): vertices Hg, edges {Hg, Hag}.
CosetGraph coset_graph(const CosetGraphSpec& spec);

// PPM(t, eps) = Cos(G_t^eps, <x_0..x_{t-1}, b>, a).
Graph ppm(int t, int epsilon);

struct CoverResult {
  Tri found = Tri::unknown;
  std::vector<int> map;  // cover vertex -> base vertex when found
};
// Searches for a 2-to-1 map that is a bijection on every neighborhood.
CoverResult is_double_cover(const Graph& cover, const Graph& base, std::uint64_t node_budget = 5'000'000);
bool verify_double_cover(const Graph& cover, const Graph& base, const std::vector<int>& map);
// The same for fold-to-1 maps.
CoverResult is_cover(const Graph& cover, const Graph& base, int fold, std::uint64_t node_budget = 5'000'000);
bool verify_cover(const Graph& cover, const Graph& base, const std::vector<int>& map, int fold);

}  // namespace tetra
