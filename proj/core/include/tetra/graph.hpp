#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tetra {

// Error hierarchy shared by every module.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstructionError : Error {
  using Error::Error;
};
// Raised when a family's raw edge rule would produce loops or parallel edges.
struct DegenerateParameters : Error {
  using Error::Error;
};
struct ParameterError : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};
// A search or enumeration exceeded its configured budget.
struct ResourceLimit : Error {
  using Error::Error;
};
struct UndefinedValue : Error {
  using Error::Error;
};

struct EdgeId {
  int u = 0;  // min endpoint
  int v = 0;  // max endpoint
  EdgeId() = default;
  EdgeId(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const EdgeId&) const = default;
};

struct Dart {
  int tail = 0;
  int head = 0;
  auto operator<=>(const Dart&) const = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const;  // edge count
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;

  // Edges sorted lexicographically.
  std::vector<EdgeId> edges() const;
  // Darts ordered by tail, then by head; DartIndexer agrees with this order.
  std::vector<Dart> darts() const;
  std::size_t dart_count() const { return 2 * size(); }

  bool has_colors() const { return !colors_.empty(); }
  const std::vector<int>& colors() const { return colors_; }
  Graph with_colors(std::vector<int> colors) const;
  Graph without_colors() const;

  // Relabel: vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  // Trusted constructor: lists must already be sorted, symmetric and loop-free.
  static Graph from_sorted_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    return g;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_ && colors_ == o.colors_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> colors_;
};

// Dense indices for darts and edges, matching Graph::darts() and Graph::edges().
class DartIndexer {
 public:
  explicit DartIndexer(const Graph& g);
  std::size_t dart(int tail, int head) const;
  std::size_t edge(int u, int v) const;  // either endpoint order
  std::size_t darts() const { return offset_.back(); }

 private:
  const Graph* g_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> edge_of_dart_;
};

// Deduplicating builder: repeated edges collapse; loops and bad indices throw.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
// Strict builder for family constructors: repeated edges throw DegenerateParameters.
Graph build_simple_graph(int n, const std::vector<std::pair<int, int>>& edges);

bool is_regular_of_valence(const Graph& g, int d);
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);
bool is_connected(const Graph& g);

struct Component {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside the component
  std::vector<int> new_to_old;
};
Component connected_component(const Graph& g, int v);

// Throws UndefinedValue for acyclic graphs.
int girth(const Graph& g);
// Throws UndefinedValue for disconnected graphs.
int diameter(const Graph& g);

std::string encode_g6(const Graph& g);
Graph decode_g6(std::string_view text);

// Digraph on n vertices. Darts form a multiset so that doubled cycles
// (both directions, or parallel copies) can be represented.
class Orientation {
 public:
  Orientation() = default;
  Orientation(int n, std::vector<Dart> darts);
  // One dart per edge of base; throws ConstructionError otherwise.
  static Orientation of_graph(const Graph& base, std::vector<Dart> darts);

  int order() const { return n_; }
  const std::vector<Dart>& darts() const { return darts_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  int out_valence(int v) const { return static_cast<int>(out_[v].size()); }
  int in_valence(int v) const { return static_cast<int>(in_[v].size()); }
  bool has_dart(int u, int v) const;
  bool is_simple() const;
  bool in_out_valence(int d) const;
  Orientation reversed() const;
  // Underlying simple graph; throws DegenerateParameters on parallel/antiparallel darts.
  Graph underlying() const;

 private:
  int n_ = 0;
  std::vector<Dart> darts_;
  std::vector<std::vector<int>> out_, in_;
};

// Directed cycle with every edge doubled in both directions.
Orientation doubled_cycle(int n);

}  // namespace tetra
