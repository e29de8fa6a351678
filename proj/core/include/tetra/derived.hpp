#pragma once

#include <optional>
#include <vector>

#include "tetra/decomposition.hpp"
#include "tetra/families.hpp"
#include "tetra/graph.hpp"

namespace tetra {

// Original vertices keep their indices; the vertex on edge i is n + i.
Graph subdivision(const Graph& g);
// Suppresses a greedy independent set of degree-2 vertices, taken in descending
// index order, so smooth(subdivision(g)) recovers g. Loops or parallel edges
// throw DegenerateParameters.
Graph smooth(const Graph& g);

// Tetravalent input. Black v_i at 2v + i, white edge e at 2|V| + e.
Graph sdd(const Graph& g);
Graph line_graph(const Graph& g);  // vertex = edge index
// Vertices are darts in Graph::darts() order; (a,b) ~ (b,c) for c != a.
Graph dart_graph(const Graph& g);
// {A_i, B_j} for edge {A < B} sits at 4e + 2i + j.
Graph hill_capping(const Graph& g);
// Vertices are darts; (a,b) ~ (c,d) when [b,a,c,d] is a 3-arc.
Graph three_arc_graph(const Graph& g);

// Vertices are edges of the base; e ~ f when they meet in different cycles.
Graph partial_line_graph(const CycleDecomposition& cd);

// Vertex (a, x, s) -> (a * |V2| + x) * 2 + s. Both inputs need in/out-valence 2.
OrientedGraph sep_box_product(const Orientation& d1, const Orientation& d2);

// Fixed-point-free involution on edge indices.
struct EdgePairing {
  Graph base;
  std::vector<int> kappa;
  EdgePairing(Graph g, std::vector<int> k);  // throws ParameterError unless valid
  static EdgePairing from_pairs(Graph g, const std::vector<std::pair<EdgeId, EdgeId>>& pairs);
};

struct Connection {
  enum Kind { k1, k2, cyc } kind = k1;
  int k = 1;  // copies for cyc
  static Connection K1() { return {k1, 1}; }
  static Connection K2() { return {k2, 2}; }
  static Connection Cyc(int k) { return {cyc, k}; }
};

// Black (copy, v) at copy*|V| + v; merged white vertices follow in order of first use.
// coloring: one CycleColor per edge, required for Cyc(k).
Graph bgcg(const EdgePairing& p, Connection c, const std::vector<int>& coloring = {}, bool primed = false);

// Subgroup of Aut(base) preserving the pairing, restricted to base vertices.
PermGroup pairing_automorphisms(const EdgePairing& p);
bool pairing_is_dart_transitive(const EdgePairing& p);

}  // namespace tetra
