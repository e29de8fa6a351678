#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetra/graph.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
  // Vertices with index >= primary are auxiliary gadget vertices. The search
  // individualizes primary vertices first, so the returned base restricts cleanly.
  int primary = -1;  // -1: all vertices are primary
};

inline constexpr std::uint8_t kCertificateVersion = 1;

struct CanonicalForm {
  Perm relabeling;          // vertex v -> canonical label relabeling(v)
  std::string certificate;  // versioned canonical edge-list bytes
  std::uint64_t hash = 0;   // FNV-1a of certificate
};

struct AutResult {
  PermGroup group;  // on vertices
  std::vector<std::vector<Point>> vertex_orbits;
  std::vector<std::vector<std::size_t>> edge_orbits;  // indices into Graph::edges()
  std::vector<std::vector<std::size_t>> dart_orbits;  // indices into Graph::darts()
  BigInt order() const { return group.order(); }
};

// Color-preserving automorphism group (vertex colors respected when present).
AutResult automorphism_group(const Graph& g, const SearchOptions& opt = {});
CanonicalForm canonical_form(const Graph& g, const SearchOptions& opt = {});
bool are_isomorphic(const Graph& a, const Graph& b, const SearchOptions& opt = {});

// Both at once: the group is restricted to primary vertices when opt.primary is set.
struct SymmetryData {
  PermGroup group;
  CanonicalForm canon;
  std::uint64_t nodes = 0;
};
SymmetryData analyze(const Graph& g, const SearchOptions& opt = {});

// Two distinct vertices with identical neighborhoods, smallest pair first.
std::optional<std::pair<int, int>> is_unworthy(const Graph& g);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

// Gadgets reducing colored structures to vertex-colored graphs. Original
// vertices keep indices 0..n-1; gadget vertices follow.
//
// Edge colors: every edge gets a midpoint whose color encodes the edge color.
Graph edge_color_gadget(const Graph& g, const std::vector<int>& edge_colors);
// Digraphs: each dart u->v becomes a path u - t - h - v with distinct colors for t and h.
Graph digraph_gadget(const Orientation& d);

// Automorphisms of g preserving the given edge coloring, acting on vertices of g.
PermGroup edge_color_automorphisms(const Graph& g, const std::vector<int>& edge_colors, const SearchOptions& opt = {});
// Automorphisms of a digraph (color-free), acting on its vertices.
PermGroup digraph_automorphisms(const Orientation& d, const SearchOptions& opt = {});

}  // namespace tetra
