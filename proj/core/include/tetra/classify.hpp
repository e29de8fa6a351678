#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetra/graph.hpp"
#include "tetra/permgroup.hpp"
#include "tetra/symmetry.hpp"

namespace tetra {

enum class SymmetryClass { dart_transitive, half_arc_transitive, semisymmetric, bi_transitive, lr, none, unclassified };
std::string to_string(SymmetryClass c);  // "dart-transitive", "half-arc-transitive", "semisymmetric", ...

// Orbit of directed consistent cycles; a cycle not equivalent to its reverse
// gives two orbits.
struct ConsistentCycleOrbit {
  int length = 0;                // cycle length
  BigInt cycles;                 // number of directed cycles in the orbit
  std::vector<int> representative;
};
struct ConsistentCycles {
  bool complete = true;  // false when a budget tripped; orbits found so far are kept
  std::vector<ConsistentCycleOrbit> orbits;
  std::vector<int> lengths() const;  // sorted
  // Orbits whose representative runs along the orientation.
  std::size_t count_along(const Orientation& o) const;
};

struct ClassifyOptions {
  SearchOptions search{};
  bool consistent_cycles = true;  // for dart- and half-arc-transitive graphs
  BigInt cycle_group_limit = BigInt(1'000'000'000'000LL);  // skip the cycle search above this |Aut|
  std::uint64_t cycle_budget = 200'000;                      // transporter calls
  bool lr = true;
  bool orientation = true;          // dart orbit of a half-arc-transitive graph
  bool orientation_search = false;  // subgroup search for dart-transitive graphs
};

struct SymmetryReport {
  SymmetryClass tag = SymmetryClass::unclassified;
  BigInt aut_order;
  BigInt vertex_stabilizer_order;
  std::size_t vertex_orbits = 0, edge_orbits = 0, dart_orbits = 0;
  bool bipartite = false;
  bool worthy = true;
  std::optional<Orientation> semitransitive_orientation;
  std::optional<ConsistentCycles> consistent_cycles;  // absent when skipped
  // Directed orbits, except that half-arc-transitive graphs count only cycles
  // along the invariant orientation. 0 when skipped.
  std::size_t consistent_cycle_orbits = 0;
  std::string note;                                   // why the result is partial or unclassified
};

// Needs a connected graph. Engine budget failures give tag `unclassified`.
SymmetryReport classify(const Graph& g, const ClassifyOptions& opt = {});

// Orbits of directed consistent cycles under the group, found by tracing shunts.
ConsistentCycles consistent_cycles(const Graph& g, const PermGroup& group, std::uint64_t budget = 200'000);
ConsistentCycles consistent_cycles(const Graph& g, std::uint64_t budget = 200'000);

// Is the digraph's automorphism group transitive on its vertices and darts?
bool is_semitransitive(const Orientation& o, const SearchOptions& opt = {});
// An orientation one of whose automorphism subgroups acts transitively on
// vertices and darts. Tries a dart orbit of Aut(g), then the candidates, then
// dart orbits of subgroups generated by pairs of pseudo-random elements.
std::optional<Orientation> semitransitive_orientation(const Graph& g, const std::vector<Orientation>& candidates = {},
                                                      const SearchOptions& opt = {});

struct BiTransitivity {
  bool value = false;
  std::string reason;  // set when value is false
};
// Color-preserving subgroup of a bipartite graph transitive on edges.
BiTransitivity bi_transitive_check(const Graph& g, const SearchOptions& opt = {});

// Largest s <= max_s with Aut(g) transitive on s-arcs; -1 when not vertex-transitive.
int arc_transitivity(const Graph& g, int max_s = 3, const SearchOptions& opt = {});

}  // namespace tetra
