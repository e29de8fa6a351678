#pragma once

#include <optional>
#include <vector>

#include "tetra/families.hpp"
#include "tetra/graph.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

// Orientable map as a rotation system on darts. R turns a dart to the next one
// counterclockwise at its vertex, L reverses it. Faces are orbits of F = L then R,
// so d = (A->B) is followed by F(d) = (B->C) along a face.
class RotaryMap {
 public:
  // Throws ConstructionError unless L is a fixed-point-free involution and
  // <R, L> is transitive.
  RotaryMap(Perm R, Perm L);
  // Darts of g in Graph::darts() order; rotation[v] lists the neighbors of v counterclockwise.
  static RotaryMap from_rotation_system(const Graph& g, const std::vector<std::vector<int>>& rotation);

  std::size_t darts() const { return R_.degree(); }
  const Perm& R() const { return R_; }
  const Perm& L() const { return L_; }
  const Perm& F() const { return F_; }

  // Orbit indices, numbered by smallest dart.
  int vertex_of(std::size_t d) const { return vertex_[d]; }
  int edge_of(std::size_t d) const { return edge_[d]; }
  int face_of(std::size_t d) const { return face_[d]; }
  int vertices() const { return nv_; }
  int edges() const { return ne_; }
  int faces() const { return nf_; }
  int euler_characteristic() const { return nv_ - ne_ + nf_; }
  std::size_t canonical_dart(int edge) const { return edge_rep_[edge]; }  // smallest dart of the edge

  // Same darts and L, faces become vertices with rotation F^-1, keeping the orientation.
  RotaryMap dual() const;

 private:
  Perm R_, L_, F_;
  std::vector<int> vertex_, edge_, face_;
  std::vector<std::size_t> edge_rep_;
  int nv_ = 0, ne_ = 0, nf_ = 0;
};

// {4,4}_{b,c}, {4,4}_<b,c>, {4,4}_[b,c]. Dart 4v + k points east, north, west, south for k = 0..3,
// v numbered as in toroidal(). Loops and parallel edges are allowed here.
RotaryMap torus_map(TorusKind kind, int b, int c);

enum class MapSymmetry { reflexible, chiral, not_rotary };
MapSymmetry map_symmetry_type(const RotaryMap& m);
// Number of dart permutations commuting with R and L.
std::size_t orientation_preserving_automorphisms(const RotaryMap& m);

// Dart bijection with psi R = R' psi (or R'^-1 psi when reflect) and psi L = L' psi.
std::optional<std::vector<std::size_t>> map_isomorphism(const RotaryMap& a, const RotaryMap& b, bool reflect);
enum class SelfDuality { none, orientation_preserving, reflection_only };
SelfDuality self_duality(const RotaryMap& m);

// Skeleton; throws DegenerateParameters on loops or parallel edges.
Graph underlying_graph(const RotaryMap& m);
// Vertex = edge index; joined when consecutive along a face.
Graph medial_graph(const RotaryMap& m);
// Vertex = dart; d ~ F(d) and L(F(d)) ~ L(d).
Graph map_dart_graph(const RotaryMap& m);
// {A_i, B_j} on edge e with canonical dart A->B sits at 4e + 2i + j; {A_i,B_j} ~ {B_j,C_(1-i)}
// for A, B, C consecutive along a face.
Graph map_hill_capping(const RotaryMap& m);
// Black X's first (vertex by vertex, X_k pairs corners k and k + q/2), then white edges.
// Needs every vertex of even degree.
Graph xi_graph(const RotaryMap& m);

}  // namespace tetra
