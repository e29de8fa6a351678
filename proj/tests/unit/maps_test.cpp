#include <gtest/gtest.h>

#include "tetra/derived.hpp"
#include "tetra/group_coset.hpp"
#include "tetra/lr.hpp"
#include "tetra/maps.hpp"
#include "tetra/symmetry.hpp"

using namespace tetra;

namespace {

// Any rotation system of K4 with Euler characteristic 2.
RotaryMap tetrahedron() {
  Graph k4 = circulant(4, {1, 2});
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<int>> rot(4);
    for (int v = 0; v < 4; ++v) {
      rot[v] = k4.neighbors(v);
      if (mask >> v & 1) std::swap(rot[v][1], rot[v][2]);
    }
    RotaryMap m = RotaryMap::from_rotation_system(k4, rot);
    if (m.euler_characteristic() == 2) return m;
  }
  throw std::logic_error("no planar rotation of K4");
}

// Rotary iff the monodromy group <R, L> is regular on darts.
bool monodromy_regular(const RotaryMap& m) {
  PermGroup g(m.darts(), {m.R(), m.L()});
  return g.order() == m.darts();
}

std::vector<int> projection(const RotaryMap& m, bool darts) {
  std::vector<int> f;
  if (darts) {
    for (std::size_t d = 0; d < m.darts(); ++d) f.push_back(m.edge_of(d));
  } else {
    for (int v = 0; v < 4 * m.edges(); ++v) f.push_back(v / 4);
  }
  return f;
}

}  // namespace

TEST(Maps, TorusMapCounts) {
  auto m = torus_map(TorusKind::rot, 3, 2);
  EXPECT_EQ(m.vertices(), 13);
  EXPECT_EQ(m.edges(), 26);
  EXPECT_EQ(m.faces(), 13);
  EXPECT_EQ(torus_map(TorusKind::angle, 3, 1).faces(), 8);
  EXPECT_EQ(torus_map(TorusKind::bracket, 3, 2).faces(), 12);
  for (int b = 1; b <= 6; ++b)
    for (int c = 0; c <= b; ++c) {
      EXPECT_EQ(torus_map(TorusKind::rot, b, c).euler_characteristic(), 0);
      if (b > c) EXPECT_EQ(torus_map(TorusKind::angle, b, c).euler_characteristic(), 0);
      if (c >= 1) EXPECT_EQ(torus_map(TorusKind::bracket, b, c).euler_characteristic(), 0);
    }
  EXPECT_THROW(torus_map(TorusKind::rot, 0, 0), ParameterError);
  EXPECT_THROW(RotaryMap(Perm::identity(4), Perm::identity(4)), ConstructionError);
}

TEST(Maps, UnderlyingGraphs) {
  for (int b = 1; b <= 5; ++b)
    for (int c = 0; c <= b; ++c) {
      auto m = torus_map(TorusKind::rot, b, c);
      Graph g;
      try {
        g = toroidal(TorusKind::rot, b, c);
      } catch (const DegenerateParameters&) {
        EXPECT_THROW(underlying_graph(m), DegenerateParameters) << b << "," << c;
        continue;
      }
      EXPECT_TRUE(are_isomorphic(underlying_graph(m), g)) << b << "," << c;
    }
  EXPECT_TRUE(are_isomorphic(underlying_graph(torus_map(TorusKind::bracket, 3, 2)), toroidal(TorusKind::bracket, 3, 2)));
  EXPECT_THROW(underlying_graph(torus_map(TorusKind::bracket, 3, 1)), DegenerateParameters);
  EXPECT_TRUE(are_isomorphic(underlying_graph(tetrahedron()), circulant(4, {1, 2})));
}

TEST(Maps, SymmetryTypes) {
  EXPECT_EQ(map_symmetry_type(torus_map(TorusKind::rot, 3, 0)), MapSymmetry::reflexible);
  EXPECT_EQ(map_symmetry_type(torus_map(TorusKind::rot, 3, 2)), MapSymmetry::chiral);
  EXPECT_EQ(map_symmetry_type(torus_map(TorusKind::rot, 2, 2)), MapSymmetry::reflexible);
  EXPECT_EQ(map_symmetry_type(tetrahedron()), MapSymmetry::reflexible);
  for (int b = 2; b <= 6; ++b) {
    EXPECT_EQ(map_symmetry_type(torus_map(TorusKind::rot, b, 0)), MapSymmetry::reflexible);
    EXPECT_EQ(map_symmetry_type(torus_map(TorusKind::rot, b, b)), MapSymmetry::reflexible);
    for (int c = 1; c < b; ++c) EXPECT_EQ(map_symmetry_type(torus_map(TorusKind::rot, b, c)), MapSymmetry::chiral);
  }
  // Rotary agrees with regularity of the monodromy group.
  for (auto kind : {TorusKind::rot, TorusKind::angle, TorusKind::bracket})
    for (int b = 2; b <= 5; ++b)
      for (int c = 1; c < b; ++c) {
        auto m = torus_map(kind, b, c);
        EXPECT_EQ(map_symmetry_type(m) != MapSymmetry::not_rotary, monodromy_regular(m));
      }
}

TEST(Maps, Duality) {
  auto t = tetrahedron();
  EXPECT_EQ(t.dual().vertices(), t.faces());
  EXPECT_NE(self_duality(t), SelfDuality::none);
  auto m = torus_map(TorusKind::rot, 3, 2);
  EXPECT_TRUE(map_isomorphism(m, m.dual().dual(), false).has_value());
  EXPECT_EQ(self_duality(m), SelfDuality::orientation_preserving);
}

TEST(Maps, MedialGraphs) {
  EXPECT_EQ(medial_graph(torus_map(TorusKind::rot, 3, 2)).order(), 26);
  EXPECT_TRUE(are_isomorphic(medial_graph(tetrahedron()), sporadic(Sporadic::octahedron)));
  // Corners at a torus vertex join horizontal to vertical edges, as in PL.
  for (int b = 2; b <= 5; ++b)
    for (int c = 1; c < b; ++c) {
      Graph mg = medial_graph(torus_map(TorusKind::rot, b, c));
      EXPECT_TRUE(are_isomorphic(mg, partial_line_graph(torus_decomposition(TorusKind::rot, b, c))));
      EXPECT_EQ(automorphism_group(mg).edge_orbits.size(), 1u);
    }
}

TEST(Maps, DartGraphsAndCapping) {
  auto t = tetrahedron();
  Graph dg = map_dart_graph(t);
  EXPECT_EQ(dg.order(), 12);
  EXPECT_TRUE(is_regular_of_valence(dg, 4));
  EXPECT_EQ(is_double_cover(dg, sporadic(Sporadic::octahedron)).found, Tri::yes);
  Graph hc = map_hill_capping(t);
  EXPECT_EQ(hc.order(), 24);
  EXPECT_TRUE(verify_cover(hc, medial_graph(t), projection(t, false), 4));

  auto m = torus_map(TorusKind::rot, 3, 2);
  Graph mg = medial_graph(m);
  Graph dg2 = map_dart_graph(m);
  EXPECT_EQ(dg2.order(), 52);
  EXPECT_TRUE(verify_double_cover(dg2, mg, projection(m, true)));
  EXPECT_EQ(is_double_cover(dg2, mg).found, Tri::yes);
  Graph hc2 = map_hill_capping(m);
  EXPECT_EQ(hc2.order(), 104);
  EXPECT_TRUE(verify_cover(hc2, mg, projection(m, false), 4));
  EXPECT_EQ(is_cover(hc2, mg, 4).found, Tri::yes);
}

TEST(Maps, XiGraphs) {
  auto m = torus_map(TorusKind::rot, 3, 2);
  Graph xi = xi_graph(m);
  EXPECT_EQ(xi.order(), 52);
  EXPECT_EQ(bipartition(xi).has_value(), true);
  for (int v = 0; v < xi.order(); ++v) EXPECT_EQ(xi.degree(v), 4);
  EXPECT_THROW(xi_graph(tetrahedron()), ParameterError);
  for (int b = 2; b <= 5; ++b)
    for (int c : {0, b}) {
      auto r = torus_map(TorusKind::rot, b, c);
      ASSERT_EQ(map_symmetry_type(r), MapSymmetry::reflexible);
      EXPECT_EQ(automorphism_group(xi_graph(r)).edge_orbits.size(), 1u) << b << "," << c;
    }
}

TEST(Maps, CoverSearchFold) {
  // C_12 over C_3 is a 4-fold cover; C_12 over C_4 is 3-fold.
  EXPECT_EQ(is_cover(circulant(12, {1}), circulant(3, {1}), 4).found, Tri::yes);
  EXPECT_EQ(is_cover(circulant(12, {1}), circulant(4, {1}), 3).found, Tri::yes);
  EXPECT_EQ(is_cover(circulant(12, {1}), circulant(4, {1}), 2).found, Tri::no);
}
