#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tetra/derived.hpp"
#include "tetra/group_coset.hpp"
#include "tetra/symmetry.hpp"

using namespace tetra;

namespace {

Graph k4() { return circulant(4, {1, 2}); }
Graph k33() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e.emplace_back(i, 3 + j);
  return build_graph(6, e);
}
Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + i);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return build_graph(10, e);
}

struct Orbits {
  std::size_t v, e, d;
};
Orbits orbits(const Graph& g) {
  AutResult a = automorphism_group(g);
  return {a.vertex_orbits.size(), a.edge_orbits.size(), a.dart_orbits.size()};
}

// Checks that f is a local bijection from g onto h with fibers of size k.
bool is_k_cover(const Graph& g, const Graph& h, const std::vector<int>& f, int k) {
  std::vector<int> fiber(h.order(), 0);
  for (int x : f) ++fiber[x];
  for (int c : fiber)
    if (c != k) return false;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> img;
    for (int w : g.neighbors(v)) img.push_back(f[w]);
    std::sort(img.begin(), img.end());
    if (img != h.neighbors(f[v])) return false;
  }
  return true;
}

// Dart orbits of the pairing-preserving subgroup, by brute force over all automorphisms.
std::size_t brute_pairing_dart_orbits(const EdgePairing& p) {
  const Graph& g = p.base;
  DartIndexer idx(g);
  auto edges = g.edges();
  std::vector<std::vector<int>> keep;
  for (const auto& a : oracle::all_automorphisms(g)) {
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      auto img = idx.edge(a[edges[e].u], a[edges[e].v]);
      const auto& f = edges[p.kappa[e]];
      ok = idx.edge(a[f.u], a[f.v]) == static_cast<std::size_t>(p.kappa[img]);
    }
    if (ok) keep.push_back(a);
  }
  auto darts = g.darts();
  std::set<std::size_t> seen;
  std::size_t count = 0;
  for (std::size_t d = 0; d < darts.size(); ++d) {
    if (seen.count(d)) continue;
    ++count;
    for (const auto& a : keep) seen.insert(idx.dart(a[darts[d].tail], a[darts[d].head]));
  }
  return count;
}

}  // namespace

TEST(Derived, SubdivisionAndSmooth) {
  Graph k5 = sporadic(Sporadic::k5);
  EXPECT_EQ(subdivision(k5).order(), 15);
  Graph c6 = circulant(6, {1});
  EXPECT_TRUE(are_isomorphic(smooth(subdivision(c6)), c6));
  Graph s = subdivision(wreath(5, 2));
  EXPECT_EQ(s.order(), 30);
  std::set<int> deg;
  for (int v = 0; v < s.order(); ++v) deg.insert(s.degree(v));
  EXPECT_EQ(deg, (std::set<int>{2, 4}));
  for (const Graph& g : {k5, wreath(6, 2), praeger_xu(4, 2), petersen(), toroidal(TorusKind::rot, 3, 2)})
    EXPECT_EQ(smooth(subdivision(g)), g);
  // A triangle with one subdivided edge smooths back to the triangle; a bare triangle cannot be smoothed.
  EXPECT_THROW(smooth(circulant(3, {1})), DegenerateParameters);
}

TEST(Derived, Sdd) {
  Graph f = sdd(sporadic(Sporadic::k5));
  EXPECT_EQ(f.order(), 20);
  EXPECT_TRUE(is_regular_of_valence(f, 4));
  EXPECT_TRUE(bipartition(f).has_value());
  Orbits o = orbits(f);
  EXPECT_EQ(o.v, 2u);
  EXPECT_EQ(o.e, 1u);
  EXPECT_TRUE(is_unworthy(f).has_value());
  Graph w = sdd(wreath(5, 2));
  EXPECT_EQ(w.order(), 40);
  EXPECT_TRUE(bipartition(w).has_value());
  EXPECT_THROW(sdd(petersen()), ParameterError);
}

TEST(Derived, LineGraphs) {
  EXPECT_TRUE(are_isomorphic(line_graph(k4()), sporadic(Sporadic::octahedron)));
  EXPECT_TRUE(are_isomorphic(line_graph(circulant(5, {1})), circulant(5, {1})));
  Graph l = line_graph(k33());
  EXPECT_EQ(l.order(), 9);
  EXPECT_TRUE(is_regular_of_valence(l, 4));
  EXPECT_EQ(orbits(line_graph(petersen())).d, 1u);  // Petersen is 2-arc-transitive
}

TEST(Derived, DartGraphs) {
  for (const Graph& g : {k4(), k33(), petersen(), circulant(8, {1, 4})}) {
    Graph d = dart_graph(g);
    EXPECT_EQ(d.order(), 2 * static_cast<int>(g.size()));
    EXPECT_TRUE(is_regular_of_valence(d, 4));
    // The dart (a,b) lies over the edge {a,b}.
    DartIndexer idx(g);
    std::vector<int> f;
    for (const auto& x : g.darts()) f.push_back(static_cast<int>(idx.edge(x.tail, x.head)));
    EXPECT_TRUE(is_k_cover(d, line_graph(g), f, 2));
    EXPECT_EQ(is_double_cover(d, line_graph(g)).found, Tri::yes);
  }
  // On a triangle the darts split into the two directed 3-cycles.
  Graph c3 = dart_graph(circulant(3, {1}));
  EXPECT_EQ(c3.order(), 6);
  EXPECT_FALSE(is_connected(c3));
  EXPECT_EQ(girth(c3), 3);
}

TEST(Derived, HillCapping) {
  for (const Graph& g : {k4(), k33(), petersen()}) {
    Graph h = hill_capping(g);
    EXPECT_EQ(h.order(), 4 * static_cast<int>(g.size()));
    EXPECT_TRUE(is_regular_of_valence(h, 4));
    std::vector<int> f(h.order());
    for (int v = 0; v < h.order(); ++v) f[v] = v / 4;
    EXPECT_TRUE(is_k_cover(h, line_graph(g), f, 4));
  }
  // The bit sums of {A_i, B_j} alternate along edges, so HC is bipartite. For
  // non-bipartite K4 nothing exchanges the two classes: edge-transitive with two
  // vertex orbits. (No 4-valent half-arc-transitive graph has fewer than 27 vertices.)
  Orbits a = orbits(hill_capping(k4()));
  EXPECT_EQ(a.v, 2u);
  EXPECT_EQ(a.e, 1u);
  EXPECT_TRUE(bipartition(hill_capping(k4())).has_value());
  EXPECT_EQ(orbits(hill_capping(k33())).d, 1u);  // bipartite, 2-arc-transitive
  // Bipartite and 1-arc-regular (26 vertices, |Aut| = 78): vertex- and edge-transitive, two dart orbits.
  std::vector<std::pair<int, int>> e26;
  for (int i = 0; i < 13; ++i)
    for (int c : {0, 1, 4}) e26.emplace_back(i, 13 + (i + c) % 13);
  Graph f26 = build_graph(26, e26);
  ASSERT_EQ(automorphism_group(f26).order(), 78);
  Orbits b = orbits(hill_capping(f26));
  EXPECT_EQ(b.v, 1u);
  EXPECT_EQ(b.e, 1u);
  EXPECT_EQ(b.d, 2u);
  EXPECT_THROW(hill_capping(sporadic(Sporadic::k5)), ParameterError);
}

TEST(Derived, ThreeArcGraphs) {
  Graph t = three_arc_graph(k4());
  EXPECT_EQ(t.order(), 12);
  EXPECT_TRUE(is_regular_of_valence(t, 4));
  Graph t33 = three_arc_graph(k33());
  EXPECT_EQ(t33.order(), 18);
  EXPECT_TRUE(is_regular_of_valence(t33, 4));
  Graph tp = three_arc_graph(petersen());
  EXPECT_EQ(tp.order(), 30);
  EXPECT_EQ(orbits(tp).d, 1u);
}

TEST(Derived, SeparatedBoxProduct) {
  for (int n = 3; n <= 6; ++n) {
    Orientation d = doubled_cycle(n);
    OrientedGraph p = sep_box_product(d, d);
    EXPECT_EQ(p.graph.order(), 2 * n * n);
    EXPECT_TRUE(is_regular_of_valence(p.graph, 4));
    EXPECT_TRUE(p.orientation->in_out_valence(2));
    EXPECT_EQ(orbits(p.graph).d, 1u) << n;
  }
  OrientedGraph ps = spidergraph(3, 7, 2, false);
  OrientedGraph big = sep_box_product(*ps.orientation, *ps.orientation);
  EXPECT_EQ(big.graph.order(), 882);
  EXPECT_TRUE(is_regular_of_valence(big.graph, 4));
  EXPECT_THROW(sep_box_product(Orientation(3, {{0, 1}, {1, 2}, {2, 0}}), doubled_cycle(3)), ParameterError);
}

TEST(Derived, PairingAutomorphisms) {
  // Opposite edges of a hexagon.
  Graph c6 = circulant(6, {1});
  EdgePairing opp = EdgePairing::from_pairs(c6, {{{0, 1}, {3, 4}}, {{1, 2}, {4, 5}}, {{2, 3}, {0, 5}}});
  EXPECT_TRUE(pairing_is_dart_transitive(opp));
  EXPECT_EQ(brute_pairing_dart_orbits(opp), 1u);

  Graph k5 = sporadic(Sporadic::k5);
  EdgePairing broken = EdgePairing::from_pairs(
      k5, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 4}}, {{0, 4}, {2, 4}}, {{1, 2}, {3, 4}}});
  EXPECT_FALSE(pairing_is_dart_transitive(broken));
  EXPECT_EQ(dart_orbits(k5, pairing_automorphisms(broken).generators()).size(), brute_pairing_dart_orbits(broken));

  // W(6,2): each edge {(i,r),(i+1,s)} with the edge three steps around the rim.
  Graph w = wreath(6, 2);
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s)
        pairs.push_back({{i * 2 + r, (i + 1) % 6 * 2 + s}, {(i + 3) * 2 + r, (i + 4) % 6 * 2 + s}});
  EdgePairing anti = EdgePairing::from_pairs(w, pairs);
  EXPECT_EQ(pairing_is_dart_transitive(anti), brute_pairing_dart_orbits(anti) == 1);
  EXPECT_EQ(dart_orbits(w, pairing_automorphisms(anti).generators()).size(), brute_pairing_dart_orbits(anti));

  EXPECT_THROW(EdgePairing(c6, {1, 0, 3, 2, 5, 5}), ParameterError);
}

TEST(Derived, Bgcg) {
  Graph w = wreath(5, 2);
  // A_i = (i,0), B_i = (i,1): pair A_iA_{i+1} with B_iB_{i+1} and A_iB_{i+1} with B_iA_{i+1}.
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  for (int i = 0; i < 5; ++i) {
    int a = 2 * i, b = 2 * i + 1, a1 = 2 * ((i + 1) % 5), b1 = a1 + 1;
    pairs.push_back({{a, a1}, {b, b1}});
    pairs.push_back({{a, b1}, {b, a1}});
  }
  EdgePairing p = EdgePairing::from_pairs(w, pairs);
  Graph g1 = bgcg(p, Connection::K1());
  EXPECT_EQ(g1.order(), 10 + 10);
  EXPECT_TRUE(is_regular_of_valence(g1, 4));
  Graph g2 = bgcg(p, Connection::K2());
  EXPECT_EQ(g2.order(), 2 * 10 + 20);
  EXPECT_TRUE(is_regular_of_valence(g2, 4));

  DartIndexer idx(w);
  std::vector<int> col(w.size());
  for (int i = 0; i < 5; ++i) {
    int a = 2 * i, b = 2 * i + 1, a1 = 2 * ((i + 1) % 5), b1 = a1 + 1;
    col[idx.edge(a, a1)] = red;
    col[idx.edge(b, b1)] = green;
    col[idx.edge(a, b1)] = red;
    col[idx.edge(b, a1)] = green;
  }
  Graph g3 = bgcg(p, Connection::Cyc(3), col);
  EXPECT_EQ(g3.order(), 3 * (10 + 10));
  EXPECT_TRUE(is_regular_of_valence(g3, 4));
  Graph g4 = bgcg(p, Connection::Cyc(4), col, true);
  EXPECT_EQ(g4.order(), 4 * (10 + 10));
  EXPECT_THROW(bgcg(p, Connection::Cyc(3), col, true), ParameterError);
  std::vector<int> mono(w.size(), red);
  EXPECT_THROW(bgcg(p, Connection::Cyc(3), mono), ParameterError);
  EXPECT_THROW(bgcg(p, Connection::Cyc(3)), ParameterError);

  // Pairing two edges at a common vertex merges into a double edge under K1.
  std::vector<std::pair<EdgeId, EdgeId>> bad;
  for (int i = 0; i < 5; ++i) {
    int a = 2 * i, b = 2 * i + 1, a1 = 2 * ((i + 1) % 5), b1 = a1 + 1;
    bad.push_back({{a, a1}, {a, b1}});
    bad.push_back({{b, a1}, {b, b1}});
  }
  EXPECT_THROW(bgcg(EdgePairing::from_pairs(w, bad), Connection::K1()), DegenerateParameters);
}
