#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "tetra/families.hpp"
#include "tetra/names.hpp"
#include "tetra/symmetry.hpp"

using namespace tetra;

namespace {

bool iso(const Graph& a, const Graph& b) { return are_isomorphic(a, b); }

std::size_t edge_orbit_count(const Graph& g) { return automorphism_group(g).edge_orbits.size(); }

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return build_graph(a + b, e);
}

// Lattice membership by Cramer's rule, independent of the normal form code.
bool in_lattice(std::array<long long, 2> u, std::array<long long, 2> v, long long x, long long y) {
  long long det = u[0] * v[1] - u[1] * v[0];
  long long p = x * v[1] - y * v[0], q = u[0] * y - u[1] * x;
  return p % det == 0 && q % det == 0;
}

// Size of the component of 0 computed by a plain BFS over the edge rule of PS.
int ps_component_size(int k, int n, int r) {
  std::set<std::pair<int, int>> seen{{0, 0}};
  std::vector<std::pair<int, int>> q{{0, 0}};
  for (std::size_t h = 0; h < q.size(); ++h) {
    auto [i, j] = q[h];
    long long ri = 1, rim = 1;
    for (int s = 0; s < i; ++s) ri = ri * r % n;
    for (int s = 0; s < (i + k - 1) % k; ++s) rim = rim * r % n;
    std::vector<std::pair<int, int>> nb{{(i + 1) % k, static_cast<int>((j + ri) % n)},
                                        {(i + 1) % k, static_cast<int>(((j - ri) % n + n) % n)},
                                        {(i + k - 1) % k, static_cast<int>((j + rim) % n)},
                                        {(i + k - 1) % k, static_cast<int>(((j - rim) % n + n) % n)}};
    for (auto p : nb)
      if (seen.insert(p).second) q.push_back(p);
  }
  return static_cast<int>(q.size());
}

}  // namespace

TEST(Families, Wreath) {
  Graph w = wreath(7, 2);
  EXPECT_EQ(w.order(), 14);
  EXPECT_EQ(w.size(), 28u);
  EXPECT_TRUE(is_regular_of_valence(w, 4));
  EXPECT_TRUE(iso(wreath(4, 2), complete_bipartite(4, 4)));
  EXPECT_TRUE(iso(wreath(5, 1), circulant(5, {1})));
  EXPECT_THROW(wreath(2, 2), ParameterError);
}

TEST(Families, Circulant) {
  Graph c = circulant(10, {1, 3});
  EXPECT_EQ(c.order(), 10);
  EXPECT_EQ(c.size(), 20u);
  EXPECT_TRUE(iso(circulant(10, {1, 6}), wreath(5, 2)));
  EXPECT_TRUE(iso(circulant(5, {1, 2}), sporadic(Sporadic::k5)));
  EXPECT_EQ(circulant(8, {1, 4}).degree(0), 3);  // the n/2 jump adds one
  EXPECT_THROW(circulant(8, {1, 7}), DegenerateParameters);
  EXPECT_THROW(circulant(8, {0, 3}), DegenerateParameters);
}

TEST(Families, LatticeNormalForm) {
  EXPECT_EQ(lattice_normal_form({5, 0}, {2, 1}), (LatticeForm{5, 2, 1}));
  EXPECT_EQ(lattice_normal_form({1, 0}, {0, 1}), (LatticeForm{1, 0, 1}));
  LatticeForm f = lattice_normal_form({3, 2}, {-2, 3});
  EXPECT_EQ(f.r * f.t, 13);
  EXPECT_THROW(lattice_normal_form({1, 2}, {2, 4}), ParameterError);
  for (auto [u, v] : std::vector<std::pair<std::array<long long, 2>, std::array<long long, 2>>>{
           {{3, 2}, {-2, 3}}, {{4, 1}, {1, 4}}, {{3, 3}, {-2, 2}}, {{6, -4}, {2, 5}}, {{0, 3}, {5, 1}}}) {
    LatticeForm n = lattice_normal_form(u, v);
    EXPECT_GT(n.r, 0);
    EXPECT_GT(n.t, 0);
    EXPECT_GE(n.s, 0);
    EXPECT_LT(n.s, n.r);
    for (long long x = -20; x <= 20; ++x)
      for (long long y = -20; y <= 20; ++y)
        ASSERT_EQ(in_lattice(u, v, x, y), in_lattice({n.r, 0}, {n.s, n.t}, x, y)) << x << "," << y;
  }
}

TEST(Families, ToroidalCounts) {
  EXPECT_EQ(toroidal(TorusKind::rot, 3, 2).order(), 13);
  EXPECT_EQ(toroidal(TorusKind::angle, 3, 1).order(), 8);
  EXPECT_EQ(toroidal(TorusKind::bracket, 3, 2).order(), 12);
  for (int b = 1; b <= 6; ++b)
    for (int c = 0; c <= b; ++c) {
      if (b * b + c * c >= 5) {
        Graph g = toroidal(TorusKind::rot, b, c);
        EXPECT_EQ(g.order(), b * b + c * c);
        EXPECT_TRUE(is_regular_of_valence(g, 4));
      }
      if (b - 1 > c && b * b - c * c > 4) EXPECT_EQ(toroidal(TorusKind::angle, b, c).order(), b * b - c * c);
      if (c > 1) EXPECT_EQ(toroidal(TorusKind::bracket, b, c).order(), 2 * b * c);
    }
  EXPECT_THROW(toroidal(TorusKind::angle, 3, 2), DegenerateParameters);
  EXPECT_THROW(toroidal(TorusKind::bracket, 3, 1), DegenerateParameters);
  EXPECT_THROW(toroidal(TorusKind::angle, 2, 3), ParameterError);
  // Coprime b, c gives the circulant C_r(1,s).
  EXPECT_TRUE(iso(toroidal(TorusKind::rot, 3, 2), circulant(13, {1, 5})));
}

TEST(Families, DepletedWreath) {
  EXPECT_TRUE(iso(depleted_wreath(7), circulant(21, {1, 8})));
  EXPECT_TRUE(iso(depleted_wreath(5), circulant(15, {1, 4})));
  EXPECT_TRUE(iso(depleted_wreath(6), toroidal(TorusKind::bracket, 3, 3)));
  EXPECT_TRUE(iso(depleted_wreath(4), toroidal(TorusKind::bracket, 2, 3)));
  EXPECT_TRUE(iso(toroidal(TorusKind::bracket, 2, 3), toroidal(TorusKind::bracket, 3, 2)));
  EXPECT_TRUE(iso(depleted_wreath(7), toroidal(TorusKind::angle, 5, 2)));
}

TEST(Families, Spidergraphs) {
  OrientedGraph s = spidergraph(3, 7, 2, false);
  EXPECT_EQ(s.graph.order(), 21);
  EXPECT_TRUE(s.orientation->in_out_valence(2));
  EXPECT_EQ(automorphism_group(s.graph).dart_orbits.size(), 1u);

  EXPECT_EQ(power_mod(2, 3, 9), 8);
  OrientedGraph p = spidergraph(3, 9, 2, false);
  EXPECT_EQ(p.graph.order(), ps_component_size(3, 9, 2));
  EXPECT_EQ(p.graph.order(), 27);
  EXPECT_TRUE(is_regular_of_valence(p.graph, 4));

  EXPECT_THROW(spidergraph(3, 8, 3, true), ParameterError);
  EXPECT_THROW(spidergraph(3, 7, 1, false), ParameterError);
  // A cut example: PS(4,10;3) has 3^4 = 81 = 1 mod 10; the walk sums keep parity classes apart.
  OrientedGraph cut = spidergraph(4, 10, 3, false);
  EXPECT_EQ(cut.graph.order(), ps_component_size(4, 10, 3));
  EXPECT_TRUE(is_connected(cut.graph));
}

TEST(Families, XeMatchesSpidergraphs) {
  // 1+5+25+125 = 156 = 12 mod 24: t = 6 makes s = 0 mod 24, t = 0 makes s = 12 mod 24.
  XeGraph a = xe_graph(4, 12, 5, 6);
  EXPECT_EQ(a.match, XeMatch::ps);
  EXPECT_TRUE(iso(a.graph, spidergraph(4, 24, 5, false).graph));
  XeGraph b = xe_graph(4, 12, 5, 0);
  EXPECT_EQ(b.match, XeMatch::mps);
  EXPECT_TRUE(iso(b.graph, spidergraph(4, 24, 5, true).graph));
  EXPECT_EQ(xe_graph(4, 4, 1, 0).match, XeMatch::neither);
  EXPECT_THROW(xe_graph(4, 12, 5, 1), ParameterError);
}

TEST(Families, Attebery) {
  AtteberyGraph ps = attebery(AbelianGroup{{7}}, {{2}}, 3, {1}, {-1}, true);
  EXPECT_TRUE(iso(ps.graph, spidergraph(3, 7, 2, false).graph));
  EXPECT_TRUE(ps.conditions.kernel);
  for (int a = 0; a < 7; ++a) EXPECT_TRUE(attebery_conditions(AbelianGroup{{7}}, {{3}}, 6, {a}, {-a}).kernel);

  AtteberyGraph gp = attebery(AbelianGroup{{3, 3}}, {{0, 1}, {1, 0}}, 2, {1, 0}, {-1, 0}, false);
  EXPECT_EQ(gp.graph.order(), 18);
  EXPECT_TRUE(gp.simple);

  try {
    attebery(AbelianGroup{{7}}, {{3}}, 3, {1}, {2}, true);  // 3^3 = -1, so a_3 = -1
    FAIL();
  } catch (const AtteberyConditionError& e) {
    EXPECT_EQ(e.condition, 1);
  }
}

TEST(Families, Amc) {
  AtteberyGraph g = amc(4, 12, {{1, -4}, {4, 1}});
  EXPECT_EQ(g.graph.order(), 4 * 144);
  EXPECT_TRUE(is_regular_of_valence(g.graph, 4));
  EXPECT_FALSE(g.conditions.closes);  // M^4 != +-I, as noted for this example

  AtteberyGraph d = amc(3, 2, {{1, 0}, {0, 1}});
  EXPECT_EQ(d.graph.order(), 12);
  EXPECT_FALSE(d.simple);  // a = b mod 2

  // [[0,1],[-1,0]]^4 = I, so {a_4, b_4} = {a, b}.
  EXPECT_TRUE(amc(4, 5, {{0, 1}, {-1, 0}}).conditions.closes);
}

TEST(Families, Cpm) {
  EXPECT_EQ(cpm(3, 2, 1, 1).graph.order(), 18);
  EXPECT_EQ(cpm(4, 2, 1, 1).graph.order(), 16);
  EXPECT_THROW(cpm(6, 2, 1, 2), ParameterError);
  for (int n : {3, 4, 5, 6})
    for (int t : {1, 2, 3})
      for (int s : {2, 3}) {
        if (cpm_predicted_order(n, s, t) > 1500) continue;
        OrientedGraph g = cpm(n, s, t, 1);
        EXPECT_EQ(g.graph.order(), cpm_predicted_order(n, s, t)) << n << " " << s << " " << t;
        EXPECT_TRUE(g.orientation->in_out_valence(2));
      }
  // s = 1: the first and second PS parameters trade places.
  EXPECT_TRUE(iso(cpm(7, 1, 3, 2).graph, spidergraph(3, 7, 2, false).graph));
}

TEST(Families, RoseWindows) {
  EXPECT_EQ(rose_window(12, 2, 5).order(), 24);
  EXPECT_TRUE(iso(rose_window(6, 2, 1), wreath(6, 2)));
  EXPECT_TRUE(iso(rose_window(10, 7, 6), praeger_xu(5, 2)));
  EXPECT_EQ(edge_orbit_count(rose_window(12, 2, 5)), 1u);
  EXPECT_THROW(rose_window(6, 0, 1), DegenerateParameters);
  EXPECT_THROW(rose_window(6, 2, 3), DegenerateParameters);
}

TEST(Families, Bicirculants) {
  EXPECT_EQ(edge_orbit_count(bicirculant(7, 0, 1, 2, 4)), 1u);
  EXPECT_EQ(edge_orbit_count(bicirculant(13, 0, 1, 3, 9)), 1u);
  EXPECT_EQ(edge_orbit_count(bicirculant(14, 0, 1, 4, 6)), 1u);
  EXPECT_THROW(bicirculant(3, 0, 1, 2, 2), ParameterError);
}

TEST(Families, Propellors) {
  Graph p = propellor(5, 1, 1, 2, 2);
  EXPECT_EQ(p.order(), 15);
  EXPECT_EQ(edge_orbit_count(p), 1u);
  EXPECT_EQ(9 % 8, 1);
  EXPECT_EQ(edge_orbit_count(propellor(8, 1, 6, 2, 3)), 1u);
  EXPECT_EQ(edge_orbit_count(propellor(10, 2, 3, 1, 4)), 1u);
  EXPECT_THROW(propellor(5, 0, 1, 2, 2), DegenerateParameters);
}

TEST(Families, Metacirculants) {
  EXPECT_EQ(edge_orbit_count(msy(5, 11, 5, 0).graph), 1u);
  EXPECT_TRUE(msy(3, 9, 4, 3).metacirculant);
  EXPECT_TRUE(msy(3, 5, 1, 0).metacirculant);
  EXPECT_FALSE(msy(3, 9, 2, 3).metacirculant);

  // k = m/2 with r^k = -1 mod n: the two k-edges at a vertex coincide, leaving valence 3.
  Graph z = msz(4, 5, 2, 2);
  EXPECT_EQ(z.order(), 20);
  EXPECT_TRUE(is_regular_of_valence(z, 3));
  EXPECT_TRUE(is_regular_of_valence(msz(4, 5, 2, 1), 4));
  EXPECT_TRUE(is_regular_of_valence(msz(6, 7, 2, 3), 4));
  EXPECT_EQ(msz(4, 5, 1, 1).order(), 20);

  // Quotient of MSZ(6,7;2,3) by j -> j+1 is the circulant C_6(1,2).
  Graph z2 = msz(6, 7, 2, 3);
  std::vector<Point> rho(42);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 7; ++j) rho[i * 7 + j] = static_cast<Point>(i * 7 + (j + 1) % 7);
  VoltageDiagram d = diagram_quotient(z2, Perm(rho));
  EXPECT_EQ(d.nodes, 6);
  std::vector<std::pair<int, int>> ne;
  for (const auto& a : d.arcs) ne.emplace_back(a.from, a.to);
  EXPECT_TRUE(iso(build_graph(6, ne), circulant(6, {1, 2})));

  Metacirculant m = mc3(4, 4, 1, 3, 1, 2, 1);
  EXPECT_TRUE(m.metacirculant);
  EXPECT_TRUE(is_regular_of_valence(m.graph, 4));
  EXPECT_TRUE(is_regular_of_valence(mc3(4, 4, 1, -1, 1, 0, 1).graph, 4));
  EXPECT_THROW(mc3(4, 2, 1, -1, 1, 0, 1), DegenerateParameters);
  EXPECT_THROW(mc3(5, 4, 1, -1, 1, 0, 1), ParameterError);
}

TEST(Families, PraegerXu) {
  EXPECT_TRUE(iso(praeger_xu(5, 1), wreath(5, 2)));
  EXPECT_EQ(praeger_xu(4, 2).order(), 16);
  EXPECT_THROW(praeger_xu(4, 4), ParameterError);
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k < n && n * (1 << k) <= 400; ++k) {
      Graph g = praeger_xu(n, k);
      EXPECT_EQ(g.order(), n << k);
      EXPECT_TRUE(is_regular_of_valence(g, 4));
    }
}

TEST(Families, PraegerXuGenerators) {
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k < n && k <= 5; ++k) {
      Graph g = praeger_xu(n, k);
      PxGenerators gen = px_generators(n, k);
      for (const Perm& p : gen.all())
        for (const auto& e : g.edges()) ASSERT_TRUE(g.adjacent(p(e.u), p(e.v))) << n << "," << k;
      EXPECT_TRUE((gen.mu * gen.mu).is_identity());
      PermGroup G(g.order(), gen.all());
      EXPECT_EQ(G.order(), BigInt(n) << (n + 1)) << n << "," << k;
      if (n != 4 && n - k >= 3) EXPECT_EQ(automorphism_group(g).order(), BigInt(n) << (n + 1));
    }
  PxGenerators g6 = px_generators(6, 2);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_EQ(g6.sigma[a] * g6.sigma[b], g6.sigma[b] * g6.sigma[a]);
  EXPECT_EQ(PermGroup(10, px_generators(5, 1).all()).order(), 320);
}

TEST(Families, Sporadics) {
  Graph odd = sporadic(Sporadic::odd4);
  EXPECT_EQ(odd.order(), 35);
  EXPECT_TRUE(is_regular_of_valence(odd, 4));
  Graph oct = sporadic(Sporadic::octahedron);
  EXPECT_EQ(oct.order(), 6);
  EXPECT_EQ(oct.size(), 12u);
  EXPECT_EQ(sporadic(Sporadic::k5).order(), 5);
}

TEST(Families, Diagrams) {
  Graph w = wreath(6, 2);
  std::vector<Point> rho(12);
  for (int i = 0; i < 6; ++i)
    for (int r = 0; r < 2; ++r) rho[i * 2 + r] = static_cast<Point>(((i + 1) % 6) * 2 + r);
  // rho in wreath coordinates has two orbits {(i,0)} and {(i,1)}.
  VoltageDiagram dw = diagram_quotient(w, Perm(rho));
  EXPECT_EQ(dw.nodes, 2);
  EXPECT_EQ(dw.arcs.size(), 2u);
  EXPECT_EQ(dw.loops.size(), 2u);
  EXPECT_TRUE(iso(diagram_expand(dw), w));

  Graph r = rose_window(12, 2, 5);
  std::vector<Point> rot(24);
  for (int i = 0; i < 12; ++i) {
    rot[i] = static_cast<Point>((i + 1) % 12);
    rot[12 + i] = static_cast<Point>(12 + (i + 1) % 12);
  }
  VoltageDiagram dr = diagram_quotient(r, Perm(rot));
  ASSERT_EQ(dr.loops.size(), 2u);
  EXPECT_EQ(dr.loops[0], (std::pair{0, 1}));
  EXPECT_EQ(dr.loops[1], (std::pair{1, 5}));
  ASSERT_EQ(dr.arcs.size(), 2u);
  // From A to B the spokes carry labels 0 and -2.
  EXPECT_EQ(dr.arcs[0].label, 0);
  EXPECT_EQ(dr.arcs[1].label, 10);
  EXPECT_TRUE(iso(diagram_expand(dr), r));

  OrientedGraph ps = spidergraph(3, 7, 2, false);
  std::vector<Point> sh(21);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 7; ++j) sh[i * 7 + j] = static_cast<Point>(i * 7 + (j + 1) % 7);
  EXPECT_TRUE(iso(diagram_expand(diagram_quotient(ps.graph, Perm(sh))), ps.graph));

  // Semi-edge: the n/2 jump of C_8(1,4) over rotation.
  std::vector<Point> c8(8);
  for (int i = 0; i < 8; ++i) c8[i] = static_cast<Point>((i + 1) % 8);
  VoltageDiagram ds = diagram_quotient(circulant(8, {1, 4}), Perm(c8));
  EXPECT_EQ(ds.semi_edges.size(), 1u);
  EXPECT_EQ(diagram_expand(ds), circulant(8, {1, 4}));

  EXPECT_THROW(diagram_quotient(w, Perm::from_cycles(12, {{0, 1, 2}})), ParameterError);
}

TEST(Families, IdentitySuite) {
  for (int n = 3; n * 2 <= 400; ++n) {
    if (n <= 8) EXPECT_TRUE(iso(praeger_xu(n, 1), wreath(n, 2))) << n;
    if (n <= 100 && n >= 3) EXPECT_TRUE(iso(praeger_xu(n, 2), rose_window(2 * n, n + 2, n + 1))) << n;
    if (n >= 5 && n <= 60) EXPECT_TRUE(iso(rose_window(n, 2, 1), wreath(n, 2))) << n;
    if (n >= 3 && n <= 60) EXPECT_TRUE(iso(circulant(2 * n, {1, n + 1}), wreath(n, 2))) << n;
  }
  for (int n = 3; 3 * n <= 400; ++n) {
    Graph dw = depleted_wreath(n);
    if (n % 3 == 1) EXPECT_TRUE(iso(dw, circulant(3 * n, {1, n + 1}))) << n;
    if (n % 3 == 2) EXPECT_TRUE(iso(dw, circulant(3 * n, {1, n - 1}))) << n;
    if (n % 2 == 0) EXPECT_TRUE(iso(dw, toroidal(TorusKind::bracket, n / 2, 3))) << n;
    if (n % 2 == 1 && n >= 5) EXPECT_TRUE(iso(dw, toroidal(TorusKind::angle, (n + 3) / 2, (n - 3) / 2))) << n;
  }
  for (int n = 5; n <= 40; ++n)
    for (int t = 3; t * n <= 400; ++t)
      for (int r = 2; r < n - 1; ++r) {
        long long rt = power_mod(r, t, n);
        if (rt != 1 && rt != n - 1) continue;
        if (std::gcd(r, n) != 1) continue;
        EXPECT_TRUE(iso(cpm(n, 1, t, r).graph, spidergraph(t, n, r, false).graph)) << n << "," << t << "," << r;
      }
}

TEST(Names, RoundTrip) {
  for (std::string s : {"W(6,2)", "PS(3,7;2)", "MPS(4,24;5)", "C_10(1,3)", "{4,4}_{3,2}", "{4,4}_<3,1>",
                        "{4,4}_[3,2]", "R_12(2,5)", "AMC(4,12,[[1,-4],[4,1]])", "SDD(K5)", "K5", "Odd(4)",
                        "DCyc_3#DCyc_3", "PL(Br(4,5;2))", "MG({4,4}_{3,2})", "MSY(5,11;5,0)", "Xe(4,12;5,6)",
                        "BC_7(0,1,2,4)", "GP(10,3)"}) {
    FamilyName n = parse_family_name(s);
    EXPECT_EQ(to_string(n), s);
    EXPECT_EQ(parse_family_name(to_string(n)), n);
  }
  FamilyName ps = parse_family_name("PS(3,7;2)");
  EXPECT_EQ(ps.head, "PS");
  EXPECT_EQ(ps.integer(2), 2);
  EXPECT_EQ(ps.seps, ",;");
  EXPECT_EQ(to_string(name_torus(TorusKind::bracket, 3, 2)), "{4,4}_[3,2]");
  EXPECT_EQ(to_string(name_sub("C", 13, {1, 5})), "C_13(1,5)");
  try {
    parse_family_name("W(6,2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset, 5u);
  }
  EXPECT_THROW(parse_family_name("{4,4}_(3,2)"), ParseError);
  EXPECT_THROW(parse_family_name("W(6,2)x"), ParseError);
}
