#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "tetra/families.hpp"
#include "tetra/group_coset.hpp"
#include "tetra/symmetry.hpp"

using namespace tetra;

namespace {

GtElement mul(std::initializer_list<GtElement> xs) {
  auto it = xs.begin();
  GtElement r = *it++;
  for (; it != xs.end(); ++it) r = gt_multiply(r, *it);
  return r;
}

// Closure of a generating set under right multiplication, by BFS over normal forms.
std::set<std::size_t> closure(const GtGroup& G, const std::vector<GtElement>& gens) {
  std::set<std::size_t> seen{G.index(G.identity())};
  std::vector<GtElement> q{G.identity()};
  for (std::size_t h = 0; h < q.size(); ++h)
    for (const auto& s : gens) {
      GtElement n = gt_multiply(q[h], s);
      if (seen.insert(G.index(n)).second) q.push_back(n);
    }
  return seen;
}

std::vector<GtElement> generators(const GtGroup& G) {
  std::vector<GtElement> g;
  for (int i = 0; i < 2 * G.t(); ++i) g.push_back(G.x(i));
  g.push_back(G.z());
  g.push_back(G.a());
  g.push_back(G.b());
  return g;
}

}  // namespace

TEST(GtGroup, CommutatorIsZ) {
  GtGroup G(2, 0);
  EXPECT_EQ(gt_multiply(G.x(0), G.x(2)), mul({G.x(2), G.x(0), G.z()}));
  EXPECT_EQ(gt_multiply(G.x(0), G.x(1)), gt_multiply(G.x(1), G.x(0)));
  EXPECT_EQ(gt_multiply(G.identity(), G.a()), G.a());
}

TEST(GtGroup, Relations) {
  for (int t : {2, 3, 4})
    for (int eps : {0, 1}) {
      GtGroup G(t, eps);
      const GtElement e = G.identity();
      const GtElement a = G.a(), b = G.b(), z = G.z();
      EXPECT_EQ(gt_power(z, 2), e);
      EXPECT_EQ(gt_power(b, 2), e);
      EXPECT_EQ(gt_multiply(gt_power(z, eps), gt_power(a, 2 * t)), e);
      EXPECT_EQ(gt_power(gt_multiply(a, b), 2), e);
      GtElement ai = gt_inverse(a);
      for (int i = 0; i < 2 * t; ++i) {
        const GtElement xi = G.x(i);
        EXPECT_EQ(gt_power(xi, 2), e);
        EXPECT_EQ(gt_multiply(xi, z), gt_multiply(z, xi));
        for (int j = 0; j < 2 * t; ++j) {
          GtElement comm = mul({xi, G.x(j), xi, G.x(j)});  // involutions: [x,y] = xyxy
          EXPECT_EQ(comm, std::abs(i - j) == t ? z : e) << i << "," << j;
        }
        // x^a = a^-1 x a
        EXPECT_EQ(mul({ai, xi, a}), G.x((i + 1) % (2 * t)));
        EXPECT_EQ(mul({b, xi, b}), G.x(((t - 1 - i) % (2 * t) + 2 * t) % (2 * t)));
      }
    }
}

TEST(GtGroup, ClosureHasPredictedOrder) {
  for (int t : {2, 3})
    for (int eps : {0, 1}) {
      GtGroup G(t, eps);
      // The generated group fills every normal form, and x, a, b already suffice.
      EXPECT_EQ(closure(G, generators(G)).size(), std::size_t(t) << (2 * t + 3));
      EXPECT_EQ(closure(G, {G.x(0), G.a(), G.b()}).size(), G.order());
      EXPECT_EQ(G.order(), std::size_t(t) << (2 * t + 3));
    }
  EXPECT_EQ(GtGroup(2, 0).order(), 256u);
}

TEST(GtGroup, Associativity) {
  std::mt19937_64 rng(7);
  for (int t : {2, 3})
    for (int eps : {0, 1}) {
      GtGroup G(t, eps);
      for (int k = 0; k < 1000; ++k) {
        GtElement p = G.element(rng() % G.order()), q = G.element(rng() % G.order()),
                  r = G.element(rng() % G.order());
        ASSERT_EQ(gt_multiply(gt_multiply(p, q), r), gt_multiply(p, gt_multiply(q, r)));
      }
    }
  GtGroup G(2, 1);
  for (std::size_t i = 0; i < G.order(); ++i) {
    GtElement g = G.element(i);
    ASSERT_EQ(G.index(g), i);
    ASSERT_EQ(gt_multiply(g, gt_inverse(g)), G.identity());
  }
  EXPECT_THROW(gt_multiply(GtGroup(2, 0).a(), GtGroup(2, 1).a()), ParameterError);
}

TEST(GtGroup, SubgroupH) {
  for (int t : {2, 3, 4})
    for (int eps : {0, 1}) {
      GtGroup G(t, eps);
      std::vector<GtElement> gens{G.b()};
      for (int i = 0; i < t; ++i) gens.push_back(G.x(i));
      auto H = closure(G, gens);
      EXPECT_EQ(H.size(), std::size_t(1) << (t + 1));
      for (std::size_t i : H) {
        GtElement h = G.element(i);
        EXPECT_EQ(h.zeta, 0);
        EXPECT_EQ(h.ak, 0);
        EXPECT_EQ(h.v >> t, 0u);
      }
      EXPECT_EQ(G.order() / H.size(), std::size_t(t) << (t + 2));
    }
}

TEST(CosetGraph, SmallGroups) {
  CosetGraphSpec z6{6, [](std::size_t p, std::size_t q) { return (p + q) % 6; },
                    [](std::size_t i) { return i % 3 == 0; }, 1};
  CosetGraph c = coset_graph(z6);
  EXPECT_EQ(c.graph.order(), 3);
  EXPECT_EQ(c.graph.size(), 3u);
  EXPECT_EQ(c.max_instances, 2u);

  // S_3 as permutations of {0,1,2} numbered lexicographically.
  std::vector<std::vector<Point>> els;
  std::vector<Point> p{0, 1, 2};
  do els.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto idx = [&](const std::vector<Point>& x) {
    return static_cast<std::size_t>(std::find(els.begin(), els.end(), x) - els.begin());
  };
  CosetGraphSpec s3;
  s3.count = 6;
  s3.multiply = [&](std::size_t a, std::size_t b) {
    return idx(compose(Perm(els[a]), Perm(els[b])).images());
  };
  s3.in_h = [&](std::size_t i) { return els[i] == std::vector<Point>{0, 1, 2} || els[i] == std::vector<Point>{1, 0, 2}; };
  s3.a = idx({1, 2, 0});
  CosetGraph g = coset_graph(s3);
  EXPECT_EQ(g.graph.order(), 3);
  EXPECT_TRUE(is_connected(g.graph));
  s3.a = idx({1, 0, 2});
  EXPECT_THROW(coset_graph(s3), ParameterError);
}

TEST(Ppm, CountsAndIdentities) {
  for (int t : {2, 3, 4})
    for (int eps : {0, 1}) {
      Graph g = ppm(t, eps);
      EXPECT_EQ(g.order(), t << (t + 2));
      EXPECT_TRUE(is_regular_of_valence(g, 4));
      EXPECT_TRUE(is_connected(g));
    }
  EXPECT_TRUE(are_isomorphic(ppm(2, 0), praeger_xu(4, 3)));
  EXPECT_EQ(girth(ppm(2, 0)), 4);
  EXPECT_EQ(girth(ppm(3, 0)), 6);
  // A 4-valent graph of girth 8 needs at least 2(1+3+9+27) = 80 vertices, so the
  // 32-vertex PPM(2,1) cannot reach 8; the computed value is frozen here.
  EXPECT_EQ(girth(ppm(2, 1)), 6);
  EXPECT_EQ(girth(ppm(4, 0)), 8);
  EXPECT_EQ(girth(ppm(3, 1)), 8);
  EXPECT_FALSE(are_isomorphic(ppm(2, 1), praeger_xu(4, 3)));
  EXPECT_THROW(ppm(7, 0), ResourceLimit);
}

TEST(Covers, SmallAndFamilies) {
  Graph c6 = circulant(6, {1}), c3 = circulant(3, {1});
  CoverResult r = is_double_cover(c6, c3);
  ASSERT_EQ(r.found, Tri::yes);
  EXPECT_TRUE(verify_double_cover(c6, c3, r.map));

  EXPECT_EQ(is_double_cover(build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), c3).found, Tri::yes);
  EXPECT_EQ(is_double_cover(circulant(8, {1}), circulant(4, {1})).found, Tri::yes);
  EXPECT_EQ(is_double_cover(circulant(10, {1}), c3).found, Tri::no);
  // K_{5,5} minus a perfect matching is the bipartite double of K5.
  Graph k5 = sporadic(Sporadic::k5);
  Graph k55 = build_graph(10, [] {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) e.emplace_back(i, 5 + j);
    return e;
  }());
  EXPECT_EQ(is_double_cover(k55, k5).found, Tri::yes);

  CoverResult t = is_double_cover(toroidal(TorusKind::rot, 5, 1), toroidal(TorusKind::rot, 3, 2));
  ASSERT_EQ(t.found, Tri::yes);
  EXPECT_TRUE(verify_double_cover(toroidal(TorusKind::rot, 5, 1), toroidal(TorusKind::rot, 3, 2), t.map));

  for (int eps : {0, 1}) {
    CoverResult p = is_double_cover(ppm(2, eps), praeger_xu(4, 2));
    ASSERT_EQ(p.found, Tri::yes) << eps;
    EXPECT_TRUE(verify_double_cover(ppm(2, eps), praeger_xu(4, 2), p.map));
  }
}

TEST(Covers, DeckInvolutionsMatchBacktracking) {
  // is_double_cover takes the involution route on connected covers with small groups;
  // is_cover with fold 2 is the plain backtracking search.
  std::vector<Graph> small = {circulant(6, {1, 2}), circulant(7, {1, 2}), circulant(8, {1, 3}), circulant(8, {1, 2}),
                              wreath(4, 2),         circulant(9, {1, 2}), toroidal(TorusKind::rot, 3, 0),
                              circulant(10, {1, 3}), wreath(5, 2)};
  std::vector<Graph> big = {circulant(12, {1, 5}), circulant(12, {1, 2}), wreath(6, 2), praeger_xu(4, 2),
                            circulant(16, {1, 7}), toroidal(TorusKind::rot, 4, 0), circulant(14, {1, 3}),
                            circulant(18, {1, 5}), toroidal(TorusKind::rot, 3, 3), circulant(20, {1, 9})};
  int yes = 0, no = 0;
  for (const auto& c : big)
    for (const auto& b : small) {
      if (c.order() != 2 * b.order()) continue;
      CoverResult fast = is_double_cover(c, b);
      CoverResult slow = is_cover(c, b, 2);
      ASSERT_NE(slow.found, Tri::unknown);
      EXPECT_EQ(fast.found, slow.found) << encode_g6(c) << " over " << encode_g6(b);
      if (fast.found == Tri::yes) {
        EXPECT_TRUE(verify_double_cover(c, b, fast.map));
        ++yes;
      } else {
        ++no;
      }
    }
  EXPECT_GT(yes, 3);
  EXPECT_GT(no, 3);

  CoverResult p = is_double_cover(ppm(3, 1), praeger_xu(6, 3));
  ASSERT_EQ(p.found, Tri::yes);
  EXPECT_TRUE(verify_double_cover(ppm(3, 1), praeger_xu(6, 3), p.map));
}
