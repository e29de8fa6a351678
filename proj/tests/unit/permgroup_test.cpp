#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tetra/permgroup.hpp"

using namespace tetra;

namespace {

std::vector<Perm> random_gens(std::size_t n, int k, std::mt19937_64& rng) {
  std::vector<Perm> out;
  for (int i = 0; i < k; ++i) {
    auto p = oracle::random_permutation(static_cast<int>(n), rng);
    out.emplace_back(std::vector<Point>(p.begin(), p.end()));
  }
  return out;
}

// Generators of a group that is small enough to enumerate: products of a few
// short cycles on disjoint-ish supports.
std::vector<Perm> smallish_gens(std::size_t n, std::mt19937_64& rng) {
  std::vector<Perm> out;
  int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) {
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::size_t len = std::min<std::size_t>(n, 2 + rng() % 3);
    out.push_back(Perm::from_cycles(n, {std::vector<Point>(pts.begin(), pts.begin() + len)}));
  }
  return out;
}

}  // namespace

TEST(Perm, RightActionConvention) {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  EXPECT_EQ((a * b)(0), 2u);
  EXPECT_EQ((Perm::identity(3) * a), a);
  EXPECT_EQ((a * b).cycles(), "(0 2 1)");
  EXPECT_EQ(Perm::identity(4).cycles(), "()");
  EXPECT_THROW(Perm(std::vector<Point>{0, 0}), ConstructionError);
  EXPECT_THROW(compose(Perm::identity(2), Perm::identity(3)), Error);
  EXPECT_EQ(power(Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), -1), Perm::from_cycles(5, {{0, 4, 3, 2, 1}}));
}

TEST(PermGroup, SmallOrders) {
  PermGroup s3(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(s3.order(), 6);
  PermGroup cyc(9, {Perm::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})});
  EXPECT_EQ(cyc.order(), 9);
  PermGroup triv(4, {});
  EXPECT_EQ(triv.order(), 1);
  EXPECT_EQ(triv.orbits().size(), 4u);
  // S_20 from a transposition and a long cycle.
  std::vector<Point> c(20);
  std::iota(c.begin(), c.end(), 0);
  PermGroup s20(20, {Perm::from_cycles(20, {{0, 1}}), Perm::from_cycles(20, {c})});
  BigInt f = 1;
  for (int i = 2; i <= 20; ++i) f *= i;
  EXPECT_EQ(s20.order(), f);
}

TEST(PermGroup, OrderAgreesWithEnumeration) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 3 + rng() % 6;
    auto gens = smallish_gens(n, rng);
    auto all = oracle::enumerate_group(gens, n);
    PermGroup G(n, gens);
    EXPECT_EQ(G.order(), all.size());
    BigInt prod = 1;
    for (auto s : G.basic_orbit_sizes()) prod *= s;
    EXPECT_EQ(prod, G.order());
    for (const auto& x : all) EXPECT_TRUE(G.contains(Perm(x)));
  }
}

TEST(PermGroup, MembershipAndDivisibility) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 4 + rng() % 12;
    auto gens = random_gens(n, 2, rng);
    PermGroup G(n, gens);
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    EXPECT_EQ(f % G.order(), 0);
    for (const auto& g : gens) EXPECT_TRUE(G.contains(g));
    for (int k = 0; k < 10; ++k) EXPECT_TRUE(G.contains(G.random_element(rng())));
  }
  // A transposition is not in the alternating group.
  PermGroup a5(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  EXPECT_EQ(a5.order(), 60);
  EXPECT_FALSE(a5.contains(Perm::from_cycles(5, {{0, 1}})));
}

TEST(PermGroup, StabilizerOrbitsRefine) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 4 + rng() % 8;
    PermGroup G(n, smallish_gens(n, rng));
    Point p = static_cast<Point>(rng() % n);
    PermGroup H = G.pointwise_stabilizer({p});
    EXPECT_EQ(H.order() * G.orbit(p).size(), G.order());
    auto big = G.orbits();
    std::vector<std::size_t> where(n);
    for (std::size_t i = 0; i < big.size(); ++i)
      for (Point x : big[i]) where[x] = i;
    for (const auto& o : H.orbits())
      for (Point x : o) EXPECT_EQ(where[x], where[o[0]]);
    EXPECT_EQ(G.with_base_prefix({p}).base().front(), p);
    EXPECT_EQ(G.with_base_prefix({p}).order(), G.order());
  }
}

TEST(PermGroup, TransporterAgreesWithTupleOrbit) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 4 + rng() % 5;
    auto gens = smallish_gens(n, rng);
    PermGroup G(n, gens);
    auto all = oracle::enumerate_group(gens, n);
    for (int q = 0; q < 10; ++q) {
      std::vector<Point> a{static_cast<Point>(rng() % n), static_cast<Point>(rng() % n)};
      if (a[0] == a[1]) a.pop_back();
      std::vector<Point> b;
      for (std::size_t i = 0; i < a.size(); ++i) b.push_back(static_cast<Point>(rng() % n));
      bool exists = false;
      for (const auto& x : all) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) ok = ok && x[a[i]] == b[i];
        exists = exists || ok;
      }
      Transport tr = G.transporter(a, b);
      ASSERT_NE(tr.status, Tri::unknown);
      EXPECT_EQ(tr.status == Tri::yes, exists);
      if (tr.element) {
        EXPECT_TRUE(G.contains(*tr.element));
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ((*tr.element)(a[i]), b[i]);
      }
    }
  }
}

TEST(PermGroup, TransporterOnCycleGraph) {
  // Dihedral group of the hexagon: dart (0,1) to (2,3) is rotation by two.
  PermGroup d6(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}), Perm::from_cycles(6, {{1, 5}, {2, 4}})});
  Transport tr = d6.transporter({0, 1}, {2, 3});
  ASSERT_EQ(tr.status, Tri::yes);
  EXPECT_EQ(*tr.element, Perm::from_cycles(6, {{0, 2, 4}, {1, 3, 5}}));
  Transport id = d6.transporter({0, 1}, {0, 1});
  EXPECT_TRUE(id.element->is_identity());
}

TEST(PermGroup, EdgeAndDartOrbitsOfCompleteGraph) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  Graph k5 = build_graph(5, e);
  std::vector<Perm> gens{Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})};
  EXPECT_EQ(dart_orbits(k5, gens).size(), 1u);
  EXPECT_EQ(dart_orbits(k5, gens)[0].size(), 20u);
  EXPECT_EQ(edge_orbits(k5, gens).size(), 1u);
  EXPECT_EQ(edge_orbits(k5, {}).size(), 10u);
}

TEST(PermGroup, SiftBudgetIsReported) {
  std::vector<Point> c(30);
  std::iota(c.begin(), c.end(), 0);
  ChainOptions opt;
  opt.sift_budget = 5;
  PermGroup s30(30, {Perm::from_cycles(30, {{0, 1}}), Perm::from_cycles(30, {c})}, opt);
  EXPECT_THROW(s30.order(), ResourceLimit);
}
