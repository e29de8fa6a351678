#include "tetra/lr.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "tetra/derived.hpp"
#include "tetra/symmetry.hpp"

namespace tetra {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

struct ColoredEdge {
  int u, v, color;
};

// Builds the graph strictly and reads the cycles off the two color classes.
CycleDecomposition from_colored_edges(int n, const std::vector<ColoredEdge>& list) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(list.size());
  for (const auto& e : list) pairs.emplace_back(e.u, e.v);
  Graph g = build_simple_graph(n, pairs);
  DartIndexer idx(g);
  std::vector<int> colors(g.size(), -1);
  for (const auto& e : list) colors[idx.edge(e.u, e.v)] = e.color;
  return decomposition_from_edge_colors(g, colors);
}

void require_unit_square(int n, int r, const std::string& name) {
  long long r1 = mod(r, n), sq = mod(r1 * r1, n);
  require(sq == 1 || sq == n - 1, name + " needs r^2 = +-1 mod n");
  require(r1 != 1 && r1 != n - 1, name + " needs r != +-1 mod n");
}

}  // namespace

PermGroup decomposition_aut(const CycleDecomposition& cd, bool by_color, std::uint64_t node_budget) {
  if (by_color && !cd.colored()) throw ParameterError("decomposition has no coloring");
  // Subdivide every edge and hang each midpoint off a vertex standing for its cycle.
  const Graph& g = cd.base();
  const int n = g.order(), m = static_cast<int>(g.size());
  const int nc = static_cast<int>(cd.cycles().size());
  auto edges = g.edges();
  std::vector<std::pair<int, int>> e;
  std::vector<int> color(n + m + nc, 0);
  for (int i = 0; i < m; ++i) {
    e.emplace_back(edges[i].u, n + i);
    e.emplace_back(edges[i].v, n + i);
    e.emplace_back(n + i, n + m + cd.cycle_of_edge(i));
    color[n + i] = 1;
  }
  for (int c = 0; c < nc; ++c) color[n + m + c] = 2 + (by_color ? cd.colors()[c] : 0);
  Graph gadget = build_graph(n + m + nc, e).with_colors(std::move(color));
  SearchOptions opt;
  opt.primary = n;
  opt.node_budget = node_budget;
  return analyze(gadget, opt).group;
}

Tri has_swapper(const CycleDecomposition& cd, const PermGroup& aut, int c, int v, std::uint64_t sift_budget) {
  const auto& cyc = cd.cycles().at(c);
  auto pos = std::find(cyc.begin(), cyc.end(), v);
  if (pos == cyc.end()) throw ParameterError("has_swapper: vertex not on the cycle");
  const std::size_t i = pos - cyc.begin(), len = cyc.size();
  const int u1 = cyc[(i + 1) % len], u2 = cyc[(i + len - 1) % len];
  const auto& other = cd.cycles()[cd.other_cycle(v, c)];
  std::vector<Point> fixed(other.begin(), other.end());
  try {
    PermGroup stab = aut.pointwise_stabilizer(fixed, sift_budget);
    auto orb = stab.orbit(static_cast<Point>(u1));
    return std::find(orb.begin(), orb.end(), static_cast<Point>(u2)) != orb.end() ? Tri::yes : Tri::no;
  } catch (const ResourceLimit&) {
    return Tri::unknown;
  }
}

Tri has_swapper(const CycleDecomposition& cd, int c, int v, std::uint64_t sift_budget) {
  try {
    return has_swapper(cd, decomposition_aut(cd), c, v, sift_budget);
  } catch (const ResourceLimit&) {
    return Tri::unknown;
  }
}

LRVerdict check_suitable_lr(const CycleDecomposition& cd) {
  if (!cd.colored()) throw ParameterError("LR check needs a colored decomposition");
  const Graph& g = cd.base();
  if (!is_connected(g)) throw ParameterError("LR check needs a connected graph");
  const int n = g.order();
  DartIndexer idx(g);
  const auto labels = cd.edge_labels(true);
  LRVerdict out;
  auto fail = [&](const std::string& why) {
    if (out.witness.empty()) out.witness = why;
  };

  // (d) is purely combinatorial.
  std::vector<std::array<std::vector<int>, 2>> nb(n);
  for (const auto& e : g.edges()) {
    int col = labels[idx.edge(e.u, e.v)];
    nb[e.u][col].push_back(e.v);
    nb[e.v][col].push_back(e.u);
  }
  out.no_alternating_4cycle = Tri::yes;
  for (int v0 = 0; v0 < n && out.no_alternating_4cycle == Tri::yes; ++v0)
    for (int v1 : nb[v0][red])
      for (int v2 : nb[v1][green])
        for (int v3 : nb[v2][red]) {
          if (v3 == v1 || v3 == v0) continue;
          const auto& back = nb[v0][green];
          if (std::find(back.begin(), back.end(), v3) != back.end() && out.no_alternating_4cycle == Tri::yes) {
            out.no_alternating_4cycle = Tri::no;
            fail("alternating 4-cycle " + std::to_string(v0) + " " + std::to_string(v1) + " " + std::to_string(v2) +
                 " " + std::to_string(v3));
          }
        }

  std::optional<PermGroup> full, colored;
  try {
    colored = decomposition_aut(cd, true);
    out.vertex_transitive = orbits_of(n, colored->generators()).size() == 1 ? Tri::yes : Tri::no;
    if (out.vertex_transitive == Tri::no) fail("color-preserving group is not vertex-transitive");
  } catch (const ResourceLimit&) {
    fail("color-preserving group search exhausted its budget");
  }
  try {
    full = decomposition_aut(cd, false);
  } catch (const ResourceLimit&) {
    fail("decomposition group search exhausted its budget");
  }
  if (full) {
    // On a connected base an element either keeps or swaps the colors everywhere.
    const auto e0 = g.edges().front();
    out.no_color_swap = Tri::yes;
    for (const auto& p : full->generators())
      if (labels[idx.edge(p(e0.u), p(e0.v))] != labels[0]) out.no_color_swap = Tri::no;
    if (out.no_color_swap == Tri::no) fail("a symmetry interchanges red and green");

    // Flags (v, slot) up to the group; swappers are conjugation-invariant.
    std::vector<int> along(2 * n);
    for (int v = 0; v < n; ++v) {
      for (int u : g.neighbors(v)) {
        int c = cd.cycle_of_edge(idx.edge(v, u));
        along[2 * v + (c == cd.cycles_at(v).first ? 0 : 1)] = u;
      }
    }
    auto act = [&](const Perm& p, std::size_t f) -> std::size_t {
      int v = static_cast<int>(f / 2), u = along[f];
      int pv = static_cast<int>(p(v)), pu = static_cast<int>(p(u));
      int c = cd.cycle_of_edge(idx.edge(pv, pu));
      return 2 * pv + (cd.cycles_at(pv).first == c ? 0 : 1);
    };
    out.all_swappers = Tri::yes;
    for (const auto& orbit : induced_orbits(2 * n, full->generators(), act)) {
      int v = static_cast<int>(orbit.front() / 2);
      auto at = cd.cycles_at(v);
      int c = orbit.front() % 2 == 0 ? at.first : at.second;
      Tri t = has_swapper(cd, *full, c, v);
      if (t == Tri::no) {
        out.all_swappers = Tri::no;
        fail("no swapper for cycle " + std::to_string(c) + " at vertex " + std::to_string(v));
        break;
      }
      if (t == Tri::unknown) {
        out.all_swappers = Tri::unknown;
        fail("swapper search exhausted its budget");
      }
    }
  }
  out.suitable = out.vertex_transitive == Tri::yes && out.all_swappers == Tri::yes &&
                 out.no_color_swap == Tri::yes && out.no_alternating_4cycle == Tri::yes;
  return out;
}

Graph pl_of_lr(const CycleDecomposition& cd) {
  LRVerdict v = check_suitable_lr(cd);
  if (!v.suitable) throw ParameterError("not a suitable LR structure: " + v.witness);
  return partial_line_graph(cd);
}

CycleDecomposition barrel(int k, int n, int r, bool mutant) {
  const std::string name = mutant ? "MBr" : "Br";
  require(k % 2 == 0, name + " needs k even");
  if (mutant) {
    require(k >= 2, "MBr needs k >= 2");
    require(n >= 8 && n % 2 == 0, "MBr needs n even and >= 8");
  } else {
    require(k >= 4, "Br needs k >= 4");
    require(n >= 5, "Br needs n >= 5");
  }
  require_unit_square(n, r, name);
  std::vector<ColoredEdge> e;
  for (int i = 0; i < k; ++i) {
    const long long jump = power_mod(r, i, n);
    for (int j = 0; j < n; ++j) {
      int v = i * n + j;
      e.push_back({v, i * n + static_cast<int>(mod(j + jump, n)), green});
      if (i < k - 1)
        e.push_back({v, (i + 1) * n + j, red});
      else
        e.push_back({v, static_cast<int>(mod(j + (mutant ? n / 2 : 0), n)), red});
    }
  }
  return from_colored_edges(k * n, e);
}

CycleDecomposition cycle_structure_double(const Graph& g, const CycleDecomposition& cd, int variant) {
  require(variant == 0 || variant == 1, "CS variant must be 0 or 1");
  require(is_regular_of_valence(g, 4), "CS needs a tetravalent graph");
  require(g == cd.base(), "CS: decomposition is on a different graph");
  const int n = g.order();
  auto split = [&](int v, int c) { return 2 * v + (cd.cycles_at(v).first == c ? 0 : 1); };
  auto lift = [](int x, int s) { return 2 * x + s; };
  std::vector<ColoredEdge> e;
  for (int v = 0; v < n; ++v) {
    int x0 = 2 * v, x1 = 2 * v + 1;
    for (int s = 0; s < 2; ++s) {
      e.push_back({lift(x0, s), lift(x1, s), red});
      e.push_back({lift(x0, s), lift(x1, 1 - s), red});
    }
  }
  for (std::size_t c = 0; c < cd.cycles().size(); ++c) {
    const auto& cyc = cd.cycles()[c];
    const int ci = static_cast<int>(c);
    EdgeId least(cyc[0], cyc[1]);
    for (std::size_t i = 0; i < cyc.size(); ++i) least = std::min(least, EdgeId(cyc[i], cyc[(i + 1) % cyc.size()]));
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], w = cyc[(i + 1) % cyc.size()];
      int volt = variant == 1 && EdgeId(u, w) == least ? 1 : 0;
      for (int s = 0; s < 2; ++s) e.push_back({lift(split(u, ci), s), lift(split(w, ci), s ^ volt), green});
    }
  }
  return from_colored_edges(4 * n, e);
}

CycleDecomposition sop(int fourm, int fourn) {
  require(fourm >= 4 && fourn >= 4 && fourm % 4 == 0 && fourn % 4 == 0, "SoP(4m,4n) needs positive multiples of 4");
  const int M = fourm, N = fourn, r = fourn / 2 + 1;
  auto id = [&](long long i, long long j, int k) { return static_cast<int>((mod(i, M) * N + mod(j, N)) * 2 + k); };
  std::vector<ColoredEdge> e;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < N; ++j) {
      e.push_back({id(i, j, 0), id(i, j + 1, 0), red});
      e.push_back({id(i, j, 1), id(i, j + r, 1), red});
    }
  for (int i = 0; i < M; i += 2)
    for (int j = 0; j < N; ++j) {
      int to = j % 2 == 0 ? i + 1 : i - 1;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) e.push_back({id(i, j, a), id(to, j, b), green});
    }
  return from_colored_edges(2 * M * N, e);
}

CycleDecomposition rows_and_columns(int n, int k) {
  require(n >= 3 && k >= 3, "RC(n,k) needs n, k >= 3");
  auto id0 = [&](long long i, long long r, long long j) {
    return static_cast<int>((mod(i, n) * k + mod(r, k)) * n + mod(j, n));
  };
  auto id1 = [&](long long i, long long r, long long j) { return k * n * n + id0(i, r, j); };
  std::vector<ColoredEdge> e;
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < n; ++j) {
        e.push_back({id0(i, r, j), id0(i + 1, r, j), green});
        e.push_back({id1(i, r, j), id1(i, r, j + 1), green});
        e.push_back({id0(i, r, j), id1(i, r + 1, j), red});
        e.push_back({id0(i, r, j), id1(i, r - 1, j), red});
      }
  auto cd = from_colored_edges(2 * k * n * n, e);
  if (!is_connected(cd.base())) throw ParameterError("RC(n,k) with k even is disconnected");
  return cd;
}

CycleDecomposition msy_lr(int m, int n, int r, int t) {
  require(m >= 3 && n >= 3, "MSY needs m, n >= 3");
  std::vector<ColoredEdge> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int v = i * n + j;
      e.push_back({v, i * n + static_cast<int>(mod(j + power_mod(r, i, n), n)), red});
      if (i < m - 1)
        e.push_back({v, (i + 1) * n + j, green});
      else
        e.push_back({v, static_cast<int>(mod(j + t, n)), green});
    }
  return from_colored_edges(m * n, e);
}

CycleDecomposition bicirculant_lr(int n, int a, int b, int c) {
  require(n >= 3, "BC_n needs n >= 3");
  std::set<long long> offs{0, mod(a, n), mod(b, n), mod(c, n)};
  require(offs.size() == 4, "BC_n({0,a},{b,c}) needs distinct offsets mod n");
  std::vector<ColoredEdge> e;
  for (int i = 0; i < n; ++i) {
    for (int x : {0, a}) e.push_back({i, n + static_cast<int>(mod(i + x, n)), green});
    for (int x : {b, c}) e.push_back({i, n + static_cast<int>(mod(i + x, n)), red});
  }
  return from_colored_edges(2 * n, e);
}

int bicirculant_lr_case(int n, int a, int b, int c) {
  if (n < 3) return 0;
  auto md = [n](long long x) { return mod(x, n); };
  if (md(b) != 1) return 0;
  {
    long long r = md(1 - a), s = md(c);
    auto unit_not_pm1 = [&](long long x) { return std::gcd(x, static_cast<long long>(n)) == 1 && x != 1 && x != md(-1); };
    if (unit_not_pm1(r) && unit_not_pm1(s) && md(r * r) == 1 && md(s * s) == 1 && r != s && r != md(-s) &&
        md((r - 1) * (s - 1)) == 0)
      return 1;
  }
  if (n % 2 == 0) {
    long long m = n / 2, cc = md(c);
    if (md(a) == m && cc != 1 && cc != md(-1) && cc != md(m + 1) && cc != md(m - 1) &&
        (md(cc * cc) == 1 || md(cc * cc) == md(m + 1)))
      return 2;
  }
  if (n % 4 == 0) {
    long long k = n / 4;
    if (k >= 3 && md(a) == 2 * k && md(c) == k + 1) return 3;
  }
  return 0;
}

CycleDecomposition px_decomposition(int n, int k) {
  Graph g = praeger_xu(n, k);
  const int w = 1 << k, hi = 1 << (k - 1);
  auto id = [&](int j, int x) { return (j % n) * w + x; };
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < hi; ++x) cycles.push_back({id(i, x), id(i + 1, 2 * x), id(i, x + hi), id(i + 1, 2 * x + 1)});
  return CycleDecomposition(std::move(g), std::move(cycles));
}

CycleDecomposition torus_decomposition(TorusKind kind, int b, int c) {
  Graph g = toroidal(kind, b, c);
  auto u = torus_lattice(kind, b, c);
  LatticeForm f = lattice_normal_form(u[0], u[1]);
  std::vector<ColoredEdge> e;
  for (long long y = 0; y < f.t; ++y)
    for (long long x = 0; x < f.r; ++x) {
      int v = torus_vertex(f, x, y);
      e.push_back({v, torus_vertex(f, x + 1, y), red});
      e.push_back({v, torus_vertex(f, x, y + 1), green});
    }
  return from_colored_edges(g.order(), e);
}

FiniteGroup dihedral_group(int n) {
  require(n >= 3, "D_n needs n >= 3");
  FiniteGroup out;
  out.count = 2 * static_cast<std::size_t>(n);
  out.multiply = [n](std::size_t p, std::size_t q) {
    long long k1 = p / 2, f1 = p % 2, k2 = q / 2, f2 = q % 2;
    return static_cast<std::size_t>(2 * mod(k1 + (f1 ? -k2 : k2), n) + (f1 ^ f2));
  };
  return out;
}

std::size_t PermFiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) throw ParameterError("permutation is not in the group");
  return static_cast<std::size_t>(it - elements.begin());
}

PermFiniteGroup finite_group_from_perms(std::size_t degree, const std::vector<Perm>& gens, std::size_t limit) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& s : gens) {
      Perm p = queue[head] * s;
      if (seen.insert(p).second) {
        if (seen.size() > limit) throw ResourceLimit("group closure exceeds its element limit");
        queue.push_back(p);
      }
    }
  auto data = std::make_shared<PermFiniteGroup>();
  data->elements.assign(seen.begin(), seen.end());  // identity sorts first
  PermFiniteGroup out;
  out.elements = data->elements;
  out.group.count = data->elements.size();
  out.group.identity = data->index_of(Perm::identity(degree));
  out.group.multiply = [data](std::size_t p, std::size_t q) {
    return data->index_of(data->elements[p] * data->elements[q]);
  };
  return out;
}

namespace {

std::size_t inverse_of(const FiniteGroup& A, std::size_t x) {
  for (std::size_t y = 0; y < A.count; ++y)
    if (A.multiply(x, y) == A.identity) return y;
  throw ParameterError("element has no inverse");
}

void check_pair(const FiniteGroup& A, std::array<std::size_t, 2> S, const char* name) {
  for (auto s : S) require(s < A.count, std::string(name) + " element out of range");
  require(S[0] != S[1], std::string(name) + " needs two distinct elements");
  for (auto s : S) {
    require(s != A.identity, std::string(name) + " must not contain the identity");
    auto inv = inverse_of(A, s);
    require(inv == S[0] || inv == S[1], std::string(name) + " must be closed under inverses");
  }
}

// Extends the generator images along a spanning tree and checks the result is an automorphism.
bool extends_to_automorphism(const FiniteGroup& A, const std::vector<std::size_t>& gens,
                             const std::vector<std::size_t>& images) {
  std::vector<std::size_t> phi(A.count, A.count);
  std::vector<std::size_t> queue{A.identity};
  phi[A.identity] = A.identity;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t y = A.multiply(queue[head], gens[i]);
      if (phi[y] == A.count) {
        phi[y] = A.multiply(phi[queue[head]], images[i]);
        queue.push_back(y);
      }
    }
  if (queue.size() != A.count) return false;
  std::vector<char> hit(A.count, 0);
  for (std::size_t x = 0; x < A.count; ++x) {
    if (hit[phi[x]]) return false;
    hit[phi[x]] = 1;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (phi[A.multiply(x, gens[i])] != A.multiply(phi[x], images[i])) return false;
  }
  return true;
}

}  // namespace

CycleDecomposition cayley_lr(const FiniteGroup& A, std::array<std::size_t, 2> R, std::array<std::size_t, 2> G,
                             const std::vector<std::size_t>& quotient) {
  check_pair(A, R, "R");
  check_pair(A, G, "G");
  for (auto r : R) require(r != G[0] && r != G[1], "R and G must be disjoint");
  std::vector<int> cls(A.count, -1);
  int nv = 0;
  if (quotient.empty()) {
    std::iota(cls.begin(), cls.end(), 0);
    nv = static_cast<int>(A.count);
  } else {
    DisjointSets ds(A.count);
    for (std::size_t a = 0; a < A.count; ++a)
      for (auto q : quotient) ds.unite(a, A.multiply(a, q));
    std::vector<int> label(A.count, -1);
    for (std::size_t a = 0; a < A.count; ++a) {
      auto root = ds.find(a);
      if (label[root] < 0) label[root] = nv++;
      cls[a] = label[root];
    }
  }
  std::map<std::pair<int, int>, int> color;
  std::vector<char> done(nv, 0);
  for (std::size_t a = 0; a < A.count; ++a) {
    int x = cls[a];
    if (done[x]) continue;
    done[x] = 1;
    for (int c = 0; c < 2; ++c) {
      const auto& S = c == red ? R : G;
      int y0 = cls[A.multiply(S[0], a)], y1 = cls[A.multiply(S[1], a)];
      if (y0 == x || y1 == x || y0 == y1) throw DegenerateParameters("Cayley LR quotient collapses");
      for (int y : {y0, y1}) {
        auto [it, fresh] = color.emplace(std::make_pair(std::min(x, y), std::max(x, y)), c);
        if (!fresh && it->second != c) throw DegenerateParameters("red and green edges coincide");
      }
    }
  }
  std::vector<ColoredEdge> e;
  for (const auto& [uv, c] : color) e.push_back({uv.first, uv.second, c});
  std::vector<std::pair<int, int>> pairs;
  for (const auto& x : e) pairs.emplace_back(x.u, x.v);
  if (!is_connected(build_graph(nv, pairs))) throw ParameterError("R and G do not generate the group");
  return from_colored_edges(nv, e);
}

bool automorphism_pair_condition(const FiniteGroup& A, std::array<std::size_t, 2> R, std::array<std::size_t, 2> G) {
  std::vector<std::size_t> gens{R[0], R[1], G[0], G[1]};
  return extends_to_automorphism(A, gens, {R[0], R[1], G[1], G[0]}) &&
         extends_to_automorphism(A, gens, {R[1], R[0], G[0], G[1]});
}

bool rg_differs_from_gr(const FiniteGroup& A, std::array<std::size_t, 2> R, std::array<std::size_t, 2> G) {
  std::set<std::size_t> rg, gr;
  for (auto r : R)
    for (auto g : G) {
      rg.insert(A.multiply(r, g));
      gr.insert(A.multiply(g, r));
    }
  return rg != gr;
}

FiniteGroup AffineGroup::group() const {
  const int dim = static_cast<int>(pi.size());
  std::size_t nd = 1;
  for (int i = 0; i < dim; ++i) {
    nd *= static_cast<std::size_t>(n);
    if (nd * period > 2'000'000) throw ResourceLimit("affine group too large");
  }
  // powers[e][i]: where coordinate i goes under pi^e.
  std::vector<std::vector<int>> powers(period, std::vector<int>(dim));
  for (int i = 0; i < dim; ++i) powers[0][i] = i;
  for (int e = 1; e < period; ++e)
    for (int i = 0; i < dim; ++i) powers[e][i] = pi[powers[e - 1][i]];
  FiniteGroup out;
  out.count = nd * period;
  out.multiply = [n = n, dim, nd, period = period, powers](std::size_t p, std::size_t q) {
    std::size_t ep = p / nd, eq = q / nd, vp = p % nd, vq = q % nd;
    std::vector<int> v(dim), w(dim);
    for (int i = 0; i < dim; ++i, vp /= n, vq /= n) {
      v[i] = static_cast<int>(vp % n);
      w[i] = static_cast<int>(vq % n);
    }
    for (int i = 0; i < dim; ++i) v[powers[ep][i]] = (v[powers[ep][i]] + w[i]) % n;
    std::size_t idx = 0;
    for (int i = dim - 1; i >= 0; --i) idx = idx * n + v[i];
    return ((ep + eq) % period) * nd + idx;
  };
  return out;
}

std::size_t AffineGroup::translation(const std::vector<int>& v) const {
  std::size_t idx = 0;
  for (int i = static_cast<int>(pi.size()) - 1; i >= 0; --i) idx = idx * n + static_cast<std::size_t>(mod(v[i], n));
  return idx;
}

std::size_t AffineGroup::rotation(int e) const {
  std::size_t nd = 1;
  for (std::size_t i = 0; i < pi.size(); ++i) nd *= static_cast<std::size_t>(n);
  return static_cast<std::size_t>(mod(e, period)) * nd;
}

namespace {

AffineGroup cyclic_shift(int n, int dim) {
  AffineGroup a;
  a.n = n;
  a.pi.resize(dim);
  for (int i = 0; i < dim; ++i) a.pi[i] = (i + 1) % dim;
  a.period = dim;
  return a;
}

std::vector<int> unit(int dim, int i, int value = 1) {
  std::vector<int> v(dim, 0);
  v[i] = value;
  return v;
}

CayleyLRSpec shift_spec(int n, int dim) {
  require(n >= 3 && dim >= 3, "AffLR(n,k) needs n, k >= 3");
  AffineGroup a = cyclic_shift(n, dim);
  return {a.group(), {a.translation(unit(dim, 0)), a.translation(unit(dim, 0, -1))}, {a.rotation(1), a.rotation(-1)}, {}};
}

CayleyLRSpec two_cycle_spec(int k) {
  require(k >= 3, "AffLR_2(k) needs k >= 3");
  AffineGroup a;
  a.n = 2;
  a.pi.resize(2 * k);
  for (int i = 0; i < k; ++i) {
    a.pi[i] = (i + 1) % k;
    a.pi[k + i] = k + (i + 1) % k;
  }
  a.period = k;
  return {a.group(), {a.translation(unit(2 * k, 0)), a.translation(unit(2 * k, k))}, {a.rotation(1), a.rotation(-1)}, {}};
}

std::size_t translation_of(int n, int dim, const std::vector<int>& v) {
  std::size_t idx = 0;
  for (int i = dim - 1; i >= 0; --i) idx = idx * n + static_cast<std::size_t>(mod(v[i], n));
  return idx;
}

}  // namespace

CayleyLRSpec aff_lr_spec(int n, int k) { return shift_spec(n, k); }

CayleyLRSpec proj_lr_spec(int k, int n) {
  CayleyLRSpec s = shift_spec(n, k);
  s.quotient.push_back(translation_of(n, k, std::vector<int>(k, 1)));
  return s;
}

CayleyLRSpec proj_lr_circ_spec(int k2, int n) {
  require(k2 % 2 == 0, "ProjLR°(2k,n) needs an even first argument");
  CayleyLRSpec s = shift_spec(n, k2);
  const int k = k2 / 2;
  for (int i = 0; i < k; ++i) {
    auto d = unit(k2, i);
    d[i + k] = -1;
    s.quotient.push_back(translation_of(n, k2, d));
  }
  return s;
}

CayleyLRSpec aff_lr2_spec(int k) { return two_cycle_spec(k); }

CayleyLRSpec proj_lr_prime_spec(int k) {
  CayleyLRSpec s = two_cycle_spec(k);
  std::vector<int> d1(2 * k, 0), d2(2 * k, 0);
  std::fill(d1.begin(), d1.begin() + k, 1);
  std::fill(d2.begin() + k, d2.end(), 1);
  s.quotient = {translation_of(2, 2 * k, d1), translation_of(2, 2 * k, d2)};
  return s;
}

CayleyLRSpec proj_lr_dprime_spec(int k) {
  CayleyLRSpec s = two_cycle_spec(k);
  s.quotient = {translation_of(2, 2 * k, std::vector<int>(2 * k, 1))};
  return s;
}

CycleDecomposition cayley_lr(const CayleyLRSpec& s) { return cayley_lr(s.group, s.R, s.G, s.quotient); }

std::vector<std::vector<int>> alternating_cycles(const Orientation& o) {
  const int n = o.order();
  for (int v = 0; v < n; ++v) {
    int a = o.out_valence(v), b = o.in_valence(v);
    if ((a != 0 && a != 2) || (b != 0 && b != 2))
      throw ParameterError("alternating cycles need in- and out-degree 0 or 2 at every vertex");
  }
  auto other = [](const std::vector<int>& two, int x) { return two[0] == x ? two[1] : two[0]; };
  std::set<Dart> used;
  std::vector<std::vector<int>> out;
  for (const auto& start : o.darts()) {
    if (used.count(start)) continue;
    used.insert(start);
    std::vector<int> cyc;
    int prev = start.tail, cur = start.head;
    bool at_head = true;
    while (true) {
      cyc.push_back(cur);
      int next = at_head ? other(o.in(cur), prev) : other(o.out(cur), prev);
      Dart d = at_head ? Dart{next, cur} : Dart{cur, next};
      if (d == start) break;
      used.insert(d);
      prev = cur;
      cur = next;
      at_head = !at_head;
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleDecomposition alternating_decomposition(const Graph& g, const Orientation& o) {
  if (!o.in_out_valence(2)) throw ParameterError("alternating decomposition needs in- and out-valence 2");
  return CycleDecomposition(g, alternating_cycles(o));
}

}  // namespace tetra
