#include "tetra/derived.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tetra/symmetry.hpp"

namespace tetra {

namespace {

void require_valence(const Graph& g, int d, const char* what) {
  if (!is_regular_of_valence(g, d))
    throw ParameterError(std::string(what) + " needs a " + (d == 3 ? "cubic" : "tetravalent") + " graph");
}

}  // namespace

Graph subdivision(const Graph& g) {
  const int n = g.order();
  auto edges = g.edges();
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int m = n + static_cast<int>(i);
    e.emplace_back(edges[i].u, m);
    e.emplace_back(m, edges[i].v);
  }
  return build_graph(n + static_cast<int>(edges.size()), e);
}

Graph smooth(const Graph& g) {
  const int n = g.order();
  std::vector<char> gone(n, 0);
  for (int v = n - 1; v >= 0; --v) {
    if (g.degree(v) != 2) continue;
    bool free = true;
    for (int w : g.neighbors(v)) free = free && !gone[w];
    if (free) gone[v] = 1;
  }
  std::vector<int> label(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) label[v] = m++;
  std::set<std::pair<int, int>> e;
  auto add = [&](int a, int b) {
    if (a == b) throw DegenerateParameters("smoothing produces a loop");
    if (!e.insert({std::min(a, b), std::max(a, b)}).second)
      throw DegenerateParameters("smoothing produces parallel edges");
  };
  for (const auto& x : g.edges())
    if (!gone[x.u] && !gone[x.v]) add(label[x.u], label[x.v]);
  for (int v = 0; v < n; ++v)
    if (gone[v]) add(label[g.neighbors(v)[0]], label[g.neighbors(v)[1]]);
  return build_graph(m, {e.begin(), e.end()});
}

Graph sdd(const Graph& g) {
  require_valence(g, 4, "SDD");
  const int n = g.order();
  auto edges = g.edges();
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int w = 2 * n + static_cast<int>(i);
    for (int end : {edges[i].u, edges[i].v})
      for (int b = 0; b < 2; ++b) e.emplace_back(2 * end + b, w);
  }
  return build_simple_graph(2 * n + static_cast<int>(edges.size()), e);
}

Graph line_graph(const Graph& g) {
  DartIndexer idx(g);
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < g.order(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        e.emplace_back(static_cast<int>(idx.edge(v, nb[i])), static_cast<int>(idx.edge(v, nb[j])));
  }
  return build_graph(static_cast<int>(g.size()), e);
}

Graph dart_graph(const Graph& g) {
  DartIndexer idx(g);
  std::vector<std::pair<int, int>> e;
  for (int b = 0; b < g.order(); ++b)
    for (int a : g.neighbors(b))
      for (int c : g.neighbors(b))
        if (c != a) e.emplace_back(static_cast<int>(idx.dart(a, b)), static_cast<int>(idx.dart(b, c)));
  return build_graph(static_cast<int>(idx.darts()), e);
}

Graph hill_capping(const Graph& g) {
  require_valence(g, 3, "HC");
  DartIndexer idx(g);
  // Symbol pair {A_i, B_j}; the index stores the bit of the smaller endpoint first.
  auto vertex = [&](int A, int i, int B, int j) {
    int e = static_cast<int>(idx.edge(A, B));
    return A < B ? 4 * e + 2 * i + j : 4 * e + 2 * j + i;
  };
  std::vector<std::pair<int, int>> e;
  for (int B = 0; B < g.order(); ++B)
    for (int A : g.neighbors(B))
      for (int C : g.neighbors(B)) {
        if (C == A) continue;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) e.emplace_back(vertex(A, i, B, j), vertex(B, j, C, 1 - i));
      }
  return build_graph(4 * static_cast<int>(g.size()), e);
}

Graph three_arc_graph(const Graph& g) {
  DartIndexer idx(g);
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < g.order(); ++a)
    for (int c : g.neighbors(a))
      for (int b : g.neighbors(a)) {
        if (b == c) continue;
        for (int d : g.neighbors(c))
          if (d != a) e.emplace_back(static_cast<int>(idx.dart(a, b)), static_cast<int>(idx.dart(c, d)));
      }
  return build_graph(static_cast<int>(idx.darts()), e);
}

Graph partial_line_graph(const CycleDecomposition& cd) {
  const Graph& g = cd.base();
  DartIndexer idx(g);
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < g.order(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        auto x = idx.edge(v, nb[i]), y = idx.edge(v, nb[j]);
        if (cd.cycle_of_edge(x) != cd.cycle_of_edge(y)) e.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
  }
  return build_graph(static_cast<int>(g.size()), e);
}

OrientedGraph sep_box_product(const Orientation& d1, const Orientation& d2) {
  if (!d1.in_out_valence(2) || !d2.in_out_valence(2))
    throw ParameterError("separated box product needs in- and out-valence 2");
  const int n1 = d1.order(), n2 = d2.order();
  auto id = [n2](int a, int x, int s) { return (a * n2 + x) * 2 + s; };
  std::vector<Dart> darts;
  for (const auto& h : d1.darts())
    for (int x = 0; x < n2; ++x) darts.push_back({id(h.tail, x, 0), id(h.head, x, 1)});
  for (const auto& v : d2.darts())
    for (int b = 0; b < n1; ++b) darts.push_back({id(b, v.tail, 1), id(b, v.head, 0)});
  Orientation o(2 * n1 * n2, std::move(darts));
  std::vector<std::pair<int, int>> e;
  for (const auto& d : o.darts()) e.emplace_back(d.tail, d.head);
  Graph g = build_simple_graph(o.order(), e);
  return {std::move(g), std::move(o)};
}

EdgePairing::EdgePairing(Graph g, std::vector<int> k) : base(std::move(g)), kappa(std::move(k)) {
  if (kappa.size() != base.size()) throw ParameterError("pairing: one partner per edge required");
  for (std::size_t e = 0; e < kappa.size(); ++e) {
    int f = kappa[e];
    if (f < 0 || f >= static_cast<int>(kappa.size())) throw ParameterError("pairing: partner out of range");
    if (f == static_cast<int>(e)) throw ParameterError("pairing: edge paired with itself");
    if (kappa[f] != static_cast<int>(e)) throw ParameterError("pairing: not an involution");
  }
}

EdgePairing EdgePairing::from_pairs(Graph g, const std::vector<std::pair<EdgeId, EdgeId>>& pairs) {
  DartIndexer idx(g);
  std::vector<int> k(g.size(), -1);
  for (const auto& [a, b] : pairs) {
    if (!g.adjacent(a.u, a.v) || !g.adjacent(b.u, b.v)) throw ParameterError("pairing: not an edge");
    int x = static_cast<int>(idx.edge(a.u, a.v)), y = static_cast<int>(idx.edge(b.u, b.v));
    if (k[x] >= 0 || k[y] >= 0) throw ParameterError("pairing: edge used twice");
    k[x] = y;
    k[y] = x;
  }
  return EdgePairing(std::move(g), std::move(k));
}

Graph bgcg(const EdgePairing& p, Connection c, const std::vector<int>& coloring, bool primed) {
  const Graph& B = p.base;
  require_valence(B, 4, "BGCG");
  const int n = B.order(), m = static_cast<int>(B.size());
  const int copies = c.kind == Connection::cyc ? c.k : (c.kind == Connection::k2 ? 2 : 1);
  if (copies < 1) throw ParameterError("BGCG needs at least one copy");
  if (c.kind == Connection::cyc) {
    if (coloring.size() != static_cast<std::size_t>(m)) throw ParameterError("BGCG Cyc(k) needs an edge coloring");
    for (int e = 0; e < m; ++e) {
      if (coloring[e] != red && coloring[e] != green) throw ParameterError("BGCG coloring must be red or green");
      if (!primed && coloring[e] == coloring[p.kappa[e]])
        throw ParameterError("BGCG Cyc(k): every pair must meet both colors");
    }
    if (primed && c.k % 2 != 0) throw ParameterError("primed BGCG Cyc(k) needs k even");
  }
  // White vertex of edge e in copy i is i*m + e; merge them with union-find.
  DisjointSets ds(static_cast<std::size_t>(copies) * m);
  auto white = [m](int copy, int e) { return static_cast<std::size_t>(copy) * m + e; };
  for (int e = 0; e < m; ++e) {
    int f = p.kappa[e];
    switch (c.kind) {
      case Connection::k1:
        ds.unite(white(0, e), white(0, f));
        break;
      case Connection::k2:
        ds.unite(white(0, e), white(1, f));
        break;
      case Connection::cyc:
        for (int i = 0; i < copies; ++i) {
          int next = (i + 1) % copies;
          if (!primed) {
            if (coloring[e] == green) ds.unite(white(i, e), white(next, f));
          } else if ((i % 2 == 0 && coloring[e] == green) || (i % 2 == 1 && coloring[e] == red)) {
            ds.unite(white(i, e), white(next, e));
          }
        }
        break;
    }
  }
  std::vector<int> label(static_cast<std::size_t>(copies) * m, -1);
  int next_label = copies * n;
  auto edges = B.edges();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < copies; ++i)
    for (int e = 0; e < m; ++e) {
      std::size_t r = ds.find(white(i, e));
      if (label[r] < 0) label[r] = next_label++;
      out.emplace_back(i * n + edges[e].u, label[r]);
      out.emplace_back(i * n + edges[e].v, label[r]);
    }
  return build_simple_graph(next_label, out);
}

PermGroup pairing_automorphisms(const EdgePairing& p) {
  // Subdivide, then hang one pair vertex off the two midpoints of each pair.
  const Graph& B = p.base;
  const int n = B.order(), m = static_cast<int>(B.size());
  auto edges = B.edges();
  std::vector<std::pair<int, int>> e;
  std::vector<int> color(n + m + m / 2, 0);
  int pv = n + m;
  for (int i = 0; i < m; ++i) {
    e.emplace_back(edges[i].u, n + i);
    e.emplace_back(edges[i].v, n + i);
    color[n + i] = 1;
    if (i < p.kappa[i]) {
      e.emplace_back(n + i, pv);
      e.emplace_back(n + p.kappa[i], pv);
      color[pv++] = 2;
    }
  }
  Graph gadget = build_graph(pv, e).with_colors(std::move(color));
  SearchOptions opt;
  opt.primary = n;
  return analyze(gadget, opt).group;
}

bool pairing_is_dart_transitive(const EdgePairing& p) {
  PermGroup G = pairing_automorphisms(p);
  return dart_orbits(p.base, G.generators()).size() == 1;
}

}  // namespace tetra
