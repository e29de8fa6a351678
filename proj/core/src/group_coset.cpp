#include "tetra/group_coset.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

#include "tetra/symmetry.hpp"

namespace tetra {

namespace {

struct NPart {
  std::uint32_t v;
  int zeta;
};

// x^v x^w = x^{v+w} z^{beta(v,w)}: each x_j of w passes the x_{j+t} of v.
int beta(std::uint32_t v, std::uint32_t w, int t) {
  std::uint32_t low = (1u << t) - 1;
  return std::popcount((v >> t) & w & low) & 1;
}

// a x^w a^-1 = prod x_{j-1}: x_{2t-1} (from x_0) must pass x_{t-1} (from x_t).
NPart conj_a(NPart p, int t) {
  const int n = 2 * t;
  std::uint32_t w = p.v;
  int z = p.zeta ^ (static_cast<int>(w & 1) & static_cast<int>((w >> t) & 1));
  std::uint32_t rot = (w >> 1) | ((w & 1) << (n - 1));
  return {rot, z};
}

// b x_j b = x_{t-1-j}: reverses each half, both halves stay in order.
NPart conj_b(NPart p, int t) {
  std::uint32_t out = 0;
  for (int j = 0; j < 2 * t; ++j)
    if ((p.v >> j) & 1) {
      int img = j < t ? t - 1 - j : 3 * t - 1 - j;
      out |= 1u << img;
    }
  return {out, p.zeta};
}

void check_same(const GtElement& p, const GtElement& q) {
  if (p.t != q.t || p.epsilon != q.epsilon) throw ParameterError("G_t^eps elements from different groups");
}

}  // namespace

GtGroup::GtGroup(int t, int epsilon) : t_(t), eps_(epsilon) {
  if (t < 2 || t > 8) throw ParameterError("G_t^eps needs 2 <= t <= 8");
  if (epsilon != 0 && epsilon != 1) throw ParameterError("epsilon must be 0 or 1");
}

GtElement GtGroup::x(int i) const {
  if (i < 0 || i >= 2 * t_) throw ParameterError("x_i index out of range");
  return {1u << i, 0, 0, 0, eps_, t_};
}
GtElement GtGroup::z() const { return {0, 1, 0, 0, eps_, t_}; }
GtElement GtGroup::a() const { return {0, 0, 1, 0, eps_, t_}; }
GtElement GtGroup::b() const { return {0, 0, 0, 1, eps_, t_}; }

std::size_t GtGroup::index(const GtElement& g) const {
  return ((std::size_t(g.v) * 2 + g.zeta) * (2 * t_) + g.ak) * 2 + g.bm;
}

GtElement GtGroup::element(std::size_t idx) const {
  GtElement g{0, 0, 0, 0, eps_, t_};
  g.bm = static_cast<int>(idx % 2);
  idx /= 2;
  g.ak = static_cast<int>(idx % (2 * t_));
  idx /= 2 * t_;
  g.zeta = static_cast<int>(idx % 2);
  g.v = static_cast<std::uint32_t>(idx / 2);
  return g;
}

GtElement gt_multiply(const GtElement& p, const GtElement& q) {
  check_same(p, q);
  const int t = p.t, n = 2 * t;
  // Move a^k b^m of p past x^w z^eta of q.
  NPart w{q.v, q.zeta};
  if (p.bm) w = conj_b(w, t);
  for (int i = 0; i < p.ak; ++i) w = conj_a(w, t);
  GtElement r = p;
  r.zeta = p.zeta ^ w.zeta ^ beta(p.v, w.v, t);
  r.v = p.v ^ w.v;
  // a^k b^m a^l b^n = a^{k +- l} b^{m+n}, and a^{2t} = z^eps.
  int K = p.ak + (p.bm ? -q.ak : q.ak);
  int wraps = K >= 0 ? K / n : -((-K + n - 1) / n);
  r.ak = K - wraps * n;
  if (p.epsilon && (wraps & 1)) r.zeta ^= 1;
  r.bm = p.bm ^ q.bm;
  return r;
}

GtElement gt_inverse(const GtElement& p) {
  GtElement id{0, 0, 0, 0, p.epsilon, p.t};
  GtElement prev = id, cur = p;
  while (!(cur == id)) {
    prev = cur;
    cur = gt_multiply(cur, p);
  }
  return prev;
}

GtElement gt_power(const GtElement& p, long long k) {
  GtElement base = k < 0 ? gt_inverse(p) : p;
  GtElement r{0, 0, 0, 0, p.epsilon, p.t};
  for (long long e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) r = gt_multiply(r, base);
    base = gt_multiply(base, base);
  }
  return r;
}

CosetGraph coset_graph(const CosetGraphSpec& spec) {
  if (spec.in_h(spec.a)) throw ParameterError("coset graph connecting element lies in H");
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < spec.count; ++i)
    if (spec.in_h(i)) h.push_back(i);
  DisjointSets ds(spec.count);
  for (std::size_t g = 0; g < spec.count; ++g)
    for (std::size_t x : h) ds.unite(g, spec.multiply(x, g));
  CosetGraph out;
  out.coset_of.assign(spec.count, -1);
  int nv = 0;
  std::vector<int> root_vertex(spec.count, -1);
  for (std::size_t g = 0; g < spec.count; ++g) {
    std::size_t r = ds.find(g);
    if (root_vertex[r] < 0) root_vertex[r] = nv++;
    out.coset_of[g] = root_vertex[r];
  }
  // One edge instance {Hg, Hag} per element g; the simple graph keeps distinct pairs.
  std::vector<std::pair<int, int>> edges;
  for (std::size_t g = 0; g < spec.count; ++g) {
    int u = out.coset_of[g], v = out.coset_of[spec.multiply(spec.a, g)];
    if (u == v) {
      out.had_loops = true;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::pair<int, int>> distinct;
  std::vector<std::size_t> mult;
  for (const auto& e : edges) {
    if (!distinct.empty() && distinct.back() == e)
      ++mult.back();
    else {
      distinct.push_back(e);
      mult.push_back(1);
    }
  }
  if (!mult.empty()) {
    out.min_instances = *std::min_element(mult.begin(), mult.end());
    out.max_instances = *std::max_element(mult.begin(), mult.end());
  }
  out.graph = build_graph(nv, distinct);
  return out;
}

Graph ppm(int t, int epsilon) {
  if (t > 6) throw ResourceLimit("PPM is supported for t <= 6");
  GtGroup G(t, epsilon);
  const std::uint32_t low = (1u << t) - 1;
  CosetGraphSpec spec;
  spec.count = G.order();
  spec.multiply = [&G](std::size_t p, std::size_t q) { return G.index(gt_multiply(G.element(p), G.element(q))); };
  // H = {x^v b^m : supp(v) in [0,t)}.
  spec.in_h = [&G, low](std::size_t i) {
    GtElement g = G.element(i);
    return g.zeta == 0 && g.ak == 0 && (g.v & ~low) == 0;
  };
  spec.a = G.index(G.a());
  return coset_graph(spec).graph;
}

// ---------------------------------------------------------------------------
// Covering search

namespace {

struct CoverSearch {
  const Graph& cover;
  const Graph& base;
  int fold;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> f, fiber, order;

  bool fits(int u, int c) {
    if (fiber[c] >= fold || cover.degree(u) != base.degree(c)) return false;
    const auto& nu = cover.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      int w = nu[i];
      if (f[w] < 0) continue;
      if (!base.adjacent(c, f[w])) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (f[nu[j]] == f[w]) return false;
      for (int x : cover.neighbors(w))
        if (x != u && f[x] == c) return false;
    }
    return true;
  }

  void assign(int u, int c) {
    f[u] = c;
    ++fiber[c];
    order.push_back(u);
  }
  void unassign(int u) {
    --fiber[f[u]];
    f[u] = -1;
    order.pop_back();
  }

  // Extends the map over the unmapped neighbors of order[pos], then moves on.
  bool neighbors(std::size_t pos, std::vector<int>& todo, std::size_t i) {
    if (i == todo.size()) return step(pos + 1);
    int u = todo[i];
    int v = order[pos];
    for (int c : base.neighbors(f[v])) {
      if (!fits(u, c)) continue;
      if (++nodes > budget) throw ResourceLimit("cover search budget");
      assign(u, c);
      if (neighbors(pos, todo, i + 1)) return true;
      unassign(u);
    }
    return false;
  }

  bool step(std::size_t pos) {
    if (pos == order.size()) {
      int u = -1;
      for (int x = 0; x < cover.order(); ++x)
        if (f[x] < 0) {
          u = x;
          break;
        }
      if (u < 0) return true;
      for (int c = 0; c < base.order(); ++c) {
        if (!fits(u, c)) continue;
        assign(u, c);
        if (step(pos)) return true;
        unassign(u);
      }
      return false;
    }
    std::vector<int> todo;
    for (int w : cover.neighbors(order[pos]))
      if (f[w] < 0) todo.push_back(w);
    return neighbors(pos, todo, 0);
  }
};

}  // namespace

bool verify_cover(const Graph& cover, const Graph& base, const std::vector<int>& map, int fold) {
  if (cover.order() != fold * base.order() || static_cast<int>(map.size()) != cover.order()) return false;
  std::vector<int> fiber(base.order(), 0);
  for (int c : map) {
    if (c < 0 || c >= base.order()) return false;
    ++fiber[c];
  }
  for (int k : fiber)
    if (k != fold) return false;
  for (int v = 0; v < cover.order(); ++v) {
    std::vector<int> img;
    for (int w : cover.neighbors(v)) img.push_back(map[w]);
    std::sort(img.begin(), img.end());
    if (img != base.neighbors(map[v])) return false;
  }
  return true;
}

bool verify_double_cover(const Graph& cover, const Graph& base, const std::vector<int>& map) {
  return verify_cover(cover, base, map, 2);
}

namespace {

constexpr long long kDeckEnumerationLimit = 1 << 17;

// Every element of a small group, by closing the generators under products.
std::vector<Perm> all_elements(const PermGroup& g) {
  std::set<Perm> seen{Perm::identity(g.degree())};
  std::vector<Perm> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : g.generators()) {
      Perm p = queue[i] * s;
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  return queue;
}

// Quotient by a fixed-point-free involution, with the class of each vertex,
// when the projection is a bijection on every neighborhood.
std::optional<std::pair<Graph, std::vector<int>>> deck_quotient(const Graph& cover, const Perm& s) {
  const int n = cover.order();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int w = static_cast<int>(s(v));
    if (w == v) return std::nullopt;
    if (cls[v] < 0) cls[v] = cls[w] = next++;
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    std::vector<int> seen;
    for (int w : cover.neighbors(v)) {
      if (cls[w] == cls[v] || std::find(seen.begin(), seen.end(), cls[w]) != seen.end()) return std::nullopt;
      seen.push_back(cls[w]);
      if (v < w) edges.emplace_back(cls[v], cls[w]);
    }
  }
  return std::make_pair(build_graph(next, edges), std::move(cls));
}

}  // namespace

CoverResult is_double_cover(const Graph& cover, const Graph& base, std::uint64_t node_budget) {
  // A connected double cover is the quotient by its fiber swap, which is an
  // automorphism; with a small group every involution can be tried.
  if (cover.order() == 2 * base.order() && cover.size() == 2 * base.size() && cover.order() > 0 &&
      is_connected(cover)) {
    AutResult aut = automorphism_group(cover);
    if (aut.order() <= kDeckEnumerationLimit) {
      CoverResult res;
      res.found = Tri::no;
      const CanonicalForm cb = canonical_form(base);
      const Perm back = cb.relabeling.inverse();
      for (const auto& p : all_elements(aut.group)) {
        if (p.is_identity() || !(p * p).is_identity()) continue;
        auto q = deck_quotient(cover, p);
        if (!q) continue;
        const CanonicalForm cq = canonical_form(q->first);
        if (cq.certificate != cb.certificate) continue;
        res.found = Tri::yes;
        res.map.resize(cover.order());
        for (int v = 0; v < cover.order(); ++v) res.map[v] = static_cast<int>(back(cq.relabeling(q->second[v])));
        return res;
      }
      return res;
    }
  }
  return is_cover(cover, base, 2, node_budget);
}

CoverResult is_cover(const Graph& cover, const Graph& base, int fold, std::uint64_t node_budget) {
  CoverResult res;
  res.found = Tri::no;
  if (fold < 1 || cover.order() != fold * base.order() || cover.size() != fold * base.size()) return res;
  if (cover.order() == 0) {
    res.found = Tri::yes;
    return res;
  }
  // Cover vertex 0 only needs one image per orbit of Aut(base).
  AutResult aut = automorphism_group(base);
  try {
    for (const auto& orb : aut.vertex_orbits) {
      CoverSearch s{cover, base, fold, node_budget, 0, {}, {}, {}};
      s.f.assign(cover.order(), -1);
      s.fiber.assign(base.order(), 0);
      int c = static_cast<int>(orb.front());
      if (!s.fits(0, c)) continue;
      s.assign(0, c);
      if (s.step(0)) {
        res.found = Tri::yes;
        res.map = s.f;
        return res;
      }
      node_budget -= std::min(node_budget, s.nodes);
    }
  } catch (const ResourceLimit&) {
    res.found = Tri::unknown;
  }
  return res;
}

}  // namespace tetra
