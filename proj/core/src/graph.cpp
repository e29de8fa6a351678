#include "tetra/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace tetra {

std::size_t Graph::size() const {
  std::size_t s = 0;
  for (const auto& a : adj_) s += a.size();
  return s / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(size());
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Dart> Graph::darts() const {
  std::vector<Dart> out;
  out.reserve(dart_count());
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u]) out.push_back({u, v});
  return out;
}

DartIndexer::DartIndexer(const Graph& g) : g_(&g), offset_(g.order() + 1, 0) {
  for (int u = 0; u < g.order(); ++u) offset_[u + 1] = offset_[u] + g.neighbors(u).size();
  edge_of_dart_.assign(offset_.back(), 0);
  std::size_t e = 0;
  for (int u = 0; u < g.order(); ++u)
    for (std::size_t k = 0; k < g.neighbors(u).size(); ++k) {
      int v = g.neighbors(u)[k];
      if (u < v) {
        edge_of_dart_[offset_[u] + k] = e;
        edge_of_dart_[dart(v, u)] = e;
        ++e;
      }
    }
}

std::size_t DartIndexer::dart(int tail, int head) const {
  const auto& a = g_->neighbors(tail);
  auto it = std::lower_bound(a.begin(), a.end(), head);
  if (it == a.end() || *it != head) throw Error("DartIndexer: not an edge");
  return offset_[tail] + static_cast<std::size_t>(it - a.begin());
}

std::size_t DartIndexer::edge(int u, int v) const { return edge_of_dart_[dart(u, v)]; }

Graph Graph::with_colors(std::vector<int> colors) const {
  if (!colors.empty() && colors.size() != adj_.size()) throw ConstructionError("color vector length mismatch");
  Graph g = *this;
  g.colors_ = std::move(colors);
  return g;
}

Graph Graph::without_colors() const {
  Graph g = *this;
  g.colors_.clear();
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph g(order());
  for (int u = 0; u < order(); ++u) {
    auto& a = g.adj_[perm[u]];
    for (int v : adj_[u]) a.push_back(perm[v]);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  if (has_colors()) {
    g.colors_.assign(colors_.size(), 0);
    for (int u = 0; u < order(); ++u) g.colors_[perm[u]] = colors_[u];
  }
  return g;
}

namespace {

Graph build_impl(int n, const std::vector<std::pair<int, int>>& edges, bool strict) {
  if (n < 0) throw ConstructionError("negative vertex count");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ConstructionError("vertex index out of range");
    if (u == v) {
      if (strict) throw DegenerateParameters("edge rule produces a loop at vertex " + std::to_string(u));
      throw ConstructionError("self-loop at vertex " + std::to_string(u));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (std::size_t u = 0; u < adj.size(); ++u) {
    auto& a = adj[u];
    std::sort(a.begin(), a.end());
    auto last = std::unique(a.begin(), a.end());
    if (strict && last != a.end())
      throw DegenerateParameters("edge rule produces parallel edges at vertex " + std::to_string(u));
    a.erase(last, a.end());
  }
  return Graph::from_sorted_adjacency(std::move(adj));
}

}  // namespace

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) { return build_impl(n, edges, false); }

Graph build_simple_graph(int n, const std::vector<std::pair<int, int>>& edges) { return build_impl(n, edges, true); }

bool is_regular_of_valence(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int v = 0; v < g.order(); ++v) (side[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

namespace {

std::vector<int> bfs_dist(const Graph& g, int s) {
  std::vector<int> dist(g.order(), -1);
  dist[s] = 0;
  std::deque<int> q{s};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_dist(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

Component connected_component(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw ConstructionError("connected_component: vertex out of range");
  auto dist = bfs_dist(g, v);
  Component c;
  c.old_to_new.assign(g.order(), -1);
  for (int u = 0; u < g.order(); ++u)
    if (dist[u] >= 0) {
      c.old_to_new[u] = static_cast<int>(c.new_to_old.size());
      c.new_to_old.push_back(u);
    }
  std::vector<std::pair<int, int>> edges;
  for (int u : c.new_to_old)
    for (int w : g.neighbors(u))
      if (u < w) edges.emplace_back(c.old_to_new[u], c.old_to_new[w]);
  c.graph = build_graph(static_cast<int>(c.new_to_old.size()), edges);
  if (g.has_colors()) {
    std::vector<int> col;
    for (int u : c.new_to_old) col.push_back(g.colors()[u]);
    c.graph = c.graph.with_colors(std::move(col));
  }
  return c;
}

int girth(const Graph& g) {
  // BFS from every vertex; the shortest cycle through the root closes at
  // the first non-tree edge met.
  int best = std::numeric_limits<int>::max();
  const int n = g.order();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) throw UndefinedValue("girth: graph is acyclic");
  return best;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_dist(g, s)) {
      if (d < 0) throw UndefinedValue("diameter: graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

// graph6: N(n) followed by the upper triangle in column order, six bits per byte.
std::string encode_g6(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
  } else {
    out += "~~";
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
  }
  int acc = 0, nbits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph decode_g6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6: unexpected end of input", at);
    int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", at);
    return c - 63;
  };
  std::size_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::size_t>(byte(pos + 2 + k));
      pos += 8;
    } else {
      for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(byte(pos + 1 + k));
      pos += 4;
    }
  } else {
    n = static_cast<std::size_t>(byte(pos));
    pos += 1;
  }
  if (n > static_cast<std::size_t>(std::numeric_limits<int>::max())) throw ParseError("graph6: order too large", 0);
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos > nbytes) throw ParseError("graph6: trailing bytes", pos + nbytes);
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      int b = byte(pos + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (nbits % 6 != 0) {
    int last = byte(pos + nbytes - 1);
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", pos + nbytes - 1);
  }
  return build_graph(static_cast<int>(n), edges);
}

Orientation::Orientation(int n, std::vector<Dart> darts) : n_(n), darts_(std::move(darts)) {
  out_.assign(n, {});
  in_.assign(n, {});
  for (const auto& d : darts_) {
    if (d.tail < 0 || d.head < 0 || d.tail >= n || d.head >= n) throw ConstructionError("dart index out of range");
    if (d.tail == d.head) throw ConstructionError("orientation: loop dart");
    out_[d.tail].push_back(d.head);
    in_[d.head].push_back(d.tail);
  }
  for (auto& a : out_) std::sort(a.begin(), a.end());
  for (auto& a : in_) std::sort(a.begin(), a.end());
}

Orientation Orientation::of_graph(const Graph& base, std::vector<Dart> darts) {
  if (darts.size() != base.size()) throw ConstructionError("orientation: need exactly one dart per edge");
  std::vector<EdgeId> seen;
  for (const auto& d : darts) {
    if (!base.adjacent(d.tail, d.head)) throw ConstructionError("orientation: dart is not an edge of the base graph");
    seen.emplace_back(d.tail, d.head);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw ConstructionError("orientation: edge oriented twice");
  return Orientation(base.order(), std::move(darts));
}

bool Orientation::has_dart(int u, int v) const { return std::binary_search(out_[u].begin(), out_[u].end(), v); }

bool Orientation::is_simple() const {
  std::vector<EdgeId> e;
  for (const auto& d : darts_) e.emplace_back(d.tail, d.head);
  std::sort(e.begin(), e.end());
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

bool Orientation::in_out_valence(int d) const {
  for (int v = 0; v < n_; ++v)
    if (out_valence(v) != d || in_valence(v) != d) return false;
  return true;
}

Orientation Orientation::reversed() const {
  std::vector<Dart> r;
  r.reserve(darts_.size());
  for (const auto& d : darts_) r.push_back({d.head, d.tail});
  return Orientation(n_, std::move(r));
}

Graph Orientation::underlying() const {
  std::vector<std::pair<int, int>> e;
  for (const auto& d : darts_) e.emplace_back(d.tail, d.head);
  return build_simple_graph(n_, e);
}

Orientation doubled_cycle(int n) {
  if (n < 2) throw ParameterError("doubled_cycle: n must be at least 2");
  std::vector<Dart> d;
  for (int i = 0; i < n; ++i) {
    d.push_back({i, (i + 1) % n});
    d.push_back({(i + 1) % n, i});
  }
  return Orientation(n, std::move(d));
}

}  // namespace tetra
