#include "tetra/symmetry.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <tuple>

namespace tetra {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return h ^ x;
}

struct Csr {
  int n = 0;
  std::vector<int> off, nbr;
  explicit Csr(const Graph& g) : n(g.order()), off(g.order() + 1, 0) {
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + g.degree(v);
    nbr.reserve(off[n]);
    for (int v = 0; v < n; ++v) nbr.insert(nbr.end(), g.neighbors(v).begin(), g.neighbors(v).end());
  }
};

struct Partition {
  std::vector<int> lab;   // position -> vertex
  std::vector<int> pos;   // vertex -> position
  std::vector<int> cell;  // vertex -> start of its cell
  std::vector<int> len;   // start -> cell length
  int ncells = 0;
  bool discrete() const { return ncells == static_cast<int>(lab.size()); }
};

// Raw search result on one (twin-free or not) colored graph.
struct CoreResult {
  std::vector<Perm> gens;
  std::vector<int> base;       // first-path individualized vertices
  std::vector<int> canon_lab;  // position -> vertex at the canonical leaf
  std::uint64_t nodes = 0;
};

class Searcher {
 public:
  Searcher(const Graph& g, const std::vector<int>& color, const std::vector<char>& aux, std::uint64_t budget)
      : G_(g), n_(g.order()), color_(color), aux_(aux), budget_(budget), cnt_(g.order(), 0), mark_(g.order(), 0),
        inq_(g.order(), 0) {}

  CoreResult run() {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) {
      return std::make_pair(aux_[a], color_[a]) < std::make_pair(aux_[b], color_[b]);
    });
    p.pos.assign(n_, 0);
    p.cell.assign(n_, 0);
    p.len.assign(n_, 0);
    std::vector<int> starts;
    for (int i = 0; i < n_;) {
      int j = i;
      auto key = std::make_pair(aux_[p.lab[i]], color_[p.lab[i]]);
      while (j < n_ && std::make_pair(aux_[p.lab[j]], color_[p.lab[j]]) == key) ++j;
      for (int k = i; k < j; ++k) p.cell[p.lab[k]] = i;
      p.len[i] = j - i;
      starts.push_back(i);
      ++p.ncells;
      i = j;
    }
    for (int i = 0; i < n_; ++i) p.pos[p.lab[i]] = i;
    std::uint64_t t0 = refine(p, starts);
    path_trace_.push_back(t0);
    eq_first_.push_back(1);
    cmp_best_.push_back(0);
    if (n_ > 0) search(p, 0);
    CoreResult r;
    r.gens = std::move(gens_);
    r.base = first_path_;
    r.canon_lab = best_lab_;
    r.nodes = nodes_;
    if (n_ == 0) r.canon_lab.clear();
    return r;
  }

 private:
  std::uint64_t refine(Partition& p, const std::vector<int>& init) {
    std::uint64_t h = 0x51ed27ULL;
    std::vector<int> queue(init);
    for (int s : init) inq_[s] = 1;
    std::size_t head = 0;
    std::vector<int> touched, tcells;
    while (head < queue.size()) {
      int w0 = queue[head++];
      inq_[w0] = 0;
      int wl = p.len[w0];
      touched.clear();
      for (int k = w0; k < w0 + wl; ++k) {
        int w = p.lab[k];
        for (int e = G_.off[w]; e < G_.off[w + 1]; ++e) {
          int x = G_.nbr[e];
          if (cnt_[x]++ == 0) touched.push_back(x);
        }
      }
      tcells.clear();
      for (int x : touched) {
        int c = p.cell[x];
        if (p.len[c] > 1 && !mark_[c]) {
          mark_[c] = 1;
          tcells.push_back(c);
        }
      }
      std::sort(tcells.begin(), tcells.end());
      for (int c : tcells) {
        mark_[c] = 0;
        int L = p.len[c];
        auto first = p.lab.begin() + c, last = first + L;
        int c0 = cnt_[*first];
        if (std::all_of(first, last, [&](int v) { return cnt_[v] == c0; })) continue;
        std::sort(first, last, [&](int a, int b) { return cnt_[a] < cnt_[b]; });
        for (int k = c; k < c + L; ++k) p.pos[p.lab[k]] = k;
        h = mix(h, static_cast<std::uint64_t>(w0) << 32 | static_cast<std::uint32_t>(c));
        bool was_queued = inq_[c];
        int best_start = c, best_len = 0, nfrag = 0;
        std::vector<int> frags;
        for (int k = c; k < c + L;) {
          int j = k;
          int val = cnt_[p.lab[k]];
          while (j < c + L && cnt_[p.lab[j]] == val) ++j;
          p.len[k] = j - k;
          for (int q = k; q < j; ++q) p.cell[p.lab[q]] = k;
          h = mix(h, static_cast<std::uint64_t>(val) << 32 | static_cast<std::uint32_t>(j - k));
          if (j - k > best_len) {
            best_len = j - k;
            best_start = k;
          }
          frags.push_back(k);
          ++nfrag;
          k = j;
        }
        p.ncells += nfrag - 1;
        for (int f : frags) {
          if (was_queued) {
            if (f != c) {
              queue.push_back(f);
              inq_[f] = 1;
            }
          } else if (f != best_start) {
            queue.push_back(f);
            inq_[f] = 1;
          }
        }
      }
      for (int x : touched) cnt_[x] = 0;
    }
    return mix(h, static_cast<std::uint64_t>(p.ncells));
  }

  std::uint64_t individualize(Partition& p, int v) {
    int c = p.cell[v];
    int L = p.len[c];
    int pv = p.pos[v];
    int u = p.lab[c];
    std::swap(p.lab[c], p.lab[pv]);
    p.pos[u] = pv;
    p.pos[v] = c;
    p.len[c] = 1;
    p.len[c + 1] = L - 1;
    for (int k = c + 1; k < c + L; ++k) p.cell[p.lab[k]] = c + 1;
    ++p.ncells;
    return refine(p, {c});
  }

  int target_cell(const Partition& p) const {
    int best = -1, best_len = 1;
    bool best_primary = false;
    for (int i = 0; i < n_; i += p.len[i]) {
      int L = p.len[i];
      if (L <= 1) continue;
      bool prim = !aux_[p.lab[i]];
      if (best < 0 || (prim && !best_primary) || (prim == best_primary && L > best_len)) {
        best = i;
        best_len = L;
        best_primary = prim;
      }
    }
    return best;
  }

  std::vector<std::uint32_t> certificate(const Partition& p) const {
    std::vector<std::uint32_t> cert;
    cert.reserve(G_.nbr.size());
    std::vector<std::uint32_t> row;
    for (int i = 0; i < n_; ++i) {
      int v = p.lab[i];
      row.clear();
      for (int e = G_.off[v]; e < G_.off[v + 1]; ++e) {
        int j = p.pos[G_.nbr[e]];
        if (j > i) row.push_back(static_cast<std::uint32_t>(j));
      }
      std::sort(row.begin(), row.end());
      cert.push_back(static_cast<std::uint32_t>(row.size()));
      cert.insert(cert.end(), row.begin(), row.end());
    }
    return cert;
  }

  int lcp(const std::vector<int>& a) const {
    std::size_t k = 0;
    while (k < a.size() && k < path_.size() && a[k] == path_[k]) ++k;
    return static_cast<int>(k);
  }

  Perm leaf_map(const std::vector<int>& from_lab, const std::vector<int>& to_lab) const {
    std::vector<Point> img(n_);
    for (int i = 0; i < n_; ++i) img[from_lab[i]] = static_cast<Point>(to_lab[i]);
    return Perm(std::move(img));
  }

  int leaf(const Partition& p, int level) {
    auto cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = cert;
      first_trace_ = best_trace_ = path_trace_;
      first_path_ = best_path_ = path_;
      return -1;
    }
    if (eq_first_[level] && cert == first_cert_) {
      gens_.push_back(leaf_map(first_lab_, p.lab));
      return lcp(first_path_);
    }
    if (cmp_best_[level] == 0 && cert == best_cert_) {
      gens_.push_back(leaf_map(best_lab_, p.lab));
      return lcp(best_path_);
    }
    int cmp = cmp_best_[level];
    if (cmp == 0 && path_trace_.size() < best_trace_.size()) cmp = -1;
    if (cmp < 0 || (cmp == 0 && cert < best_cert_)) {
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      best_trace_ = path_trace_;
      best_path_ = path_;
      std::fill(cmp_best_.begin(), cmp_best_.end(), 0);
    }
    return -1;
  }

  bool fixes_path(const Perm& g, int level) const {
    for (int k = 0; k < level; ++k)
      if (g(static_cast<Point>(path_[k])) != static_cast<Point>(path_[k])) return false;
    return true;
  }

  int search(const Partition& p, int level) {
    if (++nodes_ > budget_) throw ResourceLimit("automorphism search exceeded node budget");
    if (p.discrete()) return leaf(p, level);
    int tc = target_cell(p);
    std::vector<int> cands(p.lab.begin() + tc, p.lab.begin() + tc + p.len[tc]);
    std::sort(cands.begin(), cands.end());
    std::vector<int> explored;
    std::vector<int> parent;  // orbit union-find, built once generators apply
    std::size_t gens_seen = 0;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int w : cands) {
      if (!explored.empty() && gens_seen < gens_.size()) {
        for (; gens_seen < gens_.size(); ++gens_seen) {
          const Perm& g = gens_[gens_seen];
          if (!fixes_path(g, level)) continue;
          if (parent.empty()) {
            parent.resize(n_);
            std::iota(parent.begin(), parent.end(), 0);
          }
          for (int x = 0; x < n_; ++x) {
            int a = find(x), b = find(static_cast<int>(g(x)));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
      if (!parent.empty()) {
        int rw = find(w);
        bool seen = false;
        for (int e : explored)
          if (find(e) == rw) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      explored.push_back(w);
      Partition q = p;
      std::uint64_t t = individualize(q, w);
      path_.push_back(w);
      path_trace_.push_back(t);
      int lv = level + 1;
      char eq = eq_first_[level] && (!have_first_ || (lv < static_cast<int>(first_trace_.size()) && first_trace_[lv] == t));
      int cmp = cmp_best_[level];
      if (have_first_ && cmp == 0) {
        if (lv >= static_cast<int>(best_trace_.size()))
          cmp = 1;
        else if (t != best_trace_[lv])
          cmp = t < best_trace_[lv] ? -1 : 1;
      }
      eq_first_.push_back(eq);
      cmp_best_.push_back(static_cast<signed char>(cmp));
      int r = -1;
      if (eq || cmp <= 0) r = search(q, lv);
      path_.pop_back();
      path_trace_.pop_back();
      eq_first_.pop_back();
      cmp_best_.pop_back();
      if (r >= 0 && r < level) return r;
    }
    return -1;
  }

  Csr G_;
  int n_;
  const std::vector<int>& color_;
  const std::vector<char>& aux_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> cnt_;
  std::vector<char> mark_, inq_;
  std::vector<Perm> gens_;
  std::vector<int> path_;
  std::vector<std::uint64_t> path_trace_;
  std::vector<char> eq_first_;
  std::vector<signed char> cmp_best_;
  bool have_first_ = false;
  std::vector<int> first_lab_, best_lab_, first_path_, best_path_;
  std::vector<std::uint32_t> first_cert_, best_cert_;
  std::vector<std::uint64_t> first_trace_, best_trace_;
};

struct FullResult {
  std::vector<Perm> gens;
  std::vector<Point> base;
  std::vector<int> canon_lab;  // position -> vertex
  std::uint64_t nodes = 0;
};

// Twin classes (equal open neighborhoods, equal color) are collapsed before
// searching; each class contributes a symmetric group on its members.
FullResult full_search(const Graph& g, const SearchOptions& opt) {
  const int n = g.order();
  const int primary = opt.primary < 0 ? n : opt.primary;
  std::vector<int> color(n, 0);
  if (g.has_colors()) color = g.colors();
  std::vector<char> aux(n, 0);
  for (int v = primary; v < n; ++v) aux[v] = 1;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key_less = [&](int a, int b) {
    if (aux[a] != aux[b]) return aux[a] < aux[b];
    if (color[a] != color[b]) return color[a] < color[b];
    if (g.neighbors(a) != g.neighbors(b)) return g.neighbors(a) < g.neighbors(b);
    return a < b;
  };
  std::sort(order.begin(), order.end(), key_less);
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (i > 0) {
      int u = order[i - 1];
      if (aux[u] == aux[v] && color[u] == color[v] && g.neighbors(u) == g.neighbors(v)) {
        cls[v] = cls[u];
        members[cls[v]].push_back(v);
        continue;
      }
    }
    cls[v] = static_cast<int>(members.size());
    members.push_back({v});
  }
  const int k = static_cast<int>(members.size());

  FullResult out;
  if (k == n) {
    Searcher s(g, color, aux, opt.node_budget);
    auto r = s.run();
    out.gens = std::move(r.gens);
    for (int b : r.base) out.base.push_back(static_cast<Point>(b));
    out.canon_lab = std::move(r.canon_lab);
    out.nodes = r.nodes;
    return out;
  }

  // Renumber classes by smallest member so the quotient is built deterministically.
  std::vector<int> cls_order(k);
  std::iota(cls_order.begin(), cls_order.end(), 0);
  for (auto& m : members) std::sort(m.begin(), m.end());
  std::sort(cls_order.begin(), cls_order.end(), [&](int a, int b) { return members[a][0] < members[b][0]; });
  std::vector<int> renum(k);
  for (int i = 0; i < k; ++i) renum[cls_order[i]] = i;
  std::vector<std::vector<int>> mem(k);
  for (int c = 0; c < k; ++c) mem[renum[c]] = members[c];
  for (int v = 0; v < n; ++v) cls[v] = renum[cls[v]];

  // Quotient: aux classes placed last so the primary/aux split survives.
  std::vector<int> qidx(k);
  std::iota(qidx.begin(), qidx.end(), 0);
  std::stable_sort(qidx.begin(), qidx.end(), [&](int a, int b) { return aux[mem[a][0]] < aux[mem[b][0]]; });
  std::vector<int> qpos(k);
  for (int i = 0; i < k; ++i) qpos[qidx[i]] = i;
  int qprimary = 0;
  for (int c = 0; c < k; ++c)
    if (!aux[mem[c][0]]) ++qprimary;

  std::vector<std::tuple<int, int, int>> keys;
  for (int c = 0; c < k; ++c) keys.emplace_back(aux[mem[c][0]], color[mem[c][0]], static_cast<int>(mem[c].size()));
  auto sorted_keys = keys;
  std::sort(sorted_keys.begin(), sorted_keys.end());
  sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());
  std::vector<int> qcolor(k);
  std::vector<std::pair<int, int>> qedges;
  for (int c = 0; c < k; ++c) {
    qcolor[qpos[c]] = static_cast<int>(std::lower_bound(sorted_keys.begin(), sorted_keys.end(), keys[c]) - sorted_keys.begin());
    int v = mem[c][0];
    for (int w : g.neighbors(v))
      if (cls[w] > c) qedges.emplace_back(qpos[c], qpos[cls[w]]);
      else if (cls[w] == c)
        throw Error("twin class contains an edge");
  }
  Graph q = build_graph(k, qedges).with_colors(qcolor);
  SearchOptions qopt = opt;
  qopt.primary = qprimary;
  FullResult qr = full_search(q, qopt);
  out.nodes = qr.nodes;

  auto cls_of_q = [&](int qv) { return qidx[qv]; };
  // Lift quotient generators: members matched in index order.
  for (const auto& qg : qr.gens) {
    std::vector<Point> img(n);
    for (int c = 0; c < k; ++c) {
      int d = cls_of_q(static_cast<int>(qg(static_cast<Point>(qpos[c]))));
      for (std::size_t j = 0; j < mem[c].size(); ++j) img[mem[c][j]] = static_cast<Point>(mem[d][j]);
    }
    out.gens.emplace_back(std::move(img));
  }
  for (int c = 0; c < k; ++c)
    for (std::size_t j = 0; j + 1 < mem[c].size(); ++j)
      out.gens.push_back(Perm::from_cycles(n, {{static_cast<Point>(mem[c][j]), static_cast<Point>(mem[c][j + 1])}}));

  // Base: first members of quotient base classes, then the symmetric-group
  // points; primary classes strictly before auxiliary ones.
  std::vector<char> in_base(n, 0);
  auto push = [&](int v) {
    if (!in_base[v]) {
      in_base[v] = 1;
      out.base.push_back(static_cast<Point>(v));
    }
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (Point qb : qr.base) {
      int c = cls_of_q(static_cast<int>(qb));
      if (aux[mem[c][0]] == pass) push(mem[c][0]);
    }
    for (int c = 0; c < k; ++c) {
      if (aux[mem[c][0]] != pass) continue;
      for (std::size_t j = 0; j + 1 < mem[c].size(); ++j) push(mem[c][j]);
    }
  }
  for (int qv : qr.canon_lab)
    for (int v : mem[cls_of_q(qv)]) out.canon_lab.push_back(v);
  return out;
}

std::string encode_certificate(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::string bytes;
  auto put = [&](std::uint64_t x) {
    while (x >= 0x80) {
      bytes.push_back(static_cast<char>((x & 0x7f) | 0x80));
      x >>= 7;
    }
    bytes.push_back(static_cast<char>(x));
  };
  bytes += "TF";
  bytes.push_back(static_cast<char>(kCertificateVersion));
  put(static_cast<std::uint64_t>(n));
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[label[v]] = v;
  put(g.has_colors() ? 1 : 0);
  if (g.has_colors())
    for (int i = 0; i < n; ++i) put(static_cast<std::uint64_t>(g.colors()[inv[i]]));
  std::vector<std::pair<int, int>> e;
  for (const auto& ed : g.edges()) {
    int a = label[ed.u], b = label[ed.v];
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(e.begin(), e.end());
  put(e.size());
  for (auto [a, b] : e) {
    put(static_cast<std::uint64_t>(a));
    put(static_cast<std::uint64_t>(b));
  }
  return bytes;
}

}  // namespace

SymmetryData analyze(const Graph& g, const SearchOptions& opt) {
  const int n = g.order();
  auto r = full_search(g, opt);
  SymmetryData d;
  d.nodes = r.nodes;
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[r.canon_lab[i]] = i;
  std::vector<Point> rl(label.begin(), label.end());
  d.canon.relabeling = Perm(std::move(rl));
  d.canon.certificate = encode_certificate(g, label);
  d.canon.hash = fnv1a64(d.canon.certificate);

  const int primary = opt.primary < 0 ? n : opt.primary;
  if (primary == n) {
    d.group = PermGroup::from_strong_generators(n, r.base, r.gens);
  } else {
    std::vector<Point> base;
    for (Point b : r.base) {
      if (static_cast<int>(b) >= primary) break;
      base.push_back(b);
    }
    std::vector<Perm> gens;
    for (const auto& gp : r.gens) {
      std::vector<Point> img(gp.images().begin(), gp.images().begin() + primary);
      Perm rp(std::move(img));
      if (!rp.is_identity() && std::find(gens.begin(), gens.end(), rp) == gens.end()) gens.push_back(std::move(rp));
    }
    d.group = PermGroup::from_strong_generators(primary, std::move(base), std::move(gens));
  }
  return d;
}

AutResult automorphism_group(const Graph& g, const SearchOptions& opt) {
  auto d = analyze(g, opt);
  AutResult r;
  r.group = d.group;
  r.vertex_orbits = r.group.orbits();
  r.edge_orbits = edge_orbits(g, r.group.generators());
  r.dart_orbits = dart_orbits(g, r.group.generators());
  return r;
}

CanonicalForm canonical_form(const Graph& g, const SearchOptions& opt) { return analyze(g, opt).canon; }

bool are_isomorphic(const Graph& a, const Graph& b, const SearchOptions& opt) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, opt).certificate == canonical_form(b, opt).certificate;
}

std::optional<std::pair<int, int>> is_unworthy(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.neighbors(a) != g.neighbors(b)) return g.neighbors(a) < g.neighbors(b);
    return a < b;
  });
  std::optional<std::pair<int, int>> best;
  for (std::size_t i = 1; i < order.size(); ++i) {
    int a = order[i - 1], b = order[i];
    if (g.neighbors(a) != g.neighbors(b)) continue;
    std::pair<int, int> p{std::min(a, b), std::max(a, b)};
    if (!best || p < *best) best = p;
  }
  return best;
}

Graph edge_color_gadget(const Graph& g, const std::vector<int>& edge_colors) {
  auto edges = g.edges();
  if (edge_colors.size() != edges.size()) throw Error("edge_color_gadget: one color per edge required");
  const int n = g.order();
  std::vector<std::pair<int, int>> e;
  std::vector<int> color(n + static_cast<int>(edges.size()), 0);
  if (g.has_colors())
    for (int v = 0; v < n; ++v) color[v] = g.colors()[v];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int m = n + static_cast<int>(i);
    e.emplace_back(edges[i].u, m);
    e.emplace_back(edges[i].v, m);
    color[m] = edge_colors[i];
  }
  return build_graph(n + static_cast<int>(edges.size()), e).with_colors(std::move(color));
}

Graph digraph_gadget(const Orientation& d) {
  const int n = d.order();
  std::vector<std::pair<int, int>> e;
  const int m = static_cast<int>(d.darts().size());
  std::vector<int> color(n + 2 * m, 0);
  for (int i = 0; i < m; ++i) {
    int t = n + 2 * i, h = t + 1;
    e.emplace_back(d.darts()[i].tail, t);
    e.emplace_back(t, h);
    e.emplace_back(h, d.darts()[i].head);
    color[t] = 1;
    color[h] = 2;
  }
  return build_graph(n + 2 * m, e).with_colors(std::move(color));
}

PermGroup edge_color_automorphisms(const Graph& g, const std::vector<int>& edge_colors, const SearchOptions& opt) {
  SearchOptions o = opt;
  o.primary = g.order();
  return analyze(edge_color_gadget(g, edge_colors), o).group;
}

PermGroup digraph_automorphisms(const Orientation& d, const SearchOptions& opt) {
  SearchOptions o = opt;
  o.primary = d.order();
  return analyze(digraph_gadget(d), o).group;
}

}  // namespace tetra
