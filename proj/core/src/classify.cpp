#include "tetra/classify.hpp"

#include <algorithm>
#include <map>

#include "tetra/decomposition.hpp"
#include "tetra/lr.hpp"

namespace tetra {

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::dart_transitive: return "dart-transitive";
    case SymmetryClass::half_arc_transitive: return "half-arc-transitive";
    case SymmetryClass::semisymmetric: return "semisymmetric";
    case SymmetryClass::bi_transitive: return "bi-transitive";
    case SymmetryClass::lr: return "LR";
    case SymmetryClass::none: return "none";
    case SymmetryClass::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::vector<int> ConsistentCycles::lengths() const {
  std::vector<int> out;
  for (const auto& o : orbits) out.push_back(o.length);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ConsistentCycles::count_along(const Orientation& o) const {
  std::size_t n = 0;
  for (const auto& orbit : orbits) {
    const auto& c = orbit.representative;
    bool along = true;
    for (std::size_t i = 0; i < c.size() && along; ++i) along = o.has_dart(c[i], c[(i + 1) % c.size()]);
    n += along ? 1 : 0;
  }
  return n;
}

namespace {

bool regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

std::vector<Point> as_points(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Depth-first walk over G-classes of prefixes (v0..vk) that some element shifts
// to (v1..vk+1). A prefix closing back at v0 is a consistent cycle.
struct CycleSearch {
  const Graph& g;
  const PermGroup& group;
  std::uint64_t budget;
  std::uint64_t calls = 0;
  bool complete = true;
  std::vector<std::vector<int>> found;

  Transport shift(const std::vector<int>& path, int next) {
    if (++calls > budget) throw ResourceLimit("consistent cycle search budget");
    std::vector<Point> a = as_points(path), b(a.begin() + 1, a.end());
    b.push_back(static_cast<Point>(next));
    Transport t = group.transporter(a, b);
    if (t.status == Tri::unknown) complete = false;
    return t;
  }
  Tri shifts(const std::vector<int>& path, int next) { return shift(path, next).status; }

  void extend(std::vector<int>& path, const PermGroup& stab) {
    const int last = path.back(), prev = path[path.size() - 2];
    if (stab.order() == 1) {
      // The shunt is unique now, and the cycle is the orbit of v0 under it.
      for (int w : g.neighbors(last)) {
        if (w == prev || (w != path[0] && std::find(path.begin(), path.end(), w) != path.end())) continue;
        if (w == path[0] && path.size() < 3) continue;
        Transport t = shift(path, w);
        if (t.status != Tri::yes) continue;
        std::vector<int> cycle{path[0]};
        for (Point x = (*t.element)(static_cast<Point>(path[0])); x != static_cast<Point>(path[0]); x = (*t.element)(x))
          cycle.push_back(static_cast<int>(x));
        found.push_back(std::move(cycle));
      }
      return;
    }
    std::vector<char> seen(g.order(), 0);
    for (int w : g.neighbors(last)) {
      if (seen[w]) continue;
      for (Point x : stab.orbit(static_cast<Point>(w))) seen[x] = 1;
      if (w == prev) continue;
      const bool closes = w == path[0];
      if (closes && path.size() < 3) continue;
      if (!closes && std::find(path.begin(), path.end(), w) != path.end()) continue;
      if (shifts(path, w) != Tri::yes) continue;
      if (closes) {
        found.push_back(path);
        continue;
      }
      path.push_back(w);
      extend(path, stab.pointwise_stabilizer({static_cast<Point>(w)}));
      path.pop_back();
    }
  }
};

}  // namespace

ConsistentCycles consistent_cycles(const Graph& g, const PermGroup& group, std::uint64_t budget) {
  CycleSearch s{g, group, budget, 0, true, {}};
  ConsistentCycles out;
  try {
    for (const auto& orbit : group.orbits()) {
      const int v0 = static_cast<int>(orbit[0]);
      if (v0 >= g.order()) continue;
      PermGroup s0 = group.pointwise_stabilizer({orbit[0]});
      std::vector<char> seen(g.order(), 0);
      for (int v1 : g.neighbors(v0)) {
        if (seen[v1]) continue;
        for (Point x : s0.orbit(static_cast<Point>(v1))) seen[x] = 1;
        std::vector<int> path{v0};
        if (s.shifts(path, v1) != Tri::yes) continue;
        path.push_back(v1);
        s.extend(path, s0.pointwise_stabilizer({static_cast<Point>(v1)}));
      }
    }
  } catch (const ResourceLimit&) {
    s.complete = false;
  }
  out.complete = s.complete;

  // Orbits of directed cycles. Rotations of a consistent cycle are equivalent
  // through its shunt, so one transporter decides equivalence.
  const BigInt order = group.order();
  for (const auto& c : s.found) {
    bool dup = false;
    for (const auto& o : out.orbits)
      dup = dup || (o.representative.size() == c.size() &&
                    group.transporter(as_points(o.representative), as_points(c)).status == Tri::yes);
    if (dup) continue;
    ConsistentCycleOrbit o;
    o.length = static_cast<int>(c.size());
    o.representative = c;
    o.cycles = order / group.pointwise_stabilizer(as_points(c)).order() / c.size();
    out.orbits.push_back(std::move(o));
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const auto& a, const auto& b) {
    return std::tie(a.length, a.representative) < std::tie(b.length, b.representative);
  });
  return out;
}

ConsistentCycles consistent_cycles(const Graph& g, std::uint64_t budget) {
  return consistent_cycles(g, automorphism_group(g).group, budget);
}

bool is_semitransitive(const Orientation& o, const SearchOptions& opt) {
  PermGroup aut = digraph_automorphisms(o, opt);
  if (orbits_of(static_cast<std::size_t>(o.order()), aut.generators()).size() != 1) return false;
  Graph u = o.underlying();
  DartIndexer idx(u);
  std::vector<char> in(idx.darts(), 0);
  for (const auto& d : o.darts()) in[idx.dart(d.tail, d.head)] = 1;
  int hit = 0;
  for (const auto& orbit : dart_orbits(u, aut.generators())) hit += in[orbit[0]] ? 1 : 0;
  return hit == 1;
}

std::optional<Orientation> semitransitive_orientation(const Graph& g, const std::vector<Orientation>& candidates,
                                                      const SearchOptions& opt) {
  const auto darts = g.darts();
  DartIndexer idx(g);
  auto from_group = [&](const std::vector<Perm>& gens) -> std::optional<Orientation> {
    if (orbits_of(static_cast<std::size_t>(g.order()), gens).size() != 1) return std::nullopt;
    auto orbits = dart_orbits(g, gens);
    if (orbits.size() != 2) return std::nullopt;
    const auto& first = orbits[0][0] == 0 ? orbits[0] : orbits[1];
    std::vector<Dart> out;
    for (std::size_t d : first) {
      const Dart& x = darts[d];
      if (std::binary_search(first.begin(), first.end(), idx.dart(x.head, x.tail))) return std::nullopt;
      out.push_back(x);
    }
    return Orientation::of_graph(g, std::move(out));
  };

  AutResult aut = automorphism_group(g, opt);
  if (auto o = from_group(aut.group.generators())) return o;
  for (const auto& c : candidates) {
    if (c.order() != g.order() || c.darts().size() != g.size()) continue;
    try {
      if (!(c.underlying() == g.without_colors())) continue;
    } catch (const DegenerateParameters&) {
      continue;
    }
    if (is_semitransitive(c, opt)) return c;
  }
  if (aut.dart_orbits.size() != 1) return std::nullopt;
  for (std::uint64_t seed = 0; seed < 128; ++seed) {
    Perm x = aut.group.random_element(2 * seed + 1), y = aut.group.random_element(2 * seed + 2);
    if (auto o = from_group({x})) return o;
    if (auto o = from_group({x, y})) return o;
  }
  return std::nullopt;
}

BiTransitivity bi_transitive_check(const Graph& g, const SearchOptions& opt) {
  auto parts = bipartition(g);
  if (!parts) return {false, "not bipartite"};
  std::vector<int> side(g.order(), 0);
  for (int v : parts->second) side[v] = 1;
  AutResult a = automorphism_group(g.without_colors().with_colors(side), opt);
  if (a.edge_orbits.size() != 1) return {false, std::to_string(a.edge_orbits.size()) + " edge orbits under the color-preserving group"};
  return {true, {}};
}

int arc_transitivity(const Graph& g, int max_s, const SearchOptions& opt) {
  AutResult a = automorphism_group(g, opt);
  if (a.vertex_orbits.size() != 1) return -1;
  std::vector<Point> arc{0};
  PermGroup stab = a.group.pointwise_stabilizer(arc);
  for (int s = 1; s <= max_s; ++s) {
    const int last = static_cast<int>(arc.back());
    const int prev = arc.size() > 1 ? static_cast<int>(arc[arc.size() - 2]) : -1;
    std::vector<int> ext;
    for (int w : g.neighbors(last))
      if (w != prev) ext.push_back(w);
    if (ext.empty()) return s - 1;
    auto orbit = stab.orbit(static_cast<Point>(ext[0]));
    for (int w : ext)
      if (std::find(orbit.begin(), orbit.end(), static_cast<Point>(w)) == orbit.end()) return s - 1;
    arc.push_back(static_cast<Point>(ext[0]));
    stab = stab.pointwise_stabilizer({arc.back()});
  }
  return max_s;
}

SymmetryReport classify(const Graph& g, const ClassifyOptions& opt) {
  if (!is_connected(g)) throw ParameterError("classify needs a connected graph");
  SymmetryReport r;
  r.bipartite = bipartition(g).has_value();
  r.worthy = !is_unworthy(g).has_value();
  try {
    AutResult a = automorphism_group(g, opt.search);
    r.aut_order = a.order();
    r.vertex_stabilizer_order = a.group.pointwise_stabilizer({0}).order();
    r.vertex_orbits = a.vertex_orbits.size();
    r.edge_orbits = a.edge_orbits.size();
    r.dart_orbits = a.dart_orbits.size();

    if (r.dart_orbits == 1) {
      r.tag = SymmetryClass::dart_transitive;
    } else if (r.edge_orbits == 1 && r.vertex_orbits == 1) {
      r.tag = SymmetryClass::half_arc_transitive;
    } else if (r.edge_orbits == 1) {
      r.tag = regular(g) ? SymmetryClass::semisymmetric : SymmetryClass::bi_transitive;
    } else {
      r.tag = SymmetryClass::none;
      if (opt.lr && r.vertex_orbits == 1 && r.edge_orbits == 2 && is_regular_of_valence(g, 4)) {
        std::vector<int> color(g.size(), 0);
        for (std::size_t i : a.edge_orbits[1]) color[i] = 1;
        try {
          LRVerdict v = check_suitable_lr(decomposition_from_edge_colors(g, color));
          if (v.suitable) r.tag = SymmetryClass::lr;
          else if (v.vertex_transitive == Tri::unknown || v.all_swappers == Tri::unknown) r.note = "LR check incomplete";
        } catch (const ConstructionError&) {
          // Edge orbits do not split every vertex two and two.
        }
      }
    }

    if (opt.orientation && r.tag == SymmetryClass::half_arc_transitive)
      r.semitransitive_orientation = semitransitive_orientation(g, {}, opt.search);
    if (opt.orientation_search && r.tag == SymmetryClass::dart_transitive)
      r.semitransitive_orientation = semitransitive_orientation(g, {}, opt.search);
    const bool et_vt = r.tag == SymmetryClass::dart_transitive || r.tag == SymmetryClass::half_arc_transitive;
    if (opt.consistent_cycles && et_vt) {
      if (r.aut_order > opt.cycle_group_limit) {
        r.note = "consistent cycles skipped: group too large";
      } else {
        r.consistent_cycles = consistent_cycles(g, a.group, opt.cycle_budget);
        if (!r.consistent_cycles->complete) r.note = "consistent cycle search incomplete";
        r.consistent_cycle_orbits = r.consistent_cycles->orbits.size();
        if (r.tag == SymmetryClass::half_arc_transitive && r.semitransitive_orientation)
          r.consistent_cycle_orbits = r.consistent_cycles->count_along(*r.semitransitive_orientation);
      }
    }
  } catch (const ResourceLimit& e) {
    r.tag = SymmetryClass::unclassified;
    r.note = e.what();
  }
  return r;
}

}  // namespace tetra
