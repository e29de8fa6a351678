#include "tetra/maps.hpp"

#include <algorithm>

namespace tetra {

namespace {

// Orbit index per point, orbits numbered by smallest point.
std::vector<int> orbit_labels(std::size_t n, const std::vector<Perm>& gens, int& count,
                              std::vector<std::size_t>* reps = nullptr) {
  std::vector<int> label(n, -1);
  count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    if (reps) reps->push_back(s);
    std::vector<std::size_t> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        std::size_t y = g(static_cast<Point>(x));
        if (label[y] < 0) {
          label[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return label;
}

// Extends d0 -> t to a map psi with psi(R d) = R2(psi d) and psi(L d) = L2(psi d).
std::optional<std::vector<std::size_t>> extend(const Perm& R1, const Perm& L1, const Perm& R2, const Perm& L2,
                                               std::size_t target) {
  const std::size_t n = R1.degree();
  std::vector<std::size_t> psi(n, n);
  std::vector<char> used(n, 0);
  psi[0] = target;
  used[target] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t d = stack.back();
    stack.pop_back();
    for (int which = 0; which < 2; ++which) {
      const Perm& a = which == 0 ? R1 : L1;
      const Perm& b = which == 0 ? R2 : L2;
      std::size_t x = a(static_cast<Point>(d)), y = b(static_cast<Point>(psi[d]));
      if (psi[x] == n) {
        if (used[y]) return std::nullopt;
        psi[x] = y;
        used[y] = 1;
        stack.push_back(x);
      } else if (psi[x] != y) {
        return std::nullopt;
      }
    }
  }
  return psi;
}

}  // namespace

RotaryMap::RotaryMap(Perm R, Perm L) : R_(std::move(R)), L_(std::move(L)) {
  const std::size_t n = R_.degree();
  if (L_.degree() != n) throw ConstructionError("map: R and L must act on the same darts");
  if (n == 0) throw ConstructionError("map: no darts");
  for (std::size_t d = 0; d < n; ++d) {
    Point p = static_cast<Point>(d);
    if (L_(p) == p || L_(L_(p)) != p) throw ConstructionError("map: L must be a fixed-point-free involution");
  }
  F_ = L_ * R_;
  int parts = 0;
  orbit_labels(n, {R_, L_}, parts);
  if (parts != 1) throw ConstructionError("map: <R, L> is not transitive on darts");
  vertex_ = orbit_labels(n, {R_}, nv_);
  edge_ = orbit_labels(n, {L_}, ne_, &edge_rep_);
  face_ = orbit_labels(n, {F_}, nf_);
}

RotaryMap RotaryMap::from_rotation_system(const Graph& g, const std::vector<std::vector<int>>& rotation) {
  if (static_cast<int>(rotation.size()) != g.order()) throw ConstructionError("rotation system: one list per vertex");
  DartIndexer idx(g);
  const std::size_t n = idx.darts();
  std::vector<Point> r(n), l(n);
  for (int v = 0; v < g.order(); ++v) {
    const auto& rot = rotation[v];
    std::vector<int> sorted(rot);
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) throw ConstructionError("rotation system must list each neighbor once");
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::size_t d = idx.dart(v, rot[i]);
      r[d] = static_cast<Point>(idx.dart(v, rot[(i + 1) % rot.size()]));
      l[d] = static_cast<Point>(idx.dart(rot[i], v));
    }
  }
  return RotaryMap(Perm(std::move(r)), Perm(std::move(l)));
}

// F runs clockwise around a face, so the dual turns by its inverse.
RotaryMap RotaryMap::dual() const { return RotaryMap(F_.inverse(), L_); }

RotaryMap torus_map(TorusKind kind, int b, int c) {
  switch (kind) {
    case TorusKind::rot:
      if (b == 0 && c == 0) throw ParameterError("{4,4}_{b,c} needs (b,c) != (0,0)");
      break;
    case TorusKind::angle:
      if (!(c >= 0 && b > c)) throw ParameterError("{4,4}_<b,c> needs b > c >= 0");
      break;
    case TorusKind::bracket:
      if (b < 1 || c < 1) throw ParameterError("{4,4}_[b,c] needs b, c >= 1");
      break;
  }
  auto u = torus_lattice(kind, b, c);
  LatticeForm f = lattice_normal_form(u[0], u[1]);
  const std::size_t nv = static_cast<std::size_t>(f.r * f.t);
  std::vector<Point> r(4 * nv), l(4 * nv);
  const long long dx[4] = {1, 0, -1, 0}, dy[4] = {0, 1, 0, -1};
  for (long long y = 0; y < f.t; ++y)
    for (long long x = 0; x < f.r; ++x) {
      auto v = static_cast<std::size_t>(torus_vertex(f, x, y));
      for (int k = 0; k < 4; ++k) {
        auto w = static_cast<std::size_t>(torus_vertex(f, x + dx[k], y + dy[k]));
        r[4 * v + k] = static_cast<Point>(4 * v + (k + 1) % 4);
        l[4 * v + k] = static_cast<Point>(4 * w + (k + 2) % 4);
      }
    }
  return RotaryMap(Perm(std::move(r)), Perm(std::move(l)));
}

std::size_t orientation_preserving_automorphisms(const RotaryMap& m) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < m.darts(); ++t)
    if (extend(m.R(), m.L(), m.R(), m.L(), t)) ++count;
  return count;
}

MapSymmetry map_symmetry_type(const RotaryMap& m) {
  // The group acts semiregularly, so rotary means every dart is reachable.
  if (orientation_preserving_automorphisms(m) != m.darts()) return MapSymmetry::not_rotary;
  return map_isomorphism(m, m, true) ? MapSymmetry::reflexible : MapSymmetry::chiral;
}

std::optional<std::vector<std::size_t>> map_isomorphism(const RotaryMap& a, const RotaryMap& b, bool reflect) {
  if (a.darts() != b.darts()) return std::nullopt;
  Perm R2 = reflect ? b.R().inverse() : b.R();
  for (std::size_t t = 0; t < b.darts(); ++t)
    if (auto psi = extend(a.R(), a.L(), R2, b.L(), t)) return psi;
  return std::nullopt;
}

SelfDuality self_duality(const RotaryMap& m) {
  RotaryMap d = m.dual();
  if (map_isomorphism(m, d, false)) return SelfDuality::orientation_preserving;
  if (map_isomorphism(m, d, true)) return SelfDuality::reflection_only;
  return SelfDuality::none;
}

Graph underlying_graph(const RotaryMap& m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m.edges(); ++i) {
    std::size_t d = m.canonical_dart(i);
    int u = m.vertex_of(d), v = m.vertex_of(m.L()(static_cast<Point>(d)));
    if (u == v) throw DegenerateParameters("map skeleton has a loop");
    e.emplace_back(u, v);
  }
  try {
    return build_simple_graph(m.vertices(), e);
  } catch (const DegenerateParameters&) {
    throw DegenerateParameters("map skeleton has parallel edges");
  }
}

Graph medial_graph(const RotaryMap& m) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t d = 0; d < m.darts(); ++d) e.emplace_back(m.edge_of(d), m.edge_of(m.F()(static_cast<Point>(d))));
  return build_simple_graph(m.edges(), e);
}

Graph map_dart_graph(const RotaryMap& m) {
  // Each face read both ways: d then F(d), and L(F(d)) then L(d).
  std::vector<std::pair<int, int>> e;
  for (std::size_t d = 0; d < m.darts(); ++d) {
    Point p = static_cast<Point>(d), f = m.F()(p);
    e.emplace_back(static_cast<int>(d), static_cast<int>(f));
    e.emplace_back(static_cast<int>(m.L()(f)), static_cast<int>(m.L()(p)));
  }
  return build_graph(static_cast<int>(m.darts()), e);
}

Graph map_hill_capping(const RotaryMap& m) {
  auto vertex = [&](std::size_t d, int tail_bit, int head_bit) {
    int e = m.edge_of(d);
    return m.canonical_dart(e) == d ? 4 * e + 2 * tail_bit + head_bit : 4 * e + 2 * head_bit + tail_bit;
  };
  std::vector<std::pair<int, int>> e;
  for (std::size_t d = 0; d < m.darts(); ++d) {
    std::size_t next = m.F()(static_cast<Point>(d));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) e.emplace_back(vertex(d, i, j), vertex(next, j, 1 - i));
  }
  return build_simple_graph(4 * m.edges(), e);
}

Graph xi_graph(const RotaryMap& m) {
  // Darts around each vertex in rotation order, starting from the smallest.
  std::vector<std::vector<std::size_t>> around(m.vertices());
  for (std::size_t d = 0; d < m.darts(); ++d) {
    auto& list = around[m.vertex_of(d)];
    if (!list.empty()) continue;
    std::size_t x = d;
    do {
      list.push_back(x);
      x = m.R()(static_cast<Point>(x));
    } while (x != d);
  }
  int blacks = 0;
  for (const auto& a : around) {
    if (a.size() % 2 != 0) throw ParameterError("XI needs every vertex of even degree");
    blacks += static_cast<int>(a.size() / 2);
  }
  std::vector<std::pair<int, int>> e;
  int x = 0;
  for (const auto& a : around) {
    const std::size_t q = a.size(), h = q / 2;
    for (std::size_t k = 0; k < h; ++k, ++x)
      for (std::size_t off : {k, k + 1, k + h, (k + h + 1) % q}) e.emplace_back(x, blacks + m.edge_of(a[off % q]));
  }
  return build_simple_graph(blacks + m.edges(), e);
}

}  // namespace tetra
