#include "tetra/permgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace tetra {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x]) throw ConstructionError("Perm: images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> v(degree);
  std::iota(v.begin(), v.end(), Point{0});
  return Perm(std::move(v), Trusted{});
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> v(degree);
  std::iota(v.begin(), v.end(), Point{0});
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw ConstructionError("Perm::from_cycles: point out of range");
      v[c[i]] = c[(i + 1) % c.size()];
    }
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<Point> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<Point>(i);
  return Perm(std::move(v), Trusted{});
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Point Perm::smallest_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(img_.size());
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = img_[j];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw Error("compose: degree mismatch");
  std::vector<Point> v(p.degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = q.img_[p.img_[i]];
  return Perm(std::move(v), Perm::Trusted{});
}

Perm power(const Perm& p, long long k) {
  Perm base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm acc = Perm::identity(p.degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;  // smallest element stays the root
  return true;
}

std::vector<std::vector<std::size_t>> DisjointSets::classes() {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(parent_.size(), SIZE_MAX);
  for (std::size_t x = 0; x < parent_.size(); ++x) {
    std::size_t r = find(x);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

std::vector<std::vector<Point>> orbits_of(std::size_t n, const std::vector<Perm>& gens) {
  auto cls = induced_orbits(n, gens, [](const Perm& g, std::size_t x) { return static_cast<std::size_t>(g(static_cast<Point>(x))); });
  std::vector<std::vector<Point>> out;
  for (auto& c : cls) out.emplace_back(c.begin(), c.end());
  return out;
}

std::vector<std::vector<std::size_t>> edge_orbits(const Graph& g, const std::vector<Perm>& gens) {
  DartIndexer ix(g);
  auto edges = g.edges();
  return induced_orbits(edges.size(), gens, [&](const Perm& p, std::size_t e) {
    return ix.edge(static_cast<int>(p(edges[e].u)), static_cast<int>(p(edges[e].v)));
  });
}

std::vector<std::vector<std::size_t>> dart_orbits(const Graph& g, const std::vector<Perm>& gens) {
  DartIndexer ix(g);
  auto darts = g.darts();
  return induced_orbits(darts.size(), gens, [&](const Perm& p, std::size_t d) {
    return ix.dart(static_cast<int>(p(darts[d].tail)), static_cast<int>(p(darts[d].head)));
  });
}

namespace detail {

struct Level {
  Point base = 0;
  std::vector<Perm> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> where;
  std::vector<Perm> trans, trans_inv;
  std::vector<std::size_t> checked;  // per orbit point: generators already verified

  Level(std::size_t degree, Point b) : base(b), where(degree, -1) {
    orbit.push_back(b);
    where[b] = 0;
    trans.push_back(Perm::identity(degree));
    trans_inv.push_back(Perm::identity(degree));
    checked.push_back(0);
  }

  void extend() {
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : gens) {
        Point y = s(orbit[i]);
        if (where[y] >= 0) continue;
        where[y] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(y);
        trans.push_back(trans[i] * s);
        trans_inv.push_back(trans.back().inverse());
        checked.push_back(0);
      }
  }
};

struct Chain {
  std::size_t degree = 0;
  std::vector<Level> levels;

  BigInt order() const {
    BigInt o = 1;
    for (const auto& l : levels) o *= l.orbit.size();
    return o;
  }

  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm h, std::size_t from) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      auto w = levels[l].where[h(levels[l].base)];
      if (w < 0) return {std::move(h), l};
      h = h * levels[l].trans_inv[static_cast<std::size_t>(w)];
    }
    return {std::move(h), levels.size()};
  }
};

struct LazyChain {
  std::once_flag once;
  std::unique_ptr<Chain> chain;
  ChainOptions options;
  bool trusted = false;
  std::vector<Point> trusted_base;
};

namespace {

bool fixes_all(const Perm& g, const std::vector<Level>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l)
    if (g(levels[l].base) != levels[l].base) return false;
  return true;
}

std::unique_ptr<Chain> schreier_sims(std::size_t degree, const std::vector<Perm>& gens, const ChainOptions& opt) {
  auto c = std::make_unique<Chain>();
  c->degree = degree;
  auto& L = c->levels;
  for (Point b : opt.base_prefix) {
    if (b >= degree) throw Error("base point out of range");
    L.emplace_back(degree, b);
  }
  std::vector<Perm> nontrivial;
  for (const auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);
  for (const auto& g : nontrivial)
    if (fixes_all(g, L, L.size())) L.emplace_back(degree, g.smallest_moved());
  for (std::size_t l = 0; l < L.size(); ++l) {
    for (const auto& g : nontrivial)
      if (fixes_all(g, L, l)) L[l].gens.push_back(g);
    L[l].extend();
  }
  auto reached = [&] { return opt.known_order && c->order() == *opt.known_order; };
  if (reached()) return c;

  std::uint64_t used = 0;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(L.size()) - 1;
  while (i >= 0) {
    bool jumped = false;
    for (std::size_t j = 0; j < L[i].orbit.size() && !jumped; ++j) {
      while (L[i].checked[j] < L[i].gens.size()) {
        const Perm s = L[i].gens[L[i].checked[j]];
        ++L[i].checked[j];
        Point img = s(L[i].orbit[j]);
        Perm h = L[i].trans[j] * s * L[i].trans_inv[static_cast<std::size_t>(L[i].where[img])];
        if (h.is_identity()) continue;
        if (++used > opt.sift_budget) throw ResourceLimit("Schreier-Sims sift budget exhausted");
        auto [r, depth] = c->sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (r.is_identity()) continue;
        if (depth == L.size()) L.emplace_back(degree, r.smallest_moved());
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= depth; ++l) {
          L[l].gens.push_back(r);
          L[l].extend();
        }
        if (reached()) return c;
        i = static_cast<std::ptrdiff_t>(depth);
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }
  if (opt.known_order && c->order() != *opt.known_order) throw Error("Schreier-Sims: order mismatch with known order");
  return c;
}

std::unique_ptr<Chain> from_sgs(std::size_t degree, const std::vector<Point>& base, const std::vector<Perm>& gens) {
  auto c = std::make_unique<Chain>();
  c->degree = degree;
  for (Point b : base) c->levels.emplace_back(degree, b);
  for (std::size_t l = 0; l < c->levels.size(); ++l) {
    for (const auto& g : gens)
      if (!g.is_identity() && fixes_all(g, c->levels, l)) c->levels[l].gens.push_back(g);
    c->levels[l].extend();
  }
  return c;
}

}  // namespace
}  // namespace detail

PermGroup::PermGroup() : lazy_(std::make_shared<detail::LazyChain>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, ChainOptions options)
    : degree_(degree), gens_(std::move(generators)), lazy_(std::make_shared<detail::LazyChain>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw Error("PermGroup: generator degree mismatch");
  lazy_->options = std::move(options);
}

PermGroup PermGroup::from_strong_generators(std::size_t degree, std::vector<Point> base, std::vector<Perm> generators) {
  PermGroup g(degree, std::move(generators));
  g.lazy_->trusted = true;
  g.lazy_->trusted_base = std::move(base);
  return g;
}

const detail::Chain& PermGroup::chain() const {
  std::call_once(lazy_->once, [&] {
    if (lazy_->trusted)
      lazy_->chain = detail::from_sgs(degree_, lazy_->trusted_base, gens_);
    else
      lazy_->chain = detail::schreier_sims(degree_, gens_, lazy_->options);
  });
  return *lazy_->chain;
}

BigInt PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [r, depth] = chain().sift(p, 0);
  return r.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : chain().levels) b.push_back(l.base);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& l : chain().levels) s.push_back(l.orbit.size());
  return s;
}

std::vector<Perm> PermGroup::strong_generators(std::size_t level) const {
  // Level gens alone may miss part of the stabilizer when construction stopped
  // early at a known order; the union over deeper levels always generates it.
  const auto& L = chain().levels;
  std::vector<Perm> out;
  for (std::size_t l = level; l < L.size(); ++l)
    for (const auto& g : L[l].gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{p};
  seen[p] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens_) {
      Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const { return orbits_of(degree_, gens_); }

PermGroup PermGroup::with_base_prefix(const std::vector<Point>& prefix, std::uint64_t sift_budget) const {
  ChainOptions opt;
  opt.base_prefix = prefix;
  opt.known_order = order();
  opt.sift_budget = sift_budget;
  auto sg = strong_generators(0);
  PermGroup g(degree_, gens_, opt);
  // Strong generators fill the chain faster than the bare generating set.
  g.lazy_->chain = detail::schreier_sims(degree_, sg.empty() ? gens_ : sg, opt);
  std::call_once(g.lazy_->once, [] {});
  return g;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<Point>& points, std::uint64_t sift_budget) const {
  auto g = with_base_prefix(points, sift_budget);
  const auto& L = g.chain().levels;
  std::vector<Point> base;
  for (std::size_t l = points.size(); l < L.size(); ++l) base.push_back(L[l].base);
  auto gens = g.strong_generators(points.size());
  return from_strong_generators(degree_, std::move(base), std::move(gens));
}

Transport PermGroup::transporter(const std::vector<Point>& a, const std::vector<Point>& b, std::uint64_t sift_budget) const {
  if (a.size() != b.size()) throw Error("transporter: tuple length mismatch");
  Transport out;
  PermGroup g;
  try {
    g = with_base_prefix(a, sift_budget);
  } catch (const ResourceLimit&) {
    out.status = Tri::unknown;
    return out;
  }
  const auto& L = g.chain().levels;
  // Walk the first |a| levels; each level's coset representative is forced.
  Perm acc = Perm::identity(degree_);  // product u_l ... u_0 built right to left
  Perm acc_inv = acc;
  for (std::size_t l = 0; l < a.size(); ++l) {
    Point target = acc_inv(b[l]);
    auto w = L[l].where[target];
    if (w < 0) {
      out.status = Tri::no;
      return out;
    }
    acc = L[l].trans[static_cast<std::size_t>(w)] * acc;
    acc_inv = acc.inverse();
  }
  out.status = Tri::yes;
  out.element = std::move(acc);
  return out;
}

Perm PermGroup::random_element(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  Perm acc = Perm::identity(degree_);
  if (gens_.empty()) return acc;
  std::uniform_int_distribution<std::size_t> pick(0, gens_.size() - 1);
  for (int k = 0; k < 64; ++k) acc = acc * gens_[pick(rng)];
  return acc;
}

PermGroup build_chain(std::size_t degree, const std::vector<Perm>& generators) {
  PermGroup g(degree, generators);
  (void)g.order();
  return g;
}

}  // namespace tetra
