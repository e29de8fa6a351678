#include "tetra/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace tetra {

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

long long power_mod(long long r, long long e, long long n) {
  long long x = mod(1, n), b = mod(r, n);
  for (long long i = 0; i < e; ++i) x = static_cast<long long>((static_cast<__int128>(x) * b) % n);
  return x;
}

namespace {

std::string str(long long x) { return std::to_string(x); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// Darts from a family's defining rule; loops and repeated edges become DegenerateParameters.
Orientation family_digraph(int n, const std::vector<Dart>& darts) {
  for (const auto& d : darts)
    if (d.tail == d.head) throw DegenerateParameters("edge rule produces a loop at vertex " + str(d.tail));
  return Orientation(n, darts);
}

// Restrict a digraph to the weak component containing root, renumbering in index order.
OrientedGraph oriented_component(const Orientation& d, int root) {
  Graph g = d.underlying();
  Component c = connected_component(g, root);
  if (c.graph.order() == g.order()) return {std::move(g), d};
  std::vector<Dart> darts;
  for (const auto& x : d.darts())
    if (c.old_to_new[x.tail] >= 0) darts.push_back({c.old_to_new[x.tail], c.old_to_new[x.head]});
  return {std::move(c.graph), Orientation(static_cast<int>(c.new_to_old.size()), std::move(darts))};
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Graph wreath(int n, int k) {
  require(n >= 3, "W(n,k) needs n >= 3");
  require(k >= 1, "W(n,k) needs k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) e.emplace_back(i * k + r, ((i + 1) % n) * k + s);
  return build_simple_graph(n * k, e);
}

Graph circulant(int n, const std::vector<int>& jumps) {
  require(n >= 3, "circulant needs n >= 3");
  std::set<long long> seen;
  std::vector<std::pair<int, int>> e;
  for (int a : jumps) {
    long long j = mod(a, n);
    if (j == 0) throw DegenerateParameters("circulant jump is 0 mod n");
    long long canon = std::min(j, n - j);
    if (!seen.insert(canon).second) throw DegenerateParameters("circulant jumps coincide up to sign mod n");
    // A jump of n/2 yields one edge per pair, so it adds valence 1.
    for (int i = 0; i < n; ++i) e.emplace_back(i, static_cast<int>(mod(i + j, n)));
  }
  return build_graph(n, e);
}

Graph depleted_wreath(int n) {
  require(n >= 3, "DW(n,3) needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s)
        if (r != s) e.emplace_back(i * 3 + r, ((i + 1) % n) * 3 + s);
  return build_simple_graph(3 * n, e);
}

LatticeForm lattice_normal_form(std::array<long long, 2> u1, std::array<long long, 2> u2) {
  auto [d, e] = u1;
  auto [f, g] = u2;
  if (d * g - e * f == 0) throw ParameterError("lattice generators are linearly dependent");
  long long m, n;
  long long t = ext_gcd(e, g, m, n);  // m*e + n*g = t
  long long ep = e / t, gp = g / t;
  LatticeForm out;
  out.t = t;
  out.r = gp * d - ep * f;
  out.s = m * d + n * f;
  if (out.r < 0) out.r = -out.r;
  out.s = mod(out.s, out.r);
  return out;
}

std::array<std::array<long long, 2>, 2> torus_lattice(TorusKind kind, long long b, long long c) {
  switch (kind) {
    case TorusKind::rot:
      return {{{b, c}, {-c, b}}};
    case TorusKind::angle:
      return {{{b, c}, {c, b}}};
    case TorusKind::bracket:
      return {{{b, b}, {-c, c}}};
  }
  return {};
}

int torus_vertex(const LatticeForm& f, long long x, long long y) {
  long long q = floor_div(y, f.t);
  long long yy = y - q * f.t;
  long long xx = mod(x - q * f.s, f.r);
  return static_cast<int>(yy * f.r + xx);
}

Graph toroidal(TorusKind kind, int b, int c) {
  switch (kind) {
    case TorusKind::rot:
      require(b != 0 || c != 0, "{4,4}_{b,c} needs (b,c) != (0,0)");
      break;
    case TorusKind::angle:
      require(c >= 0 && b > c, "{4,4}_<b,c> needs b > c >= 0");
      if (b == c + 1) throw DegenerateParameters("{4,4}_<c+1,c> has a multigraph skeleton");
      break;
    case TorusKind::bracket:
      // [b,c] and [c,b] are mirror images, so b < c is accepted too.
      require(c >= 1 && b >= 1, "{4,4}_[b,c] needs b, c >= 1");
      if (c == 1 || b == 1) throw DegenerateParameters("{4,4}_[b,1] has a multigraph skeleton");
      break;
  }
  auto u = torus_lattice(kind, b, c);
  LatticeForm f = lattice_normal_form(u[0], u[1]);
  const long long nv = f.r * f.t;
  std::vector<std::pair<int, int>> e;
  for (long long y = 0; y < f.t; ++y)
    for (long long x = 0; x < f.r; ++x) {
      int v = torus_vertex(f, x, y);
      e.emplace_back(v, torus_vertex(f, x + 1, y));
      e.emplace_back(v, torus_vertex(f, x, y + 1));
    }
  return build_simple_graph(static_cast<int>(nv), e);
}

OrientedGraph spidergraph(int k, int n, int r, bool mutant) {
  const std::string name = mutant ? "MPS" : "PS";
  require(k >= 3, name + " needs k >= 3");
  if (mutant)
    require(n >= 8 && n % 2 == 0, "MPS needs n even and >= 8");
  else
    require(n >= 5, "PS needs n >= 5");
  long long rk = power_mod(r, k, n);
  require(rk == 1 || rk == n - 1, name + " needs r^k = +-1 mod n");
  long long r1 = mod(r, n);
  require(r1 != 1 && r1 != n - 1, name + " needs r != +-1 mod n");
  std::vector<Dart> darts;
  for (int i = 0; i < k; ++i) {
    long long step = power_mod(r, i, n);
    long long shift = (mutant && i == k - 1) ? n / 2 : 0;
    int ni = (i + 1) % k;
    for (int j = 0; j < n; ++j)
      for (int sign : {1, -1})
        darts.push_back({i * n + j, ni * n + static_cast<int>(mod(j + sign * step + shift, n))});
  }
  return oriented_component(family_digraph(k * n, darts), 0);
}

XeGraph xe_graph(int m, int n, int r, int t) {
  require(m >= 4 && m % 2 == 0 && n >= 4 && n % 2 == 0, "X_e needs m, n even and >= 4");
  require(power_mod(r, m, n) == 1, "X_e needs r^m = 1 mod n");
  long long s2n = 0;
  for (int i = 0; i < m; ++i) s2n = mod(s2n + power_mod(r, i, 2LL * n), 2LL * n);
  s2n = mod(s2n + 2LL * t, 2LL * n);
  require(s2n % n == 0, "X_e needs 1 + r + ... + r^(m-1) + 2t = 0 mod n");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int v = i * n + j;
      if (i < m - 1) {
        e.emplace_back(v, (i + 1) * n + j);
        e.emplace_back(v, (i + 1) * n + static_cast<int>(mod(j + power_mod(r, i, n), n)));
      } else {
        e.emplace_back(v, static_cast<int>(mod(j + t, n)));
        e.emplace_back(v, static_cast<int>(mod(j + power_mod(r, m - 1, n) + t, n)));
      }
    }
  XeGraph out{build_simple_graph(m * n, e), XeMatch::neither};
  long long r2 = mod(r, 2LL * n);
  bool spider_ok = r2 != 1 && r2 != 2LL * n - 1;
  if (spider_ok) out.match = s2n == 0 ? XeMatch::ps : XeMatch::mps;
  return out;
}

long long AbelianGroup::size() const {
  long long s = 1;
  for (int o : orders) s *= o;
  return s;
}

std::vector<int> AbelianGroup::reduce(std::vector<long long> x) const {
  if (x.size() != orders.size()) throw ParameterError("abelian group element has wrong rank");
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<int>(mod(x[i], orders[i]));
  return out;
}

long long AbelianGroup::index(const std::vector<int>& x) const {
  long long idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * orders[i] + x[i];
  return idx;
}

std::vector<int> AbelianGroup::element(long long idx) const {
  std::vector<int> x(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    x[i] = static_cast<int>(idx % orders[i]);
    idx /= orders[i];
  }
  return x;
}

namespace {

std::vector<long long> right_mul(const IntMatrix& T, const std::vector<long long>& x) {
  std::vector<long long> y(x.size(), 0);
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) y[j] += x[i] * T[i][j];
  return y;
}

std::vector<long long> widen(const std::vector<int>& x) { return {x.begin(), x.end()}; }

std::vector<long long> add(const std::vector<long long>& x, const std::vector<long long>& y) {
  std::vector<long long> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

void check_matrix(const AbelianGroup& A, const IntMatrix& T) {
  if (T.size() != A.rank()) throw ParameterError("automorphism matrix has wrong size");
  for (const auto& row : T)
    if (row.size() != A.rank()) throw ParameterError("automorphism matrix has wrong size");
}

// x T^i reduced, for i = 0..k.
std::vector<std::vector<int>> orbit_powers(const AbelianGroup& A, const IntMatrix& T, const std::vector<long long>& x,
                                           int k) {
  std::vector<std::vector<int>> out{A.reduce(x)};
  for (int i = 0; i < k; ++i) out.push_back(A.reduce(right_mul(T, widen(out.back()))));
  return out;
}

}  // namespace

AtteberyConditions attebery_conditions(const AbelianGroup& A, const IntMatrix& T, int k, const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
  check_matrix(A, T);
  auto as = orbit_powers(A, T, a, k), bs = orbit_powers(A, T, b, k);
  AtteberyConditions c;
  auto a0 = A.reduce(a), b0 = A.reduce(b);
  c.closes = (as[k] == a0 && bs[k] == b0) || (as[k] == b0 && bs[k] == a0);

  std::vector<std::vector<int>> gens;
  std::vector<long long> sum_a(A.rank(), 0);
  for (int i = 0; i < k; ++i) {
    std::vector<long long> ci(A.rank());
    for (std::size_t j = 0; j < A.rank(); ++j) ci[j] = static_cast<long long>(bs[i][j]) - as[i][j];
    gens.push_back(A.reduce(ci));
    sum_a = add(sum_a, widen(as[i]));
  }
  gens.push_back(A.reduce(sum_a));
  std::vector<char> seen(static_cast<std::size_t>(A.size()), 0);
  std::vector<long long> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto x = widen(A.element(queue[q]));
    for (const auto& g : gens) {
      long long y = A.index(A.reduce(add(x, widen(g))));
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  c.generates = static_cast<long long>(queue.size()) == A.size();

  auto ab = orbit_powers(A, T, add(a, b), k);
  std::vector<long long> tot(A.rank(), 0);
  for (int i = 0; i < k; ++i) tot = add(tot, widen(ab[i]));
  auto z = A.reduce(tot);
  c.kernel = std::all_of(z.begin(), z.end(), [](int v) { return v == 0; });
  return c;
}

AtteberyGraph attebery(const AbelianGroup& A, const IntMatrix& T, int k, const std::vector<long long>& a,
                       const std::vector<long long>& b, bool enforce) {
  require(k >= 2, "Attebery graph needs k >= 2");
  require(!A.orders.empty() && std::all_of(A.orders.begin(), A.orders.end(), [](int o) { return o >= 1; }),
          "abelian group needs positive cyclic orders");
  AtteberyConditions cond = attebery_conditions(A, T, k, a, b);
  if (enforce) {
    if (!cond.closes) throw AtteberyConditionError("Attebery condition (1) fails: {a_k, b_k} != {a, b}", 1);
    if (!cond.generates) throw AtteberyConditionError("Attebery condition (2) fails: the c_i and sum a_i do not generate A", 2);
    if (!cond.kernel) throw AtteberyConditionError("Attebery condition (3) fails: a + b not in the kernel of sum T^i", 3);
  }
  auto as = orbit_powers(A, T, a, k), bs = orbit_powers(A, T, b, k);
  const long long na = A.size();
  const int nv = static_cast<int>(na * k);
  std::vector<Dart> darts;
  for (long long xi = 0; xi < na; ++xi) {
    auto x = widen(A.element(xi));
    for (int i = 0; i < k; ++i) {
      int v = static_cast<int>(xi * k + i);
      for (const auto* step : {&as[i], &bs[i]}) {
        long long y = A.index(A.reduce(add(x, widen(*step))));
        darts.push_back({v, static_cast<int>(y * k + (i + 1) % k)});
      }
    }
  }
  Orientation d = family_digraph(nv, darts);
  std::vector<std::pair<int, int>> e;
  for (const auto& x : darts) e.emplace_back(x.tail, x.head);
  Graph g = build_graph(nv, e);
  bool simple = g.size() == darts.size();
  return {std::move(g), std::move(d), cond, simple};
}

AtteberyGraph amc(int k, int n, const IntMatrix& M) {
  require(k >= 3, "AMC needs k >= 3");
  require(n >= 2, "AMC needs n >= 2");
  IntMatrix R(2, std::vector<long long>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) R[i][j] = mod(M.at(i).at(j), n);
  return attebery(AbelianGroup{{n, n}}, R, k, {1, 0}, {-1, 0}, false);
}

long long cpm_predicted_order(int n, int s, int t) {
  long long base = 1;
  for (int i = 0; i < s; ++i) base *= (n % 2 ? n : n / 2);
  long long out = static_cast<long long>(s) * t * base;
  if (n % 2 == 0 && t % 2 == 1) out *= 2;
  return out;
}

OrientedGraph cpm(int n, int s, int t, int r) {
  require(n >= 3, "CPM needs n >= 3");
  require(s >= 1 && t >= 1, "CPM needs s, t >= 1");
  require(std::gcd(mod(r, n), static_cast<long long>(n)) == 1, "CPM needs r to be a unit mod n");
  AbelianGroup A{std::vector<int>(s, n)};
  const int k = s * t;
  const long long na = A.size();
  std::vector<Dart> darts;
  for (long long xi = 0; xi < na; ++xi) {
    auto x = A.element(xi);
    for (int i = 0; i < k; ++i) {
      long long step = power_mod(r, i, n);
      int j = i % s;
      for (int sign : {1, -1}) {
        auto y = x;
        y[j] = static_cast<int>(mod(y[j] + sign * step, n));
        darts.push_back({static_cast<int>(xi * k + i), static_cast<int>(A.index(y) * k + (i + 1) % k)});
      }
    }
  }
  return oriented_component(family_digraph(static_cast<int>(na * k), darts), 0);
}

Graph rose_window(int n, int a, int r) {
  require(n >= 3, "R_n(a,r) needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, static_cast<int>(mod(i + a, n)));
    e.emplace_back(n + i, n + static_cast<int>(mod(i + r, n)));
  }
  return build_simple_graph(2 * n, e);
}

Graph bicirculant(int n, int a, int b, int c, int d) {
  require(n >= 2, "BC_n needs n >= 2");
  std::set<long long> offs{mod(a, n), mod(b, n), mod(c, n), mod(d, n)};
  require(offs.size() == 4, "BC_n(a,b,c,d) needs distinct offsets mod n");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (long long x : offs) e.emplace_back(i, n + static_cast<int>(mod(i + x, n)));
  return build_simple_graph(2 * n, e);
}

Graph propellor(int n, int a, int b, int c, int d) {
  require(n >= 3, "Pr_n needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    int A = i, B = n + i, C = 2 * n + i;
    e.emplace_back(A, static_cast<int>(mod(i + a, n)));
    e.emplace_back(C, 2 * n + static_cast<int>(mod(i + d, n)));
    e.emplace_back(A, B);
    e.emplace_back(B, C);
    e.emplace_back(B, static_cast<int>(mod(i + b, n)));
    e.emplace_back(B, 2 * n + static_cast<int>(mod(i + c, n)));
  }
  return build_simple_graph(3 * n, e);
}

Metacirculant msy(int m, int n, int r, int t) {
  require(m >= 3 && n >= 3, "MSY needs m, n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      e.emplace_back(i * n + j, i * n + static_cast<int>(mod(j + power_mod(r, i, n), n)));
      if (i < m - 1)
        e.emplace_back(i * n + j, (i + 1) * n + j);
      else
        e.emplace_back(i * n + j, static_cast<int>(mod(j + t, n)));
    }
  Metacirculant out{build_simple_graph(m * n, e), false};
  out.metacirculant = power_mod(r, m, n) == 1 && mod(static_cast<long long>(r) * t - t, n) == 0;
  return out;
}

Graph msz(int m, int n, int k, int r) {
  require(m >= 3 && n >= 1, "MSZ needs m >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int v = i * n + j;
      int w = static_cast<int>(mod(i + k, m)) * n + static_cast<int>(mod(j + power_mod(r, i, n), n));
      if (v == w) throw DegenerateParameters("MSZ edge rule produces a loop");
      e.emplace_back(v, ((i + 1) % m) * n + j);
      e.emplace_back(v, w);
    }
  // Coinciding edges are merged: small parameters give the degenerate wreath-like cases.
  return build_graph(m * n, e);
}

Metacirculant mc3(int m, int n, int a, int b, int r, int t, int c) {
  require(m >= 4 && m % 2 == 0, "MC3 needs m even and >= 4");
  require(n >= 1, "MC3 needs n >= 1");
  const int h = m / 2;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      int v = i * n + j;
      if (i <= m - 2)
        e.emplace_back(v, static_cast<int>(mod(i + c, m)) * n + j);
      else
        e.emplace_back(v, static_cast<int>(mod(j + t, n)));
      if (i < h) {
        long long ri = power_mod(r, i, n);
        e.emplace_back(v, (i + h) * n + static_cast<int>(mod(j + a * ri, n)));
        e.emplace_back(v, (i + h) * n + static_cast<int>(mod(j + b * ri, n)));
      }
    }
  Metacirculant out{build_simple_graph(m * n, e), false};
  long long rh = power_mod(r, h, n);
  std::multiset<long long> lhs{mod(a + t, n), mod(b + t, n)}, rhs{mod(-a * rh, n), mod(-b * rh, n)};
  out.metacirculant = mod(static_cast<long long>(r) * t - t, n) == 0 && power_mod(r, m, n) == 1 && lhs == rhs;
  return out;
}

Graph praeger_xu(int n, int k) {
  require(n >= 3, "PX(n,k) needs n >= 3");
  require(k >= 1 && k < n, "PX(n,k) needs 1 <= k < n");
  require(k <= 20, "PX(n,k) with k > 20 is too large");
  const int w = 1 << k, mask = w - 1;
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j < n; ++j)
    for (int y = 0; y < w; ++y)
      for (int bit = 0; bit < 2; ++bit) e.emplace_back(j * w + y, ((j + 1) % n) * w + (((y << 1) & mask) | bit));
  return build_simple_graph(n * w, e);
}

std::vector<Perm> PxGenerators::all() const {
  std::vector<Perm> out{rho, mu};
  out.insert(out.end(), sigma.begin(), sigma.end());
  return out;
}

PxGenerators px_generators(int n, int k) {
  require(n >= 3 && k >= 1 && k < n, "PX generators need 1 <= k < n");
  const int w = 1 << k;
  const std::size_t nv = static_cast<std::size_t>(n) * w;
  auto idx = [&](long long j, int x) { return static_cast<Point>(mod(j, n) * w + x); };
  auto reverse_bits = [&](int x) {
    int y = 0;
    for (int i = 0; i < k; ++i)
      if (x >> i & 1) y |= 1 << (k - 1 - i);
    return y;
  };
  std::vector<Point> rho(nv), mu(nv);
  for (int j = 0; j < n; ++j)
    for (int x = 0; x < w; ++x) {
      rho[idx(j, x)] = idx(j + 1, x);
      mu[idx(j, x)] = idx(-j, reverse_bits(x));
    }
  PxGenerators g{Perm(rho), Perm(mu), {}};
  for (int b = 0; b < n; ++b) {
    std::vector<Point> s(nv);
    std::iota(s.begin(), s.end(), Point{0});
    // Position b-i flips the i-th entry (1-based from the left, i.e. bit k-i).
    for (int i = 1; i <= k; ++i)
      for (int x = 0; x < w; ++x) s[idx(b - i, x)] = idx(b - i, x ^ (1 << (k - i)));
    g.sigma.emplace_back(std::move(s));
  }
  return g;
}

Graph sporadic(Sporadic which) {
  std::vector<std::pair<int, int>> e;
  switch (which) {
    case Sporadic::k5:
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
      return build_simple_graph(5, e);
    case Sporadic::octahedron:
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (i / 2 != j / 2) e.emplace_back(i, j);
      return build_simple_graph(6, e);
    case Sporadic::odd4: {
      std::vector<int> sets;  // 3-subsets of {0..6} as bitmasks, lexicographic
      for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
          for (int c = b + 1; c < 7; ++c) sets.push_back(1 << a | 1 << b | 1 << c);
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
          if (!(sets[i] & sets[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
      return build_simple_graph(static_cast<int>(sets.size()), e);
    }
  }
  throw ParameterError("unknown sporadic graph");
}

VoltageDiagram diagram_quotient(const Graph& g, const Perm& sigma) {
  const int nv = g.order();
  if (static_cast<int>(sigma.degree()) != nv) throw ParameterError("diagram: permutation degree differs from graph order");
  for (const auto& e : g.edges())
    if (!g.adjacent(static_cast<int>(sigma(e.u)), static_cast<int>(sigma(e.v))))
      throw ParameterError("diagram: permutation is not an automorphism");
  VoltageDiagram d;
  std::vector<int> node(nv, -1), pos(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (node[v] >= 0) continue;
    std::vector<int> orb{v};
    for (int w = static_cast<int>(sigma(v)); w != v; w = static_cast<int>(sigma(w))) orb.push_back(w);
    if (d.modulus == 0) d.modulus = static_cast<int>(orb.size());
    if (static_cast<int>(orb.size()) != d.modulus) throw ParameterError("diagram: permutation is not semiregular");
    for (int i = 0; i < static_cast<int>(orb.size()); ++i) {
      node[orb[i]] = d.nodes;
      pos[orb[i]] = i;
    }
    d.orbits.push_back(std::move(orb));
    ++d.nodes;
  }
  const int n = d.modulus;
  for (int u = 0; u < d.nodes; ++u) {
    int u0 = d.orbits[u][0];
    for (int w : g.neighbors(u0)) {
      int v = node[w], lab = pos[w];
      if (v > u) {
        d.arcs.push_back({u, v, lab});
      } else if (v == u) {
        if (2 * lab < n)
          d.loops.emplace_back(u, lab);
        else if (2 * lab == n)
          d.semi_edges.push_back(u);
      }
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  std::sort(d.loops.begin(), d.loops.end());
  return d;
}

Graph diagram_expand(const VoltageDiagram& d) {
  const int n = d.modulus;
  std::vector<std::pair<int, int>> e;
  for (const auto& a : d.arcs)
    for (int i = 0; i < n; ++i) e.emplace_back(a.from * n + i, a.to * n + (i + a.label) % n);
  for (auto [u, b] : d.loops)
    for (int i = 0; i < n; ++i) e.emplace_back(u * n + i, u * n + (i + b) % n);
  for (int u : d.semi_edges)
    for (int i = 0; i < n / 2; ++i) e.emplace_back(u * n + i, u * n + i + n / 2);
  return build_graph(d.nodes * n, e);
}

}  // namespace tetra
