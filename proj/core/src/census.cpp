#include "tetra/census.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "tetra/derived.hpp"
#include "tetra/group_coset.hpp"
#include "tetra/lr.hpp"
#include "tetra/maps.hpp"

namespace tetra {

namespace {

int arg(const FamilyName& n, std::size_t i) {
  long long v = n.integer(i);
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw ParameterError("parameter out of range in " + to_string(n));
  return static_cast<int>(v);
}

void arity(const FamilyName& n, std::size_t k) {
  if (n.args.size() != k)
    throw ParameterError(to_string(n) + ": " + n.head + " takes " + std::to_string(k) + " parameters");
}

int sub(const FamilyName& n) {
  if (!n.sub) throw ParameterError(n.head + " needs a subscript, as in " + n.head + "_n(...)");
  return static_cast<int>(*n.sub);
}

TorusKind torus_kind(const FamilyName& n) {
  if (n.head == "{4,4}") return TorusKind::rot;
  if (n.head == "{4,4}<>") return TorusKind::angle;
  if (n.head == "{4,4}[]") return TorusKind::bracket;
  throw ParameterError(to_string(n) + " is not a {4,4} torus map");
}

CycleDecomposition lr_structure(const FamilyName& n) {
  if (n.head == "Br" || n.head == "MBr") {
    arity(n, 3);
    return barrel(arg(n, 0), arg(n, 1), arg(n, 2), n.head == "MBr");
  }
  if (n.head == "SoP") {
    arity(n, 2);
    return sop(arg(n, 0), arg(n, 1));
  }
  if (n.head == "RC") {
    arity(n, 2);
    return rows_and_columns(arg(n, 0), arg(n, 1));
  }
  if (n.head == "PX") {
    arity(n, 2);
    return px_decomposition(arg(n, 0), arg(n, 1));
  }
  if (n.head.rfind("{4,4}", 0) == 0) return torus_decomposition(torus_kind(n), arg(n, 0), arg(n, 1));
  throw ParameterError("PL needs a cycle structure such as Br, MBr, SoP, RC, PX or {4,4}: " + to_string(n));
}

Orientation directed_cycle_name(const FamilyName& n) {
  if (n.head != "DCyc") throw ParameterError("# combines DCyc_n factors: " + to_string(n));
  return doubled_cycle(sub(n));
}

}  // namespace

OrientedGraph build_named(const FamilyName& n) {
  const std::string& h = n.head;
  if (h == "W") {
    arity(n, 2);
    return {wreath(arg(n, 0), arg(n, 1)), std::nullopt};
  }
  if (h == "C") {
    std::vector<int> jumps;
    for (std::size_t i = 0; i < n.args.size(); ++i) jumps.push_back(arg(n, i));
    return {circulant(sub(n), jumps), std::nullopt};
  }
  if (h == "DW") {
    arity(n, 2);
    if (arg(n, 1) != 3) throw ParameterError("only DW(n,3) is built");
    return {depleted_wreath(arg(n, 0)), std::nullopt};
  }
  if (h.rfind("{4,4}", 0) == 0) return {toroidal(torus_kind(n), arg(n, 0), arg(n, 1)), std::nullopt};
  if (h == "PS" || h == "MPS") {
    arity(n, 3);
    return spidergraph(arg(n, 0), arg(n, 1), arg(n, 2), h == "MPS");
  }
  if (h == "PX") {
    arity(n, 2);
    return {praeger_xu(arg(n, 0), arg(n, 1)), std::nullopt};
  }
  if (h == "R") {
    arity(n, 2);
    return {rose_window(sub(n), arg(n, 0), arg(n, 1)), std::nullopt};
  }
  if (h == "BC") {
    arity(n, 4);
    return {bicirculant(sub(n), arg(n, 0), arg(n, 1), arg(n, 2), arg(n, 3)), std::nullopt};
  }
  if (h == "Pr") {
    arity(n, 4);
    return {propellor(sub(n), arg(n, 0), arg(n, 1), arg(n, 2), arg(n, 3)), std::nullopt};
  }
  if (h == "MSY") {
    arity(n, 4);
    return {msy(arg(n, 0), arg(n, 1), arg(n, 2), arg(n, 3)).graph, std::nullopt};
  }
  if (h == "MSZ") {
    arity(n, 4);
    return {msz(arg(n, 0), arg(n, 1), arg(n, 2), arg(n, 3)), std::nullopt};
  }
  if (h == "MC3") {
    arity(n, 7);
    return {mc3(arg(n, 0), arg(n, 1), arg(n, 2), arg(n, 3), arg(n, 4), arg(n, 5), arg(n, 6)).graph, std::nullopt};
  }
  if (h == "CPM") {
    arity(n, 4);
    return cpm(arg(n, 0), arg(n, 1), arg(n, 2), arg(n, 3));
  }
  if (h == "AMC") {
    arity(n, 3);
    const auto* m = std::get_if<IntMatrix>(&n.args[2]);
    if (!m) throw ParameterError("AMC(k,n,M) needs a 2x2 matrix");
    // Component of the origin, as for the other digraph families.
    auto a = amc(arg(n, 0), arg(n, 1), *m);
    return {connected_component(a.graph, 0).graph, std::nullopt};
  }
  if (h == "PPM") {
    arity(n, 2);
    return {ppm(arg(n, 0), arg(n, 1)), std::nullopt};
  }
  if (h == "K5" && !n.has_parens) return {sporadic(Sporadic::k5), std::nullopt};
  if (h == "Oct" && !n.has_parens) return {sporadic(Sporadic::octahedron), std::nullopt};
  if (h == "Odd" && !n.has_parens && n.sub == 4) return {sporadic(Sporadic::odd4), std::nullopt};
  if (h == "SDD" || h == "L") {
    arity(n, 1);
    Graph inner = build_named(n.inner(0)).graph;
    return {h == "SDD" ? sdd(inner) : line_graph(inner), std::nullopt};
  }
  if (h == "PL") {
    arity(n, 1);
    return {partial_line_graph(lr_structure(n.inner(0))), std::nullopt};
  }
  if (h == "MG" || h == "DG" || h == "HC" || h == "XI") {
    arity(n, 1);
    const FamilyName& t = n.inner(0);
    RotaryMap m = torus_map(torus_kind(t), arg(t, 0), arg(t, 1));
    if (h == "MG") return {medial_graph(m), std::nullopt};
    if (h == "DG") return {map_dart_graph(m), std::nullopt};
    if (h == "HC") return {map_hill_capping(m), std::nullopt};
    return {xi_graph(m), std::nullopt};
  }
  if (h == "Br" || h == "MBr" || h == "SoP" || h == "RC") return {lr_structure(n).base(), std::nullopt};
  if (h == "#") {
    auto p = sep_box_product(directed_cycle_name(n.inner(0)), directed_cycle_name(n.inner(1)));
    return p;
  }
  throw ParameterError("unknown family name: " + to_string(n));
}

// ---------------------------------------------------------------------------
// Configuration

const std::vector<std::string>& census_families() {
  static const std::vector<std::string> all = {"wreath", "circulant", "dw",  "toroidal", "ps",   "px",
                                               "rose",   "bicirculant", "propellor", "msy", "msz",  "mc3",
                                               "cpm",    "amc",        "ppm",       "sporadic", "sbp", "lr",
                                               "maps",   "sdd"};
  return all;
}

const std::map<std::string, long long>& default_bounds() {
  static const std::map<std::string, long long> b = {
      {"circulant.max_n", 160}, {"rose.max_n", 24},      {"bicirculant.max_n", 14}, {"propellor.max_n", 8},
      {"msy.max_order", 96},    {"msz.max_order", 64},   {"mc3.max_order", 24},     {"cpm.max_order", 512}, {"cpm.min_s", 2},
      {"lr.max_order", 512},    {"maps.max_order", 512}, {"sdd.max_base", 128},
  };
  return b;
}

long long SweepConfig::bound(const std::string& key, long long fallback) const {
  auto it = bounds.find(key);
  if (it != bounds.end()) return it->second;
  auto d = default_bounds().find(key);
  return d != default_bounds().end() ? d->second : fallback;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

long long to_integer(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + " needs an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: " + key + " needs true or false, got '" + v + "'");
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig c;
  c.families = census_families();
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(std::string_view(t).substr(0, eq)), value = trim(std::string_view(t).substr(eq + 1));
    if (key == "families") {
      c.families.clear();
      if (value == "all") {
        c.families = census_families();
        continue;
      }
      std::istringstream list(value);
      std::string f;
      while (std::getline(list, f, ',')) {
        f = trim(f);
        if (f.empty()) continue;
        if (std::find(census_families().begin(), census_families().end(), f) == census_families().end())
          throw ConfigError("config: unknown family '" + f + "'");
        c.families.push_back(f);
      }
    } else if (key == "max_vertices") {
      c.max_vertices = static_cast<int>(to_integer(key, value));
    } else if (key == "workers") {
      c.workers = static_cast<int>(to_integer(key, value));
    } else if (key == "keep_all") {
      c.keep_all = to_bool(key, value);
    } else if (key == "node_budget") {
      c.classify.search.node_budget = static_cast<std::uint64_t>(to_integer(key, value));
    } else if (key == "cycle_budget") {
      c.classify.cycle_budget = static_cast<std::uint64_t>(to_integer(key, value));
    } else if (auto dot = key.find('.'); dot != std::string::npos) {
      std::string fam = key.substr(0, dot);
      if (std::find(census_families().begin(), census_families().end(), fam) == census_families().end())
        throw ConfigError("config: bound for unknown family '" + fam + "'");
      c.bounds[key] = to_integer(key, value);
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (c.max_vertices < 4) throw ConfigError("config: max_vertices must be at least 4");
  if (c.workers < 1) throw ConfigError("config: workers must be at least 1");
  return c;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::constructed: return "constructed";
    case Provenance::imported: return "imported";
    case Provenance::both: return "constructed+imported";
  }
  return "constructed";
}

bool CensusRecord::edge_transitive() const {
  return tag == SymmetryClass::dart_transitive || tag == SymmetryClass::half_arc_transitive ||
         tag == SymmetryClass::semisymmetric || tag == SymmetryClass::bi_transitive;
}

bool CensusResult::partial() const {
  return std::any_of(records.begin(), records.end(), [](const CensusRecord& r) { return r.partial; });
}

// ---------------------------------------------------------------------------
// Parameter grids

namespace {

struct Task {
  std::vector<std::string> names;  // first is the one built
  std::function<std::optional<Graph>()> build;
};

std::string ps_name(const char* head, int a, int b, int c) { return to_string(name_of(head, {a, b, c}, ",;")); }

long long inverse_mod(long long a, long long n) {
  for (long long x = 1; x < n; ++x)
    if (mod(a * x, n) == 1) return x;
  return 0;
}

void add_tasks(const std::string& family, const SweepConfig& c, std::vector<Task>& out) {
  const int cap = c.max_vertices;
  auto named = [&](std::string name) {
    out.push_back({{name}, [name] { return std::optional<Graph>(build_named(name).graph); }});
  };
  if (family == "wreath") {
    for (int n = 3; 2 * n <= cap; ++n) named(to_string(name_of("W", {n, 2})));
  } else if (family == "circulant") {
    // One build per class {+-a, +-a^-1}; every member's name is attached.
    const int top = static_cast<int>(std::min<long long>(cap, c.bound("circulant.max_n", cap)));
    for (int n = 5; n <= top; ++n) {
      std::vector<char> done(n, 0);
      for (int a = 2; a <= n - 2; ++a) {
        if (done[a] || 2 * a == n) continue;
        std::set<long long> cls{a, n - a};
        if (long long inv = inverse_mod(a, n)) cls.insert({inv, n - inv});
        std::vector<std::string> names;
        for (long long x : cls) {
          done[x] = 1;
          names.push_back(to_string(name_sub("C", n, {1, x})));
        }
        out.push_back({names, [n, a] { return std::optional<Graph>(circulant(n, {1, a})); }});
      }
    }
  } else if (family == "dw") {
    for (int n = 3; 3 * n <= cap; ++n) named(to_string(name_of("DW", {n, 3})));
  } else if (family == "toroidal") {
    for (int b = 1; b * b <= cap; ++b)
      for (int c2 = 0; c2 <= b && b * b + c2 * c2 <= cap; ++c2) named(to_string(name_torus(TorusKind::rot, b, c2)));
    for (int b = 1; 2 * b * b <= cap; ++b)
      for (int c2 = 0; c2 < b && 2 * (b * b + c2 * c2) <= cap; ++c2) named(to_string(name_torus(TorusKind::angle, b, c2)));
    for (int b = 2; 4 * b <= cap; ++b)
      for (int c2 = 2; 2 * b * c2 <= cap; ++c2) named(to_string(name_torus(TorusKind::bracket, b, c2)));
  } else if (family == "ps") {
    for (int k = 3; 5 * k <= cap; ++k)
      for (int n = 5; k * n <= cap; ++n)
        for (int r = 2; r <= n - 2; ++r) {
          long long rk = power_mod(r, k, n);
          if (rk != 1 && rk != n - 1) continue;
          named(ps_name("PS", k, n, r));
          if (n >= 8 && n % 2 == 0) named(ps_name("MPS", k, n, r));
        }
  } else if (family == "px") {
    for (int n = 3; 2 * n <= cap; ++n)
      for (int k = 1; k < n && k <= 20 && (static_cast<long long>(n) << k) <= cap; ++k)
        named(to_string(name_of("PX", {n, k})));
  } else if (family == "rose") {
    const int top = static_cast<int>(std::min<long long>(cap / 2, c.bound("rose.max_n", cap / 2)));
    for (int n = 3; n <= top; ++n)
      for (int a = 1; a < n; ++a)
        for (int r = 1; r < n; ++r) named(to_string(name_sub("R", n, {a, r})));
  } else if (family == "bicirculant") {
    const int top = static_cast<int>(std::min<long long>(cap / 2, c.bound("bicirculant.max_n", cap / 2)));
    for (int n = 4; n <= top; ++n)
      for (int b = 1; b < n; ++b)
        for (int c2 = b + 1; c2 < n; ++c2)
          for (int d = c2 + 1; d < n; ++d) named(to_string(name_sub("BC", n, {0, b, c2, d})));
  } else if (family == "propellor") {
    const int top = static_cast<int>(std::min<long long>(cap / 3, c.bound("propellor.max_n", cap / 3)));
    for (int n = 3; n <= top; ++n)
      for (int a = 1; 2 * a < n; ++a)
        for (int d = 1; 2 * d < n; ++d)
          for (int b = 0; b < n; ++b)
            for (int c2 = 0; c2 < n; ++c2) named(to_string(name_sub("Pr", n, {a, b, c2, d})));
  } else if (family == "msy") {
    const long long top = std::min<long long>(cap, c.bound("msy.max_order", cap));
    for (int m = 3; 3 * m <= top; ++m)
      for (int n = 3; m * n <= top; ++n)
        for (int r = 1; r < n; ++r)
          for (int t = 0; t < n; ++t) {
            std::string name = to_string(name_of("MSY", {m, n, r, t}, ",;,"));
            out.push_back({{name}, [m, n, r, t]() -> std::optional<Graph> {
                             auto x = msy(m, n, r, t);
                             if (!x.metacirculant) return std::nullopt;
                             return x.graph;
                           }});
          }
  } else if (family == "msz") {
    const long long top = std::min<long long>(cap, c.bound("msz.max_order", cap));
    for (int m = 3; 3 * m <= top; ++m)
      for (int n = 2; m * n <= top; ++n)
        for (int k = 1; k < m; ++k)
          for (int r = 1; r < n; ++r)
            if (std::gcd(r, n) == 1) named(to_string(name_of("MSZ", {m, n, k, r}, ",;,")));
  } else if (family == "mc3") {
    const long long top = std::min<long long>(cap, c.bound("mc3.max_order", cap));
    for (int m = 4; 2 * m <= top; m += 2)
      for (int n = 2; m * n <= top; ++n)
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            for (int r = 1; r < n; ++r)
              for (int t = 0; t < n; ++t)
                for (int cc = 1; cc < m; ++cc) {
                  std::string name = to_string(name_of("MC3", {m, n, a, b, r, t, cc}, ",;,,,,"));
                  out.push_back({{name}, [=]() -> std::optional<Graph> {
                                   auto x = mc3(m, n, a, b, r, t, cc);
                                   if (!x.metacirculant) return std::nullopt;
                                   return x.graph;
                                 }});
                }
  } else if (family == "cpm") {
    const long long top = std::min<long long>(cap, c.bound("cpm.max_order", cap));
    for (int n = 3; n <= top; ++n)
      for (int s = c.bound("cpm.min_s", 2); cpm_predicted_order(n, s, 1) <= top; ++s)
        for (int t = 1; cpm_predicted_order(n, s, t) <= top; ++t)
          for (int r = 1; r < n; ++r)
            if (std::gcd(r, n) == 1) named(to_string(name_of("CPM", {n, s, t, r}, ",,;")));
  } else if (family == "amc") {
    named("AMC(4,12,[[1,-4],[4,1]])");
  } else if (family == "ppm") {
    for (int t = 2; (static_cast<long long>(t) << (t + 2)) <= cap; ++t)
      for (int e = 0; e < 2; ++e) named(to_string(name_of("PPM", {t, e})));
  } else if (family == "sporadic") {
    named("K5");
    named("Oct");
    if (35 <= cap) named("Odd_4");
  } else if (family == "sbp") {
    for (int m = 3; 2 * m * m <= cap; ++m)
      for (int n = m; 2 * m * n <= cap; ++n) {
        FamilyName p;
        p.head = "#";
        p.args = {name_sub("DCyc", m, {}), name_sub("DCyc", n, {})};
        named(to_string(p));
      }
  } else if (family == "lr") {
    const long long top = std::min<long long>(cap, c.bound("lr.max_order", cap));
    auto both = [&](const std::string& base) {
      named(base);
      named("PL(" + base + ")");
    };
    for (int k = 2; 2 * 2 * k <= top; k += 2)
      for (int n = 5; 2LL * k * n <= top; ++n)
        for (int r = 2; r <= n - 2; ++r) {
          long long sq = mod(static_cast<long long>(r) * r, n);
          if (sq != 1 && sq != n - 1) continue;
          if (k >= 4) both(ps_name("Br", k, n, r));
          if (n >= 8 && n % 2 == 0) both(ps_name("MBr", k, n, r));
        }
    for (int fm = 4; 64LL * fm / 4 <= top; fm += 4)
      for (int fn = 4; 2LL * fm * fn * 2 <= top; fn += 4) both(to_string(name_of("SoP", {fm, fn})));
    for (int n = 3; 4LL * 3 * n * n <= top; ++n)
      for (int k = 3; 4LL * k * n * n <= top; k += 2) both(to_string(name_of("RC", {n, k})));
  } else if (family == "maps") {
    const long long top = std::min<long long>(cap, c.bound("maps.max_order", cap));
    auto maps_of = [&](const FamilyName& t, long long v) {
      // DG and XI have 4|V| vertices, HC has 8|V|.
      if (4 * v <= top) {
        named(to_string(name_apply("DG", t)));
        named(to_string(name_apply("XI", t)));
      }
      if (8 * v <= top) named(to_string(name_apply("HC", t)));
    };
    for (int b = 1; 4 * b * b <= top; ++b)
      for (int c2 = 0; c2 <= b; ++c2) maps_of(name_torus(TorusKind::rot, b, c2), b * b + c2 * c2);
  }
}

// Graphs outside the tetravalent connected scope, or over the cap, are dropped silently.
std::optional<Graph> within_scope(std::optional<Graph> g, int cap) {
  if (!g || g->order() > cap || g->order() < 5 || !is_regular_of_valence(*g, 4) || !is_connected(*g)) return std::nullopt;
  return g;
}

template <class F>
void parallel_for(std::size_t n, int workers, F f) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& t : pool) t.join();
}

struct Built {
  Graph graph;
  CanonicalForm canon;
};

CensusRecord make_record(const Graph& g, const CanonicalForm& canon, const ClassifyOptions& opt) {
  CensusRecord r;
  r.certificate = canon.certificate;
  r.hash = canon.hash;
  std::vector<int> relabel(canon.relabeling.images().begin(), canon.relabeling.images().end());
  r.g6 = encode_g6(g.without_colors().relabeled(relabel));
  r.order = g.order();
  try {
    r.girth = girth(g);
  } catch (const UndefinedValue&) {
  }
  try {
    r.diameter = diameter(g);
  } catch (const UndefinedValue&) {
  }
  SymmetryReport s = classify(g, opt);
  r.aut_order = s.aut_order;
  r.tag = s.tag;
  r.bipartite = s.bipartite;
  r.worthy = s.worthy;
  if (s.consistent_cycles) {
    r.cycles_complete = s.consistent_cycles->complete;
    r.cycle_orbits = s.consistent_cycle_orbits;
    r.cycle_lengths = s.consistent_cycles->lengths();
  }
  r.note = s.note;
  r.partial = s.tag == SymmetryClass::unclassified || (s.consistent_cycles && !s.consistent_cycles->complete);
  return r;
}

void sort_records(std::vector<CensusRecord>& v) {
  std::sort(v.begin(), v.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return std::tie(a.order, a.hash, a.certificate) < std::tie(b.order, b.hash, b.certificate);
  });
}

void add_names(CensusRecord& r, const std::vector<std::string>& names) {
  r.names.insert(r.names.end(), names.begin(), names.end());
  std::sort(r.names.begin(), r.names.end());
  r.names.erase(std::unique(r.names.begin(), r.names.end()), r.names.end());
}

// Builds every task, merges by certificate in task order and classifies each new
// certificate once. `index` maps certificates to positions in `pool`.
void run_tasks(const std::vector<Task>& tasks, const SweepConfig& c, std::vector<CensusRecord>& pool,
               std::unordered_map<std::string, std::size_t>& index, std::vector<Graph>& graphs, CensusResult& result,
               bool scoped) {
  std::vector<std::optional<Built>> built(tasks.size());
  std::vector<std::optional<std::string>> failure(tasks.size());
  parallel_for(tasks.size(), c.workers, [&](std::size_t i) {
    try {
      std::optional<Graph> g = tasks[i].build();
      if (scoped) g = within_scope(std::move(g), c.max_vertices);
      if (!g) return;
      CanonicalForm canon = canonical_form(*g, c.classify.search);
      built[i] = Built{std::move(*g), std::move(canon)};
    } catch (const DegenerateParameters&) {
    } catch (const ParameterError&) {
    } catch (const std::exception& e) {
      failure[i] = e.what();
    }
  });
  std::vector<std::size_t> fresh;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (failure[i]) result.failures.push_back({tasks[i].names[0], *failure[i]});
    if (!built[i]) continue;
    ++result.constructed;
    auto [it, inserted] = index.try_emplace(built[i]->canon.certificate, pool.size());
    if (inserted) {
      CensusRecord r;
      r.certificate = built[i]->canon.certificate;
      r.hash = built[i]->canon.hash;
      pool.push_back(std::move(r));
      graphs.push_back(built[i]->graph);
      fresh.push_back(i);
    }
    add_names(pool[it->second], tasks[i].names);
  }
  std::vector<CensusRecord> made(fresh.size());
  parallel_for(fresh.size(), c.workers, [&](std::size_t k) {
    const Built& b = *built[fresh[k]];
    try {
      made[k] = make_record(b.graph, b.canon, c.classify);
    } catch (const std::exception& e) {
      made[k].certificate = b.canon.certificate;
      made[k].hash = b.canon.hash;
      made[k].order = b.graph.order();
      made[k].partial = true;
      made[k].note = e.what();
    }
  });
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    CensusRecord& slot = pool[index.at(made[k].certificate)];
    made[k].names = std::move(slot.names);
    made[k].provenance = slot.provenance;
    slot = std::move(made[k]);
  }
}

}  // namespace

CensusResult sweep(const SweepConfig& c) {
  CensusResult result;
  std::vector<CensusRecord> pool;
  std::vector<Graph> graphs;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Task> tasks;
  bool want_sdd = false;
  for (const auto& f : c.families) {
    if (f == "sdd") {
      want_sdd = true;
      continue;
    }
    add_tasks(f, c, tasks);
  }
  run_tasks(tasks, c, pool, index, graphs, result, true);

  if (want_sdd) {
    // SDD of every edge-transitive base graph found so far; SDD quadruples the order.
    const long long base_cap = std::min<long long>(c.max_vertices / 4, c.bound("sdd.max_base", c.max_vertices / 4));
    std::vector<Task> derived;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!pool[i].edge_transitive() || pool[i].order > base_cap || pool[i].names.empty()) continue;
      Graph g = graphs[i];
      std::string name = "SDD(" + pool[i].names[0] + ")";
      derived.push_back({{name}, [g] { return std::optional<Graph>(sdd(g)); }});
    }
    run_tasks(derived, c, pool, index, graphs, result, true);
  }

  for (auto& r : pool)
    if (c.keep_all || r.edge_transitive() || r.tag == SymmetryClass::lr || r.tag == SymmetryClass::unclassified)
      result.records.push_back(std::move(r));
  sort_records(result.records);
  return result;
}

CensusResult census_of(const std::vector<std::pair<std::string, Graph>>& named, const SweepConfig& c,
                       Provenance provenance) {
  CensusResult result;
  std::vector<CensusRecord> pool;
  std::vector<Graph> graphs;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Task> tasks;
  for (const auto& [name, g] : named) tasks.push_back({{name}, [g] { return std::optional<Graph>(g); }});
  run_tasks(tasks, c, pool, index, graphs, result, false);
  for (auto& r : pool) {
    r.provenance = provenance;
    result.records.push_back(std::move(r));
  }
  sort_records(result.records);
  return result;
}

std::vector<CensusRecord> merge_records(std::vector<CensusRecord> a, const std::vector<CensusRecord>& b) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < a.size(); ++i) index.emplace(a[i].certificate, i);
  for (const auto& r : b) {
    auto it = index.find(r.certificate);
    if (it == index.end()) {
      index.emplace(r.certificate, a.size());
      a.push_back(r);
      continue;
    }
    CensusRecord& x = a[it->second];
    add_names(x, r.names);
    if (x.provenance != r.provenance) x.provenance = Provenance::both;
  }
  sort_records(a);
  return a;
}

std::vector<IdentityRow> cross_identify(const std::vector<CensusRecord>& records) {
  std::vector<IdentityRow> rows;
  for (const auto& r : records)
    if (r.names.size() >= 2) rows.push_back({r.hash, r.order, r.names});
  return rows;
}

ImportResult import_external(std::istream& in, const std::string& prefix, const SweepConfig& c) {
  ImportResult out;
  std::vector<std::pair<std::string, Graph>> named;
  std::map<int, int> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.rfind(">>graph6<<", 0) == 0) t.erase(0, 10);
    if (t.empty()) continue;
    try {
      Graph g = decode_g6(t);
      if (!is_connected(g)) throw Error("graph is disconnected");
      int i = ++seen[g.order()];
      named.emplace_back(prefix + "[" + std::to_string(g.order()) + "," + std::to_string(i) + "]", std::move(g));
    } catch (const std::exception& e) {
      out.errors.push_back({lineno, e.what()});
    }
  }
  out.census = census_of(named, c, Provenance::imported);
  return out;
}

ImportResult import_external(const std::string& path, const std::string& prefix, const SweepConfig& c) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return import_external(in, prefix, c);
}

void emit_json(const std::vector<CensusRecord>& records, std::ostream& out) {
  using ojson = nlohmann::ordered_json;
  ojson arr = ojson::array();
  for (const auto& r : records) {
    ojson j;
    j["hash"] = hash_hex(r.hash);
    j["order"] = r.order;
    j["girth"] = r.girth ? ojson(*r.girth) : ojson(nullptr);
    j["diameter"] = r.diameter ? ojson(*r.diameter) : ojson(nullptr);
    j["aut_order"] = r.aut_order.str();
    j["class"] = to_string(r.tag);
    j["bipartite"] = r.bipartite;
    j["worthy"] = r.worthy;
    j["consistent_cycles"] = {{"complete", r.cycles_complete}, {"orbits", r.cycle_orbits}, {"lengths", r.cycle_lengths}};
    j["names"] = r.names;
    j["provenance"] = to_string(r.provenance);
    j["partial"] = r.partial;
    j["note"] = r.note;
    j["g6"] = r.g6;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

void emit_csv(const std::vector<CensusRecord>& records, std::ostream& out) {
  out << "hash,order,girth,diameter,aut_order,class,names\n";
  for (const auto& r : records) {
    std::string names;
    for (const auto& n : r.names) names += (names.empty() ? "" : ";") + n;
    std::string quoted = "\"";
    for (char ch : names) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    quoted += '"';
    out << hash_hex(r.hash) << ',' << r.order << ',' << (r.girth ? std::to_string(*r.girth) : "") << ','
        << (r.diameter ? std::to_string(*r.diameter) : "") << ',' << r.aut_order.str() << ',' << to_string(r.tag) << ','
        << quoted << '\n';
  }
}

void emit_g6(const std::vector<CensusRecord>& records, std::ostream& out) {
  for (const auto& r : records) out << r.g6 << '\n';
}

void emit_all(const std::vector<CensusRecord>& records, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* file) {
    std::ofstream f(std::filesystem::path(dir) / file);
    if (!f) throw Error(std::string("cannot write ") + file + " in " + dir);
    return f;
  };
  auto j = open("census.json");
  emit_json(records, j);
  auto c = open("census.csv");
  emit_csv(records, c);
  auto g = open("census.g6");
  emit_g6(records, g);
}

}  // namespace tetra
