#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tetra/graph.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

// Vertex numbering: every family maps its coordinates to indices row-major,
// first coordinate slowest. Two-ring families put A_i at i and B_i at n+i.

// A graph together with the orientation that defines it, when there is one.
struct OrientedGraph {
  Graph graph;
  std::optional<Orientation> orientation;
};

Graph wreath(int n, int k);                          // (i,r) -> i*k + r
Graph circulant(int n, const std::vector<int>& jumps);  // C_n(a_1, a_2, ...)
Graph depleted_wreath(int n);                        // DW(n,3), (i,r) -> i*3 + r

enum class TorusKind { rot, angle, bracket };

// U = <(r,0),(s,t)>, r,t > 0, 0 <= s < r.
struct LatticeForm {
  long long r = 0, s = 0, t = 0;
  bool operator==(const LatticeForm&) const = default;
};
LatticeForm lattice_normal_form(std::array<long long, 2> u1, std::array<long long, 2> u2);
// Translation generators of U for {4,4}_{b,c}, {4,4}_<b,c>, {4,4}_[b,c].
std::array<std::array<long long, 2>, 2> torus_lattice(TorusKind kind, long long b, long long c);
// Index of lattice point (x,y) in the r-by-t grid of the normal form: y*r + x.
int torus_vertex(const LatticeForm& f, long long x, long long y);
Graph toroidal(TorusKind kind, int b, int c);

// PS(k,n;r) and MPS(k,n;r), restricted to the component of (0,0).
OrientedGraph spidergraph(int k, int n, int r, bool mutant);

enum class XeMatch { ps, mps, neither };
struct XeGraph {
  Graph graph;
  XeMatch match = XeMatch::neither;  // PS(m,2n;r) or MPS(m,2n;r)
};
XeGraph xe_graph(int m, int n, int r, int t);

// Finite abelian group Z_{o_0} x ... x Z_{o_{s-1}}; T acts on row vectors, x -> xT.
struct AbelianGroup {
  std::vector<int> orders;
  std::size_t rank() const { return orders.size(); }
  long long size() const;
  std::vector<int> reduce(std::vector<long long> x) const;
  long long index(const std::vector<int>& x) const;  // mixed radix, first coordinate slowest
  std::vector<int> element(long long idx) const;
};
using IntMatrix = std::vector<std::vector<long long>>;

struct AtteberyConditions {
  bool closes = false;     // {a_k, b_k} = {a, b}
  bool generates = false;  // c_0..c_{k-1} and sum a_i generate A
  bool kernel = false;     // a + b in the kernel of sum T^i
};

struct AtteberyConditionError : ParameterError {
  AtteberyConditionError(const std::string& what, int which) : ParameterError(what), condition(which) {}
  int condition;  // 1, 2 or 3
};

struct AtteberyGraph {
  Graph graph;  // underlying simple graph of the full digraph on A x Z_k
  Orientation digraph;
  AtteberyConditions conditions;
  bool simple = true;  // false when parallel darts were merged
};
// Vertex (x,i) -> index(x)*k + i.
AtteberyGraph attebery(const AbelianGroup& A, const IntMatrix& T, int k, const std::vector<long long>& a,
                       const std::vector<long long>& b, bool enforce);
AtteberyConditions attebery_conditions(const AbelianGroup& A, const IntMatrix& T, int k, const std::vector<long long>& a,
                                       const std::vector<long long>& b);
AtteberyGraph amc(int k, int n, const IntMatrix& M);

// CPM(n,s,t,r), component of the origin; vertex (x,i) -> index(x)*(s*t) + i before the cut.
OrientedGraph cpm(int n, int s, int t, int r);
long long cpm_predicted_order(int n, int s, int t);

Graph rose_window(int n, int a, int r);
Graph bicirculant(int n, int a, int b, int c, int d);  // BC_n(a,b,c,d)
Graph propellor(int n, int a, int b, int c, int d);    // A_i, B_i, C_i at i, n+i, 2n+i

struct Metacirculant {
  Graph graph;
  bool metacirculant = false;  // the family's stated arithmetic condition
};
Metacirculant msy(int m, int n, int r, int t);
Graph msz(int m, int n, int k, int r);
Metacirculant mc3(int m, int n, int a, int b, int r, int t, int c);

// PX(n,k): vertex (j,x) -> j*2^k + x, bit x_1 is the most significant.
Graph praeger_xu(int n, int k);
struct PxGenerators {
  Perm rho, mu;
  std::vector<Perm> sigma;  // sigma_0 .. sigma_{n-1}
  std::vector<Perm> all() const;
};
PxGenerators px_generators(int n, int k);

enum class Sporadic { k5, octahedron, odd4 };
Graph sporadic(Sporadic which);

// Quotient of a graph by a semiregular automorphism.
struct VoltageDiagram {
  int modulus = 0;
  int nodes = 0;
  struct Arc {
    int from, to, label;  // u_i -- v_{i+label}
    auto operator<=>(const Arc&) const = default;
  };
  std::vector<Arc> arcs;                        // from < to
  std::vector<std::pair<int, int>> loops;       // (node, b), 0 < b < modulus/2
  std::vector<int> semi_edges;                  // nodes carrying b = modulus/2
  std::vector<std::vector<int>> orbits;         // orbit of node u: u_0, u_1, ...
};
VoltageDiagram diagram_quotient(const Graph& g, const Perm& sigma);
Graph diagram_expand(const VoltageDiagram& d);  // vertex (u,i) -> u*modulus + i

long long mod(long long a, long long n);
long long power_mod(long long r, long long e, long long n);

}  // namespace tetra
