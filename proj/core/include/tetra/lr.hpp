#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tetra/decomposition.hpp"
#include "tetra/families.hpp"
#include "tetra/graph.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

// Symmetries of the base preserving the cycle partition, and the coloring as
// well when by_color is set. Acts on base vertices.
PermGroup decomposition_aut(const CycleDecomposition& cd, bool by_color = false,
                            std::uint64_t node_budget = 10'000'000);

// Is there an element of Aut(cd) reversing cycle c while fixing v and every
// vertex of the other cycle through v? `unknown` when a search budget trips.
Tri has_swapper(const CycleDecomposition& cd, int c, int v, std::uint64_t sift_budget = 50'000'000);
Tri has_swapper(const CycleDecomposition& cd, const PermGroup& aut, int c, int v,
                std::uint64_t sift_budget = 50'000'000);

struct LRVerdict {
  Tri vertex_transitive = Tri::unknown;   // color-preserving subgroup
  Tri all_swappers = Tri::unknown;
  Tri no_color_swap = Tri::unknown;
  Tri no_alternating_4cycle = Tri::unknown;
  bool suitable = false;  // all four are yes
  std::string witness;    // first failing condition, empty when suitable
};

// Needs a colored decomposition of a connected graph.
LRVerdict check_suitable_lr(const CycleDecomposition& cd);
// Throws ParameterError unless cd is a suitable LR structure.
Graph pl_of_lr(const CycleDecomposition& cd);

// Br(k,n;r) and MBr(k,n;r); (i,j) -> i*n + j. Green (i,j)~(i,j+r^i), red the rungs.
CycleDecomposition barrel(int k, int n, int r, bool mutant);

// CS(g,cd,variant). Split vertex v_c (c the first or second cycle at v) is
// 2v + slot; lifted vertex (x,s) is 2x + s. Red are the 4-cycles over each v.
CycleDecomposition cycle_structure_double(const Graph& g, const CycleDecomposition& cd, int variant);

// SoP(4m,4n); (i,j,k) -> (i*4n + j)*2 + k.
CycleDecomposition sop(int fourm, int fourn);

// RC(n,k); even k is disconnected and throws. (i,(r,j)) -> (i*k + r)*n + j and
// ((i,r),j) -> k*n*n + (i*k + r)*n + j.
CycleDecomposition rows_and_columns(int n, int k);

// MSY(m,n;r,t) with first-kind edges red and second-kind green.
CycleDecomposition msy_lr(int m, int n, int r, int t);

// BC_n({0,a},{b,c}): green A_i ~ B_i, B_{i+a}; red A_i ~ B_{i+b}, B_{i+c}.
CycleDecomposition bicirculant_lr(int n, int a, int b, int c);
// Which of the three known suitable parameter shapes (1, 2, 3) applies, else 0.
int bicirculant_lr_case(int n, int a, int b, int c);

// PX(n,k) into 4-cycles (i,0x),(i+1,x0),(i,1x),(i+1,x1); uncolored.
CycleDecomposition px_decomposition(int n, int k);
// Horizontal cycles red, vertical cycles green.
CycleDecomposition torus_decomposition(TorusKind kind, int b, int c);

// A finite group on elements 0..count-1.
struct FiniteGroup {
  std::size_t count = 0;
  std::function<std::size_t(std::size_t, std::size_t)> multiply;
  std::size_t identity = 0;
};

FiniteGroup dihedral_group(int n);  // r^k s^f -> 2k + f
// Closure of the generators; element 0 is the identity.
struct PermFiniteGroup {
  FiniteGroup group;
  std::vector<Perm> elements;
  std::size_t index_of(const Perm& p) const;
};
PermFiniteGroup finite_group_from_perms(std::size_t degree, const std::vector<Perm>& gens,
                                        std::size_t limit = 200'000);

// Cay(A;R,G) with red a ~ s*a for s in R, green likewise for G. When `quotient`
// is non-empty, vertices are the right cosets aN of N = <quotient>, numbered by
// smallest element. Disconnected structures throw ParameterError, collapsing
// quotients DegenerateParameters.
CycleDecomposition cayley_lr(const FiniteGroup& A, std::array<std::size_t, 2> R, std::array<std::size_t, 2> G,
                             const std::vector<std::size_t>& quotient = {});
// Automorphisms of A fixing R pointwise and swapping G, and vice versa.
bool automorphism_pair_condition(const FiniteGroup& A, std::array<std::size_t, 2> R, std::array<std::size_t, 2> G);
bool rg_differs_from_gr(const FiniteGroup& A, std::array<std::size_t, 2> R, std::array<std::size_t, 2> G);

// Z_n^dim semidirect the cyclic group of a coordinate permutation pi.
// Element (v, e) -> e * n^dim + sum v_i n^i and (v,e)(w,f) = (v + pi^e(w), e + f).
struct AffineGroup {
  int n = 0;
  std::vector<int> pi;  // coordinate i moves to pi[i]
  int period = 1;
  FiniteGroup group() const;
  std::size_t translation(const std::vector<int>& v) const;
  std::size_t rotation(int e) const;  // pi^e
};

struct CayleyLRSpec {
  FiniteGroup group;
  std::array<std::size_t, 2> R{}, G{};
  std::vector<std::size_t> quotient;
};
CayleyLRSpec aff_lr_spec(int n, int k);        // AffLR(n,k): Z_n^k
CayleyLRSpec proj_lr_spec(int k, int n);       // ProjLR(k,n): Z_n^k mod <(1..1)>
CayleyLRSpec proj_lr_circ_spec(int k2, int n); // ProjLR°(2k,n): Z_n^{2k} mod <e_i - e_{i+k}>
CayleyLRSpec aff_lr2_spec(int k);              // AffLR_2(k)
CayleyLRSpec proj_lr_prime_spec(int k);        // ProjLR'(k)
CayleyLRSpec proj_lr_dprime_spec(int k);       // ProjLR''(k)
CycleDecomposition cayley_lr(const CayleyLRSpec& s);

// Traces the alternating cycles of an orientation where every vertex has
// in- and out-degree 0 or 2.
std::vector<std::vector<int>> alternating_cycles(const Orientation& o);
// The same cycles as a decomposition of a tetravalent graph with in/out-valence 2.
CycleDecomposition alternating_decomposition(const Graph& g, const Orientation& o);

}  // namespace tetra
