#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tetra/graph.hpp"

namespace tetra {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::uint32_t;

// Permutation acting on the right: (v)(p*q) = ((v)p)q.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);  // throws ConstructionError unless a bijection
  static Perm identity(std::size_t degree);
  // Permutation of 0..degree-1 given in cycle notation, e.g. {{0,1},{2,3,4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point v) const { return img_[v]; }
  const std::vector<Point>& images() const { return img_; }
  Perm inverse() const;
  bool is_identity() const;
  Point smallest_moved() const;  // degree() when identity
  std::string cycles() const;    // "(0 1 2)(3 4)", "()" for the identity

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  struct Trusted {};
  Perm(std::vector<Point> images, Trusted) : img_(std::move(images)) {}
  friend Perm compose(const Perm& p, const Perm& q);
  std::vector<Point> img_;
};

// p first, then q.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }
Perm power(const Perm& p, long long k);

struct ChainOptions {
  std::vector<Point> base_prefix;       // forced leading base points
  std::optional<BigInt> known_order;    // stop as soon as the chain reaches it
  std::uint64_t sift_budget = 50'000'000;  // Schreier generators sifted before ResourceLimit
};

namespace detail {
struct Chain;
struct LazyChain;
}  // namespace detail

enum class Tri { no, yes, unknown };

struct Transport {
  Tri status = Tri::unknown;
  std::optional<Perm> element;
};

class PermGroup {
 public:
  PermGroup();  // trivial group of degree 0
  PermGroup(std::size_t degree, std::vector<Perm> generators, ChainOptions options = {});
  // Trusted strong generating set relative to base (every generator with all
  // earlier base points fixed contributes to that level). No sifting is done.
  static PermGroup from_strong_generators(std::size_t degree, std::vector<Point> base, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  BigInt order() const;
  bool contains(const Perm& p) const;
  std::vector<Point> base() const;
  std::size_t base_length() const { return base().size(); }
  // Sizes of the basic orbits, one per base point.
  std::vector<std::size_t> basic_orbit_sizes() const;
  // Strong generators fixing the first `level` base points.
  std::vector<Perm> strong_generators(std::size_t level = 0) const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;

  // Same group, chain rebuilt so that the base starts with prefix.
  PermGroup with_base_prefix(const std::vector<Point>& prefix, std::uint64_t sift_budget = 50'000'000) const;
  PermGroup pointwise_stabilizer(const std::vector<Point>& points, std::uint64_t sift_budget = 50'000'000) const;

  // Element mapping a[i] to b[i] for all i. `unknown` only when the sift budget trips.
  Transport transporter(const std::vector<Point>& a, const std::vector<Point>& b,
                        std::uint64_t sift_budget = 50'000'000) const;

  // Deterministic pseudo-random product of generators, for tests.
  Perm random_element(std::uint64_t seed) const;

 private:
  const detail::Chain& chain() const;
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<detail::LazyChain> lazy_;
};

PermGroup build_chain(std::size_t degree, const std::vector<Perm>& generators);

// Partition of 0..n-1 into orbits of the group generated by gens, each orbit sorted,
// orbits ordered by smallest element.
std::vector<std::vector<Point>> orbits_of(std::size_t n, const std::vector<Perm>& gens);

// Orbits under an induced action. act(g, x) returns the image index of x under g.
template <class Act>
std::vector<std::vector<std::size_t>> induced_orbits(std::size_t n, const std::vector<Perm>& gens, Act act);

// Union-find helper used by the orbit routines.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::vector<std::vector<std::size_t>> classes();

 private:
  std::vector<std::size_t> parent_;
};

template <class Act>
std::vector<std::vector<std::size_t>> induced_orbits(std::size_t n, const std::vector<Perm>& gens, Act act) {
  DisjointSets ds(n);
  for (const auto& g : gens)
    for (std::size_t x = 0; x < n; ++x) ds.unite(x, act(g, x));
  return ds.classes();
}

// Edge and dart orbits on a graph for a group given by generators acting on its vertices.
std::vector<std::vector<std::size_t>> edge_orbits(const Graph& g, const std::vector<Perm>& gens);
std::vector<std::vector<std::size_t>> dart_orbits(const Graph& g, const std::vector<Perm>& gens);

}  // namespace tetra
