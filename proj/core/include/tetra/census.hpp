#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tetra/classify.hpp"
#include "tetra/families.hpp"
#include "tetra/graph.hpp"
#include "tetra/names.hpp"

namespace tetra {

// Graph denoted by a family name. Heads: W, C_n, DW, {4,4} (all three kinds),
// PS, MPS, PX, R_n, BC_n, Pr_n, MSY, MSZ, MC3, CPM, AMC, PPM, K5, Oct, SDD(x),
// L(x), PL(x) for x in Br, MBr, SoP, RC, PX, {4,4}; MG, DG, HC, XI of a
// {4,4} map; DCyc_n # DCyc_m. AMC gives the component of the origin.
// Throws ParameterError for unknown heads.
OrientedGraph build_named(const FamilyName& name);
inline OrientedGraph build_named(std::string_view text) { return build_named(parse_family_name(text)); }

struct ConfigError : ParameterError {
  using ParameterError::ParameterError;
};

struct SweepConfig {
  std::vector<std::string> families;  // see census_families()
  int max_vertices = 512;
  int workers = 1;
  bool keep_all = false;  // keep graphs that are neither edge-transitive nor LR
  ClassifyOptions classify{};
  // Per-family bounds on the quadratic-or-worse grids, keyed "family.key".
  std::map<std::string, long long> bounds;
  long long bound(const std::string& key, long long fallback) const;
};

// Every family name the sweep knows, in sweep order.
const std::vector<std::string>& census_families();
// Default bounds applied when a key is missing.
const std::map<std::string, long long>& default_bounds();

// Flat "key = value" lines, '#' comments. Keys: families, max_vertices, workers,
// keep_all, node_budget, cycle_budget, and any "family.key" bound.
// Throws ConfigError.
SweepConfig parse_sweep_config(std::string_view text);

enum class Provenance { constructed, imported, both };
std::string to_string(Provenance p);

struct CensusRecord {
  std::string certificate;
  std::uint64_t hash = 0;
  std::string g6;  // canonical labelling
  int order = 0;
  std::optional<int> girth;     // absent for forests
  std::optional<int> diameter;  // absent when disconnected
  BigInt aut_order;
  SymmetryClass tag = SymmetryClass::unclassified;
  bool bipartite = false;
  bool worthy = true;
  bool cycles_complete = false;  // consistent cycle search finished
  std::size_t cycle_orbits = 0;
  std::vector<int> cycle_lengths;
  std::vector<std::string> names;  // sorted
  Provenance provenance = Provenance::constructed;
  bool partial = false;  // a budget tripped somewhere
  std::string note;

  bool edge_transitive() const;
};

struct SweepFailure {
  std::string name;
  std::string reason;
};

struct CensusResult {
  std::vector<CensusRecord> records;  // by order, then hash, then certificate
  std::vector<SweepFailure> failures;
  std::size_t constructed = 0;  // graphs built within the cap, before merging
  bool partial() const;
};

CensusResult sweep(const SweepConfig& config);

// Builds records for already-constructed graphs: classify, merge by
// certificate, keep_all and the vertex cap are ignored.
CensusResult census_of(const std::vector<std::pair<std::string, Graph>>& named, const SweepConfig& config,
                       Provenance provenance = Provenance::constructed);
// Union by certificate; names and provenance combine.
std::vector<CensusRecord> merge_records(std::vector<CensusRecord> a, const std::vector<CensusRecord>& b);

struct IdentityRow {
  std::uint64_t hash = 0;
  int order = 0;
  std::vector<std::string> names;
};
// One row per record with at least two names.
std::vector<IdentityRow> cross_identify(const std::vector<CensusRecord>& records);

struct ImportError {
  std::size_t line = 0;  // 1-based
  std::string message;
};
struct ImportResult {
  CensusResult census;
  std::vector<ImportError> errors;
};
// Newline-delimited graph6; the i-th graph of order n in file order is named prefix[n,i].
ImportResult import_external(std::istream& in, const std::string& prefix, const SweepConfig& config);
ImportResult import_external(const std::string& path, const std::string& prefix, const SweepConfig& config);

void emit_json(const std::vector<CensusRecord>& records, std::ostream& out);
void emit_csv(const std::vector<CensusRecord>& records, std::ostream& out);
void emit_g6(const std::vector<CensusRecord>& records, std::ostream& out);
// census.json, census.csv and census.g6 under dir, created when missing.
void emit_all(const std::vector<CensusRecord>& records, const std::string& dir);

}  // namespace tetra
