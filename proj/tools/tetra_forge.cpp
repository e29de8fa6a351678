// tetra-forge: census sweeps, classification of graph6 input, name lookup.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tetra/census.hpp"

using namespace tetra;

namespace {

constexpr int kOk = 0, kPartial = 1, kConfigError = 2;

std::vector<std::string> split_families(const std::string& list) {
  std::vector<std::string> out;
  std::istringstream in(list);
  std::string f;
  while (std::getline(in, f, ','))
    if (!f.empty()) out.push_back(f);
  return out;
}

struct SweepArgs {
  std::string config, out, families;
  std::optional<int> max_vertices, workers;
  bool keep_all = false;
};

int run_sweep(const SweepArgs& a) {
  SweepConfig c;
  try {
    std::string text;
    if (!a.config.empty()) {
      std::ifstream in(a.config);
      if (!in) throw ConfigError("cannot read config " + a.config);
      std::ostringstream s;
      s << in.rdbuf();
      text = s.str();
    }
    // Flags override the file; reuse the parser so both are validated the same way.
    std::ostringstream extra;
    if (!a.families.empty()) extra << "families = " << a.families << '\n';
    if (a.max_vertices) extra << "max_vertices = " << *a.max_vertices << '\n';
    if (a.workers) extra << "workers = " << *a.workers << '\n';
    if (a.keep_all) extra << "keep_all = true\n";
    c = parse_sweep_config(text + "\n" + extra.str());
  } catch (const ConfigError& e) {
    std::cerr << "tetra-forge: " << e.what() << '\n';
    return kConfigError;
  }

  CensusResult r = sweep(c);
  emit_all(r.records, a.out);
  std::size_t partial = 0;
  for (const auto& rec : r.records) partial += rec.partial;
  std::cout << r.constructed << " graphs built, " << r.records.size() << " records, " << cross_identify(r.records).size()
            << " identities, " << partial << " partial, " << r.failures.size() << " failures\n";
  for (const auto& f : r.failures) std::cerr << "failed: " << f.name << ": " << f.reason << '\n';
  return r.partial() || !r.failures.empty() ? kPartial : kOk;
}

int report(const CensusResult& r) {
  emit_json(r.records, std::cout);
  return r.partial() ? kPartial : kOk;
}

int run_classify(const std::string& path) {
  SweepConfig c;
  ImportResult imp;
  try {
    imp = import_external(path, "input", c);
  } catch (const Error& e) {
    std::cerr << "tetra-forge: " << e.what() << '\n';
    return kConfigError;
  }
  for (const auto& e : imp.errors) std::cerr << path << ":" << e.line << ": " << e.message << '\n';
  int code = report(imp.census);
  return imp.errors.empty() ? code : kPartial;
}

int run_identify(const std::string& name) {
  OrientedGraph g;
  try {
    g = build_named(name);
  } catch (const Error& e) {
    std::cerr << "tetra-forge: " << e.what() << '\n';
    return kConfigError;
  }
  if (!is_connected(g.graph)) {
    std::cerr << "tetra-forge: " << name << " is disconnected\n";
    return kConfigError;
  }
  return report(census_of({{name, g.graph}}, SweepConfig{}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of tetravalent edge-transitive graphs"};
  app.require_subcommand(1);

  SweepArgs sa;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the families and write census.{json,csv,g6}");
  sweep_cmd->add_option("--config", sa.config, "key = value config file");
  sweep_cmd->add_option("--out", sa.out, "Output directory")->required();
  sweep_cmd->add_option("--max-vertices", sa.max_vertices, "Vertex cap (default 512)");
  sweep_cmd->add_option("--families", sa.families, "Comma-separated families, or 'all'");
  sweep_cmd->add_option("--workers", sa.workers, "Worker threads");
  sweep_cmd->add_flag("--keep-all", sa.keep_all, "Keep graphs that are neither edge-transitive nor LR");

  std::string g6_path;
  auto* classify_cmd = app.add_subcommand("classify", "Classify every graph in a graph6 file");
  classify_cmd->add_option("g6-file", g6_path, "Newline-delimited graph6")->required();

  std::string name;
  auto* identify_cmd = app.add_subcommand("identify", "Build a graph from its family name and classify it");
  identify_cmd->add_option("name", name, "Family name, e.g. 'PS(3,7;2)'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  try {
    if (*sweep_cmd) return run_sweep(sa);
    if (*classify_cmd) return run_classify(g6_path);
    if (*identify_cmd) return run_identify(name);
  } catch (const std::exception& e) {
    std::cerr << "tetra-forge: " << e.what() << '\n';
    return kPartial;
  }
  return kOk;
}
