// Copyright 2026 The tricount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tricount: count triangles, benchmark kernels, fit and compare power-law
// time models.
//
//   tricount count    --input F --algo {ae|a2a|lu|oracle|all}
//   tricount bench    --input F --algo X --trials K [--include-aux] [--verify]
//   tricount sweep    (--inputs DIR | --gen SPEC...) --algos LIST --trials K --out CSV
//   tricount fit      --in CSV [--snap] [--min-ne N] --out JSON
//   tricount compare  [--fit JSON] --grid LO:HI:POINTS --out PLOTDATA
//   tricount generate --kind {kronecker|er} ...

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tricount/tricount.hpp"

namespace fs = std::filesystem;
using namespace tricount;

namespace {

struct DialectFlags {
  int base = 1;
  bool strict_tabs = false;
  bool no_weight = false;
  bool compact_ids = false;

  void add_to(CLI::App* app) {
    app->add_option("--base", base, "Index base of vertex ids in edge files")
        ->check(CLI::IsMember({0, 1}));
    app->add_flag("--strict-tabs", strict_tabs, "Require exactly one tab between fields");
    app->add_flag("--no-weight", no_weight, "Write edge files without the weight column");
    app->add_flag("--compact-ids", compact_ids, "Renumber vertex ids densely on load");
  }

  TsvDialect dialect() const {
    TsvDialect d;
    d.index_base = base;
    d.strict_tabs = strict_tabs;
    d.has_weight_column = !no_weight;
    return d;
  }

  LoadOptions load_options() const { return {compact_ids}; }
};

struct Options {
  DialectFlags dialect;
  std::string input;
  std::string algo = "all";
  std::string algos = "ae,a2a,lu";
  std::string inputs_dir;
  std::vector<std::string> gens;
  std::string in;
  std::string out;
  std::string fit_path;
  std::string grid = "1e4:1e11:8";
  std::string kind;
  std::string seed_graph;
  std::string fit_algo;
  std::uint64_t trials = 3;
  std::uint64_t n = 0;
  std::uint64_t rng_seed = 1;
  std::uint64_t max_vertices = GenLimits{}.max_vertices;
  double p = 0.0;
  double min_ne = 0.0;
  int power = 1;
  unsigned threads = 1;
  bool include_aux = false;
  bool verify = false;
  bool snap = false;
  bool no_refs = false;
};

// Writes to `path`, or stdout when empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  fn(out);
  if (!out) throw IoError("write to " + path + " failed");
}

std::vector<Algorithm> parse_algorithm_list(const std::string& list) {
  std::vector<Algorithm> algos;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      algos.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
      continue;
    }
    auto a = parse_algorithm(item);
    if (!a) throw DomainError("unknown algorithm '" + item + "'");
    algos.push_back(*a);
  }
  if (algos.empty()) throw DomainError("no algorithms selected");
  return algos;
}

BenchOptions bench_options(const Options& o) {
  BenchOptions b;
  b.trials = o.trials;
  b.include_aux = o.include_aux;
  b.verify = o.verify;
  b.kernel.threads = o.threads;
  return b;
}

int cmd_count(const Options& o) {
  const auto g = load_graph(o.input, o.dialect.dialect(), o.dialect.load_options());
  std::cout << "graph: " << g.name << '\n'
            << "vertices: " << g.adjacency.num_vertices() << '\n'
            << "edges: " << g.n_e << '\n';
  KernelOptions k;
  k.threads = o.threads;
  std::optional<count_t> agreed;
  bool mismatch = false;
  for (auto algo : parse_algorithm_list(o.algo)) {
    const auto r = count_triangles(g.adjacency, algo, k);
    std::cout << "algorithm: " << to_string(algo) << " triangles: " << r.n_t
              << " kernel_s: " << format_double(r.kernel_seconds)
              << " aux_s: " << format_double(r.aux_seconds) << '\n';
    if (agreed && *agreed != r.n_t) mismatch = true;
    agreed = r.n_t;
  }
  if (mismatch) {
    std::cerr << "error: algorithms disagree on the triangle count\n";
    return 1;
  }
  std::cout << "triangles: " << *agreed << '\n';
  return 0;
}

int cmd_bench(const Options& o) {
  const auto g = load_graph(o.input, o.dialect.dialect(), o.dialect.load_options());
  std::vector<MeasurementRecord> records;
  for (auto algo : parse_algorithm_list(o.algo)) {
    records.push_back(run_benchmark(g.adjacency, g.name, algo, bench_options(o)));
    if (records.back().low_confidence) {
      std::cerr << "note: " << g.name << "/" << records.back().algorithm
                << " median time is below 10 clock ticks\n";
    }
  }
  with_output(o.out, [&](std::ostream& out) { write_measurement_csv(records, out); });
  return 0;
}

// er:N:P:SEED  or  kron:SEEDFILE:K  or  kron:SEEDFILE:K1-K2
std::vector<SweepGraph> parse_gen_spec(const std::string& spec, const Options& o) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  GenLimits limits;
  limits.max_vertices = o.max_vertices;
  std::vector<SweepGraph> graphs;
  if (parts.size() == 4 && parts[0] == "er") {
    GenSpec g;
    g.kind = GenKind::kErdosRenyi;
    g.n = std::stoull(parts[1]);
    g.p = std::stod(parts[2]);
    g.rng_seed = std::stoull(parts[3]);
    g.validate();
    std::cerr << "# " << g.describe() << '\n';
    graphs.push_back({erdos_renyi_name(g.n, g.p, g.rng_seed), [g] {
                        return adjacency_from_edges(generate(g));
                      }});
    return graphs;
  }
  if (parts.size() == 3 && parts[0] == "kron") {
    int lo = 0, hi = 0;
    const auto dash = parts[2].find('-');
    if (dash == std::string::npos) {
      lo = hi = std::stoi(parts[2]);
    } else {
      lo = std::stoi(parts[2].substr(0, dash));
      hi = std::stoi(parts[2].substr(dash + 1));
    }
    if (lo < 1 || hi < lo) throw DomainError("bad kronecker power range in '" + spec + "'");
    const auto seed = load_graph(parts[1], o.dialect.dialect(), o.dialect.load_options());
    const auto seed_adj = seed.adjacency;
    for (int k = lo; k <= hi; ++k) {
      graphs.push_back({seed.name + "-kron" + std::to_string(k),
                        [seed_adj, k, limits] { return kronecker_power(seed_adj, k, limits); }});
    }
    return graphs;
  }
  throw DomainError("bad --gen spec '" + spec + "' (expected er:N:P:SEED or kron:FILE:K[-K2])");
}

int cmd_sweep(const Options& o) {
  std::vector<SweepGraph> graphs;
  if (!o.inputs_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.inputs_dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    const auto dialect = o.dialect.dialect();
    const auto load = o.dialect.load_options();
    for (const auto& f : files) {
      graphs.push_back({f.stem().string(), [f, dialect, load] {
                          return load_graph(f, dialect, load).adjacency;
                        }});
    }
  }
  for (const auto& spec : o.gens) {
    auto more = parse_gen_spec(spec, o);
    graphs.insert(graphs.end(), more.begin(), more.end());
  }
  if (graphs.empty()) throw DomainError("sweep needs --inputs or --gen");
  const auto algos = parse_algorithm_list(o.algos);
  const auto entries = sweep(graphs, algos, bench_options(o));
  std::vector<MeasurementRecord> records;
  int failures = 0;
  for (const auto& e : entries) {
    if (e.ok()) {
      records.push_back(*e.record);
    } else {
      std::cerr << "error: " << e.graph_name << "/" << e.algorithm << ": " << e.error << '\n';
      ++failures;
    }
  }
  with_output(o.out, [&](std::ostream& out) { write_measurement_csv(records, out); });
  return failures == 0 ? 0 : 1;
}

int cmd_fit(const Options& o) {
  std::ifstream in(o.in);
  if (!in) throw IoError("cannot open " + o.in);
  auto records = read_measurement_csv(in);
  if (!o.fit_algo.empty()) {
    std::erase_if(records, [&](const MeasurementRecord& r) { return r.algorithm != o.fit_algo; });
  }
  FitOptions opt;
  opt.snap = o.snap;
  opt.min_ne = o.min_ne;
  const auto fit = fit_power_law(fit_points(records), opt);
  const auto json = to_json(fit).dump(2);
  if (o.out.empty() || o.out == "-") {
    std::cout << json << '\n';
  } else {
    with_output(o.out, [&](std::ostream& out) { out << json << '\n'; });
  }
  std::cout << describe_fit(fit) << '\n';
  return 0;
}

int cmd_compare(const Options& o) {
  std::optional<PowerLawFit> fit;
  if (!o.fit_path.empty()) {
    std::ifstream in(o.fit_path);
    if (!in) throw IoError("cannot open " + o.fit_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(1, std::string("fit JSON: ") + e.what());
    }
    fit = fit_from_json(j);
  }
  std::vector<std::string> parts;
  std::stringstream ss(o.grid);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw DomainError("--grid expects LO:HI:POINTS");
  const auto grid = log_grid(std::stod(parts[0]), std::stod(parts[1]), std::stoull(parts[2]));
  std::vector<ReferenceModel> refs;
  if (!o.no_refs) refs = reference_table();
  const auto table = compare(fit, refs, grid);
  with_output(o.out, [&](std::ostream& out) { write_plot_data(table, out); });
  if (fit && !o.out.empty() && o.out != "-") {
    std::cout << "n_e\ttime_s\trate_eps\ttime_ratio_to_soa\n";
    for (const auto& p : table.series.back().points) {
      std::cout << format_double(p.n_e) << '\t' << format_double(p.time_s) << '\t'
                << format_double(p.rate_eps) << '\t' << format_double(p.time_ratio_to_soa) << '\n';
    }
  }
  return 0;
}

int cmd_generate(const Options& o) {
  GenSpec spec;
  GenLimits limits;
  limits.max_vertices = o.max_vertices;
  if (o.kind == "er") {
    spec.kind = GenKind::kErdosRenyi;
    spec.n = o.n;
    spec.p = o.p;
    spec.rng_seed = o.rng_seed;
    std::cerr << "# rng=" << kRngName << " rng_seed=" << o.rng_seed << '\n';
  } else {
    if (o.seed_graph.empty()) throw DomainError("--kind kronecker needs --seed-graph");
    spec.kind = GenKind::kKroneckerPower;
    spec.power = o.power;
    TsvDialect in_dialect = o.dialect.dialect();
    std::ifstream in(o.seed_graph);
    if (!in) throw IoError("cannot open " + o.seed_graph);
    spec.seed_graph = parse_tsv(in, in_dialect);
    spec.seed_graph.name = fs::path(o.seed_graph).stem().string();
  }
  const auto edges = generate(spec, limits);
  const auto text = write_generated(edges, spec, o.dialect.dialect());
  with_output(o.out, [&](std::ostream& out) { out << text; });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle counting kernels and power-law benchmark analysis"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Count triangles in an edge-list file");
  count->add_option("--input", o.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  count->add_option("--algo", o.algo, "ae|a2a|lu|oracle|all (comma list allowed)");
  count->add_option("--threads", o.threads, "Worker threads per kernel");
  o.dialect.add_to(count);

  auto* bench = app.add_subcommand("bench", "Time a kernel on one graph, emit measurement CSV");
  bench->add_option("--input", o.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  bench->add_option("--algo", o.algo, "Kernel id or comma list")->required();
  bench->add_option("--trials", o.trials, "Timed trials after one warm-up")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--include-aux", o.include_aux, "Add incidence build / split time");
  bench->add_flag("--verify", o.verify, "Cross-check counts against the oracle");
  bench->add_option("--threads", o.threads, "Worker threads per kernel");
  bench->add_option("--out", o.out, "CSV output (default stdout)");
  o.dialect.add_to(bench);

  auto* sw = app.add_subcommand("sweep", "Benchmark many graphs x algorithms");
  sw->add_option("--inputs", o.inputs_dir, "Directory of edge-list files")
      ->check(CLI::ExistingDirectory);
  sw->add_option("--gen", o.gens, "er:N:P:SEED or kron:SEEDFILE:K[-K2]; repeatable");
  sw->add_option("--algos", o.algos, "Comma list of kernel ids");
  sw->add_option("--trials", o.trials, "Timed trials after one warm-up")->check(CLI::PositiveNumber);
  sw->add_flag("--include-aux", o.include_aux, "Add incidence build / split time");
  sw->add_flag("--verify", o.verify, "Cross-check counts against the oracle");
  sw->add_option("--threads", o.threads, "Worker threads per kernel");
  sw->add_option("--max-vertices", o.max_vertices, "Generated-graph vertex cap");
  sw->add_option("--out", o.out, "CSV output (default stdout)");
  o.dialect.add_to(sw);

  auto* fit = app.add_subcommand("fit", "Fit T = alpha * N_e^beta to a measurement CSV");
  fit->add_option("--in", o.in, "Measurement CSV")->required()->check(CLI::ExistingFile);
  fit->add_flag("--snap", o.snap, "Snap beta to the nearest of 1, 4/3, 5/3");
  fit->add_option("--min-ne", o.min_ne, "Ignore rows with fewer edges");
  fit->add_option("--algo", o.fit_algo, "Only use rows of this kernel");
  fit->add_option("--out", o.out, "JSON output (default stdout)");

  auto* cmp = app.add_subcommand("compare", "Emit plot data for reference models and a fit");
  cmp->add_option("--fit", o.fit_path, "Fit JSON from `fit`")->check(CLI::ExistingFile);
  cmp->add_option("--grid", o.grid, "LO:HI:POINTS, log-spaced n_e grid");
  cmp->add_flag("--no-refs", o.no_refs, "Omit the reference table series");
  cmp->add_option("--out", o.out, "Plot data output (default stdout)");

  auto* gen = app.add_subcommand("generate", "Write a synthetic edge list");
  gen->add_option("--kind", o.kind, "kronecker|er")
      ->required()
      ->check(CLI::IsMember({"kronecker", "er"}));
  gen->add_option("--n", o.n, "Vertex count (er)");
  gen->add_option("--p", o.p, "Edge probability (er)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.rng_seed, "RNG seed (er)");
  gen->add_option("--seed-graph", o.seed_graph, "Seed edge list (kronecker)")
      ->check(CLI::ExistingFile);
  gen->add_option("--power", o.power, "Kronecker power (kronecker)")->check(CLI::PositiveNumber);
  gen->add_option("--max-vertices", o.max_vertices, "Vertex cap");
  gen->add_option("--out", o.out, "Edge-list output (default stdout)");
  o.dialect.add_to(gen);

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return cmd_count(o);
    if (bench->parsed()) return cmd_bench(o);
    if (sw->parsed()) return cmd_sweep(o);
    if (fit->parsed()) return cmd_fit(o);
    if (cmp->parsed()) return cmd_compare(o);
    if (gen->parsed()) return cmd_generate(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
