// Command-line front end: validation, connectivity, removal classification,
// batch enumeration, consensus simulation and the self-verification suites.
//
// Exit codes: 0 success, 1 validation error (bad input), 2 numerical or
// internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laycon/analysis.hpp"
#include "laycon/consensus.hpp"
#include "laycon/errors.hpp"
#include "laycon/graph.hpp"
#include "laycon/json_io.hpp"
#include "laycon/spectral.hpp"
#include "laycon/verify.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Subset list file: one removal set per line, ids comma separated; an empty
// line or "---" denotes the empty set; '#' starts a comment.
std::vector<std::vector<std::string>> load_subsets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw laycon::ValidationError("cannot read subsets file '" + path + "'");
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "---") {
      out.push_back({});
      continue;
    }
    if (trimmed.empty()) {
      if (!line.empty() && line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (line.empty()) continue;
      out.push_back({});
      continue;
    }
    out.push_back(split_ids(trimmed));
  }
  return out;
}

int cmd_check(const std::string& file) {
  const laycon::LayeredGraph g = laycon::load_layered_graph(file);
  const auto decomposition = laycon::validate_layered_path(g);
  std::printf("nodes: %d, layers: %d\n", g.node_count(), g.layer_count());
  for (int li = 0; li < g.layer_count(); ++li) {
    std::string row;
    for (std::size_t c = 0; c < decomposition.per_layer[li].size(); ++c) {
      if (c) row += "  |  ";
      const auto& path = decomposition.per_layer[li][c];
      for (std::size_t k = 0; k < path.nodes.size(); ++k) {
        if (k) row += " - ";
        row += g.base().label(path.nodes[k]);
      }
    }
    if (row.empty()) row = "(empty)";
    std::printf("layer %d: %s\n", li + 1, row.c_str());
  }
  const auto overlap = laycon::check_overlap_condition(g);
  if (overlap.satisfied) {
    std::printf("overlap condition: satisfied\n");
  } else {
    std::printf("overlap condition: violated\n");
    for (const auto& v : overlap.violations) {
      std::string only_u, only_v;
      for (laycon::NodeIndex x : v.only_u) only_u += g.base().label(x) + " ";
      for (laycon::NodeIndex x : v.only_v) only_v += g.base().label(x) + " ";
      std::printf("  edge (%s, %s): upper neighbors only of the first = { %s}, only of the "
                  "second = { %s}\n",
                  g.base().label(v.u).c_str(), g.base().label(v.v).c_str(), only_u.c_str(),
                  only_v.c_str());
    }
  }
  return 0;
}

int cmd_lambda2(const std::string& file) {
  const laycon::LayeredGraph g = laycon::load_layered_graph(file);
  std::cout << laycon::to_json(laycon::lambda2_layered(g)).dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& file, const std::string& remove_csv) {
  const laycon::LayeredGraph g = laycon::load_layered_graph(file);
  const auto report = laycon::classify_removal(g, split_ids(remove_csv));
  std::printf("%s\n", laycon::removal_row(report).c_str());
  return 0;
}

int cmd_enumerate(const std::string& file, int max_k, const std::string& subsets_file,
                  const std::string& out_file, int jobs, bool force) {
  const laycon::LayeredGraph g = laycon::load_layered_graph(file);
  laycon::EnumerateOptions opts;
  opts.max_size = max_k;
  opts.jobs = jobs;
  opts.override_guard = force;
  if (!subsets_file.empty()) opts.subsets = load_subsets(subsets_file);
  const auto table = laycon::enumerate_removals(g, opts);
  const std::string csv = laycon::to_csv(table);
  if (out_file.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    std::ofstream out(out_file);
    if (!out) throw laycon::ValidationError("cannot write '" + out_file + "'");
    out << csv;
  }
  return 0;
}

int cmd_simulate(const std::string& file, const std::string& config_file,
                 const std::string& out_dir) {
  const laycon::LayeredGraph g = laycon::load_layered_graph(file);
  laycon::SimConfig cfg;
  if (!config_file.empty()) cfg = laycon::load_sim_config(config_file);
  const laycon::FormationSpec formation = laycon::lattice_formation(g, 1.0, cfg.leader_velocity);
  const laycon::SimTrace trace = laycon::simulate(g, formation, cfg);
  const double rate = laycon::convergence_rate(trace);
  const auto lambda2 = laycon::lambda2_layered(g).lambda2;

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream out(fs::path(out_dir) / "trace.csv");
    if (!out) throw laycon::ValidationError("cannot write trace.csv under '" + out_dir + "'");
    out << laycon::trace_csv(trace);
  }
  const laycon::json summary = laycon::sim_summary_json(rate, lambda2);
  {
    std::ofstream out(fs::path(out_dir) / "summary.json");
    if (!out) throw laycon::ValidationError("cannot write summary.json under '" + out_dir + "'");
    out << summary.dump(2) << "\n";
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_verify(int seeds, int jobs) {
  laycon::verify::VerifyOptions opts;
  opts.seeds = seeds;
  opts.jobs = jobs;
  const auto results = laycon::verify::run_verification(opts);
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("%-34s %s  (%ld checks, %.2fs)\n", r.name.c_str(), r.passed ? "ok  " : "FAIL",
                r.checks, r.seconds);
    if (!r.passed) {
      std::printf("    %s\n", r.detail.c_str());
      all_ok = false;
    }
  }
  return all_ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"layered graph connectivity toolkit"};
  app.require_subcommand(1);

  std::string file, remove_csv, subsets_file, out_path, config_file;
  int max_k = 0, jobs = 1, seeds = 500;
  bool force = false;

  auto* check = app.add_subcommand("check", "validate a graph file and print its layer paths");
  check->add_option("file", file, "graph JSON file")->required();

  auto* lambda2 = app.add_subcommand("lambda2", "print the connectivity report as JSON");
  lambda2->add_option("file", file, "graph JSON file")->required();

  auto* classify = app.add_subcommand("classify", "classify one removal set");
  classify->add_option("file", file, "graph JSON file")->required();
  classify->add_option("--remove", remove_csv, "comma-separated node ids")->required();

  auto* enumerate = app.add_subcommand("enumerate", "classify removal subsets as CSV");
  enumerate->add_option("file", file, "graph JSON file")->required();
  enumerate->add_option("--max-k", max_k, "enumerate all subsets up to this size");
  enumerate->add_option("--subsets", subsets_file, "file with one removal set per line");
  enumerate->add_option("--out", out_path, "write CSV here instead of stdout");
  enumerate->add_option("--jobs", jobs, "parallel evaluation threads");
  enumerate->add_flag("--force", force, "lift the subset-count guard");

  auto* simulate = app.add_subcommand("simulate", "run the consensus formation simulation");
  simulate->add_option("file", file, "graph JSON file")->required();
  simulate->add_option("--config", config_file, "simulation config JSON");
  simulate->add_option("--out", out_path, "output directory")->required();

  auto* verify = app.add_subcommand("verify", "run the full property suites");
  verify->add_option("--seeds", seeds, "generator seeds per property suite");
  verify->add_option("--jobs", jobs, "parallel evaluation threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return cmd_check(file);
    if (lambda2->parsed()) return cmd_lambda2(file);
    if (classify->parsed()) return cmd_classify(file, remove_csv);
    if (enumerate->parsed())
      return cmd_enumerate(file, max_k, subsets_file, out_path, jobs, force);
    if (simulate->parsed()) return cmd_simulate(file, config_file, out_path);
    if (verify->parsed()) return cmd_verify(seeds, jobs);
  } catch (const laycon::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const laycon::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 0;
}
