#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "laycon/analysis.hpp"
#include "laycon/consensus.hpp"
#include "laycon/errors.hpp"
#include "laycon/graph.hpp"
#include "laycon/spectral.hpp"

namespace laycon {

using json = nlohmann::json;

// Round to 12 significant digits so serialized floats are stable across
// runs and diffs.
inline double round_sig(double x, int digits = 12) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

namespace detail {

inline const json& require_field(const json& j, const char* field, const char* where) {
  auto it = j.find(field);
  if (it == j.end())
    throw ValidationError(std::string(where) + ": missing field \"" + field + "\"");
  return *it;
}

inline std::vector<std::pair<std::string, std::string>> parse_edge_list(const json& arr,
                                                                        const char* field) {
  if (!arr.is_array())
    throw ValidationError(std::string("\"") + field + "\" must be an array of [src, dst] pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ValidationError(std::string("\"") + field + "\" entry " + e.dump() +
                            " is not a [src, dst] pair of node names");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

} // namespace detail

// Graph file format:
//   {"layers": [["v1"], ["v2","v3"], ...],
//    "intra_edges": [["v2","v3"], ...],   undirected, listed once
//    "inter_edges": [["v1","v2"], ...]}   directed, upper layer -> next
inline LayeredGraphSpec parse_layered_graph_spec(const json& j) {
  if (!j.is_object()) throw ValidationError("graph file: top level must be an object");
  LayeredGraphSpec spec;
  const json& layers = detail::require_field(j, "layers", "graph file");
  if (!layers.is_array())
    throw ValidationError("graph file: \"layers\" must be an array of arrays of node names");
  for (const auto& layer : layers) {
    if (!layer.is_array())
      throw ValidationError("graph file: layer entry " + layer.dump() +
                            " is not an array of node names");
    spec.layers.emplace_back();
    for (const auto& node : layer) {
      if (!node.is_string())
        throw ValidationError("graph file: node name " + node.dump() + " is not a string");
      spec.layers.back().push_back(node.get<std::string>());
    }
  }
  spec.intra_edges =
      detail::parse_edge_list(detail::require_field(j, "intra_edges", "graph file"), "intra_edges");
  spec.inter_edges =
      detail::parse_edge_list(detail::require_field(j, "inter_edges", "graph file"), "inter_edges");
  return spec;
}

inline LayeredGraphSpec parse_layered_graph_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("graph file is not valid JSON: ") + e.what());
  }
  return parse_layered_graph_spec(j);
}

inline LayeredGraph load_layered_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return LayeredGraph::build(parse_layered_graph_spec(ss.str()));
}

inline json to_json(const LayeredGraphSpec& spec) {
  json j;
  j["layers"] = spec.layers;
  j["intra_edges"] = json::array();
  for (const auto& [a, b] : spec.intra_edges) j["intra_edges"].push_back({a, b});
  j["inter_edges"] = json::array();
  for (const auto& [a, b] : spec.inter_edges) j["inter_edges"].push_back({a, b});
  return j;
}

inline json to_json(const SpectralReport& rep) {
  json j;
  j["lambda2"] = rep.lambda2 ? json(round_sig(*rep.lambda2)) : json(nullptr);
  if (rep.argmin >= 0) {
    const auto& c = rep.contributions[rep.argmin];
    j["argmin"] = {{"layer", c.layer}, {"component", c.component}};
  } else {
    j["argmin"] = nullptr;
  }
  j["contributions"] = json::array();
  for (const auto& c : rep.contributions)
    j["contributions"].push_back({{"layer", c.layer},
                                  {"component", c.component},
                                  {"eigenvalue", round_sig(c.eigenvalue)},
                                  {"is_path", c.is_path}});
  return j;
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string lambda2_cell(const std::optional<double>& lambda2) {
  if (!lambda2) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *lambda2);
  return buf;
}

inline std::string consistency_cell(const RemovalReport& rep) {
  if (!rep.consistent) return "n/a";
  return *rep.consistent ? "consistent" : "inconsistent";
}

} // namespace detail

// One human-readable classification row:
//   removed, lambda2 (4 decimals), witnesses, predicted, consistency
inline std::string removal_row(const RemovalReport& rep) {
  const std::string removed = rep.removed.empty() ? "---" : detail::join(rep.removed, " ");
  const std::string wit = rep.witnesses.empty() ? "---" : detail::join(rep.witnesses, " ");
  return removed + ", " + detail::lambda2_cell(rep.lambda2) + ", " + wit + ", " +
         to_string(rep.predicted) + ", " + detail::consistency_cell(rep);
}

inline std::string to_csv(const RemovalTable& table) {
  std::string out = "removed,lambda2,witnesses,predicted,consistent\n";
  for (const auto& rep : table.rows) {
    out += detail::join(rep.removed, " ") + "," + detail::lambda2_cell(rep.lambda2) + "," +
           detail::join(rep.witnesses, " ") + "," + to_string(rep.predicted) + "," +
           detail::consistency_cell(rep) + "\n";
  }
  return out;
}

inline json to_json(const RemovalTable& table) {
  json rows = json::array();
  for (const auto& rep : table.rows) {
    json r;
    r["removed"] = rep.removed;
    r["lambda2"] = rep.lambda2 ? json(round_sig(*rep.lambda2)) : json(nullptr);
    r["witnesses"] = rep.witnesses;
    r["predicted"] = to_string(rep.predicted);
    r["condition1_holds"] = rep.condition1_holds;
    r["consistent"] = rep.consistent ? json(*rep.consistent) : json(nullptr);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Simulation config file:
//   {"dt":0.01,"duration":40,"perturbation_pos":0.5,"perturbation_vel":0.2,
//    "leader_velocity":[0,1],"seed":1}
// Missing fields keep their defaults.
inline SimConfig parse_sim_config(const json& j) {
  if (!j.is_object()) throw ValidationError("sim config: top level must be an object");
  SimConfig cfg;
  auto number = [&](const char* field, double& into) {
    auto it = j.find(field);
    if (it == j.end()) return;
    if (!it->is_number())
      throw ValidationError(std::string("sim config: \"") + field + "\" must be a number");
    into = it->get<double>();
  };
  number("dt", cfg.dt);
  number("duration", cfg.duration);
  number("perturbation_pos", cfg.perturbation_pos);
  number("perturbation_vel", cfg.perturbation_vel);
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned())
      throw ValidationError("sim config: \"seed\" must be a nonnegative integer");
    cfg.seed = it->get<std::uint64_t>();
  }
  if (auto it = j.find("leader_velocity"); it != j.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number())
      throw ValidationError("sim config: \"leader_velocity\" must be [vx, vy]");
    cfg.leader_velocity = {(*it)[0].get<double>(), (*it)[1].get<double>()};
  }
  return cfg;
}

inline SimConfig load_sim_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read sim config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("sim config is not valid JSON: ") + e.what());
  }
  return parse_sim_config(j);
}

inline json sim_summary_json(double decay_rate, const std::optional<double>& lambda2) {
  json j;
  j["decay_rate"] = std::isfinite(decay_rate) ? json(round_sig(decay_rate)) : json("inf");
  j["lambda2"] = lambda2 ? json(round_sig(*lambda2)) : json(nullptr);
  return j;
}

} // namespace laycon
