#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "laycon/errors.hpp"
#include "laycon/graph.hpp"
#include "laycon/rng.hpp"

namespace laycon {

using Vec2 = std::array<double, 2>;

// Desired formation: per-node position offsets relative to the leader
// (leader's own offset is the origin) plus the common cruise velocity.
struct FormationSpec {
  std::vector<Vec2> offsets; // indexed like the graph's nodes
  Vec2 leader_velocity{0.0, 1.0};
};

// Triangular-lattice layout: layers stacked spacing*sqrt(3)/2 apart, nodes
// of each layer centered and spaced one unit, leader pinned at the origin.
inline FormationSpec lattice_formation(const LayeredGraph& g, double spacing = 1.0,
                                       Vec2 leader_velocity = {0.0, 1.0}) {
  FormationSpec f;
  f.leader_velocity = leader_velocity;
  f.offsets.assign(g.node_count(), {0.0, 0.0});
  const double row = spacing * std::sqrt(3.0) / 2.0;
  for (int li = 0; li < g.layer_count(); ++li) {
    const auto& layer = g.layer(li);
    for (std::size_t k = 0; k < layer.size(); ++k)
      f.offsets[layer[k]] = {(static_cast<double>(k) - (layer.size() - 1) / 2.0) * spacing,
                             -static_cast<double>(li) * row};
  }
  const Vec2 origin = f.offsets[g.leader()];
  for (auto& o : f.offsets) {
    o[0] -= origin[0];
    o[1] -= origin[1];
  }
  return f;
}

struct SimConfig {
  double dt = 0.01;
  double duration = 40.0;
  double perturbation_pos = 0.5;
  double perturbation_vel = 0.2;
  Vec2 leader_velocity{0.0, 1.0};
  std::uint64_t seed = 1;
};

struct SimTrace {
  std::vector<std::string> node_labels;
  NodeIndex leader = 0;
  std::vector<double> times;
  std::vector<Vec2> positions;  // sample-major: index t * n + i
  std::vector<Vec2> velocities;
  std::vector<double> error; // formation error per sample
};

namespace detail {

struct SimState {
  std::vector<Vec2> p, v;
};

} // namespace detail

// Second-order consensus with formation offsets: every agent steers against
// the offset-corrected position and velocity disagreement with its
// in-neighbors. The leader has no in-neighbors, so its velocity stays put
// to the bit. Fixed-step classic fourth-order integration.
inline SimTrace simulate(const LayeredGraph& g, const FormationSpec& formation,
                         const SimConfig& cfg) {
  const int n = g.node_count();
  if (cfg.dt <= 0) throw ValidationError("dt must be positive");
  if (cfg.duration < cfg.dt) throw ValidationError("duration must cover at least one step");
  if (formation.offsets.size() != static_cast<std::size_t>(n))
    throw ValidationError("formation must assign an offset to every node");
  for (const auto& o : formation.offsets)
    if (!std::isfinite(o[0]) || !std::isfinite(o[1]))
      throw ValidationError("formation offsets must be finite");
  const NodeIndex leader = g.leader();
  if (formation.offsets[leader][0] != 0.0 || formation.offsets[leader][1] != 0.0)
    throw ValidationError("leader offset must be the origin");

  const auto& delta = formation.offsets;
  const int steps = static_cast<int>(std::llround(cfg.duration / cfg.dt));

  detail::SimState state;
  state.p.resize(n);
  state.v.resize(n);
  Rng rng(cfg.seed);
  for (NodeIndex i = 0; i < n; ++i) {
    state.p[i] = delta[i];
    if (i != leader && cfg.perturbation_pos > 0)
      for (int c = 0; c < 2; ++c)
        state.p[i][c] += rng.uniform(-cfg.perturbation_pos, cfg.perturbation_pos);
  }
  for (NodeIndex i = 0; i < n; ++i) {
    state.v[i] = cfg.leader_velocity;
    if (i != leader && cfg.perturbation_vel > 0)
      for (int c = 0; c < 2; ++c)
        state.v[i][c] += rng.uniform(-cfg.perturbation_vel, cfg.perturbation_vel);
  }

  auto derivative = [&](const detail::SimState& s, detail::SimState& d) {
    d.p = s.v;
    for (NodeIndex i = 0; i < n; ++i) {
      Vec2 acc{0.0, 0.0};
      for (const auto& [j, w] : g.base().in_edges(i)) {
        for (int c = 0; c < 2; ++c) {
          const double pos_err = (s.p[i][c] - s.p[j][c]) - (delta[i][c] - delta[j][c]);
          const double vel_err = s.v[i][c] - s.v[j][c];
          acc[c] -= w * (pos_err + vel_err);
        }
      }
      d.v[i] = acc;
    }
  };

  SimTrace trace;
  trace.node_labels = g.base().labels();
  trace.leader = leader;
  trace.times.reserve(steps + 1);
  trace.positions.reserve(static_cast<std::size_t>(steps + 1) * n);
  trace.velocities.reserve(static_cast<std::size_t>(steps + 1) * n);
  trace.error.reserve(steps + 1);

  auto record = [&](double t) {
    trace.times.push_back(t);
    double err2 = 0.0;
    for (NodeIndex i = 0; i < n; ++i) {
      trace.positions.push_back(state.p[i]);
      trace.velocities.push_back(state.v[i]);
      for (int c = 0; c < 2; ++c) {
        const double d = state.p[i][c] - state.p[leader][c] - delta[i][c];
        err2 += d * d;
      }
    }
    trace.error.push_back(std::sqrt(err2));
  };
  record(0.0);

  detail::SimState k1, k2, k3, k4, tmp;
  k1 = k2 = k3 = k4 = tmp = state;
  auto blend = [&](const detail::SimState& base, const detail::SimState& slope, double h,
                   detail::SimState& out) {
    for (NodeIndex i = 0; i < n; ++i)
      for (int c = 0; c < 2; ++c) {
        out.p[i][c] = base.p[i][c] + h * slope.p[i][c];
        out.v[i][c] = base.v[i][c] + h * slope.v[i][c];
      }
  };

  const double dt = cfg.dt;
  for (int s = 1; s <= steps; ++s) {
    derivative(state, k1);
    blend(state, k1, dt / 2, tmp);
    derivative(tmp, k2);
    blend(state, k2, dt / 2, tmp);
    derivative(tmp, k3);
    blend(state, k3, dt, tmp);
    derivative(tmp, k4);
    for (NodeIndex i = 0; i < n; ++i)
      for (int c = 0; c < 2; ++c) {
        state.p[i][c] +=
            dt / 6 * (k1.p[i][c] + 2 * k2.p[i][c] + 2 * k3.p[i][c] + k4.p[i][c]);
        state.v[i][c] +=
            dt / 6 * (k1.v[i][c] + 2 * k2.v[i][c] + 2 * k3.v[i][c] + k4.v[i][c]);
      }
    for (NodeIndex i = 0; i < n; ++i)
      for (int c = 0; c < 2; ++c)
        if (!std::isfinite(state.p[i][c]) || std::abs(state.p[i][c]) > 1e9 ||
            std::abs(state.v[i][c]) > 1e9) {
          char buf[96];
          std::snprintf(buf, sizeof(buf), "state blew up at t=%.3f on node %s", s * dt,
                        g.base().label(i).c_str());
          throw NumericalError(buf);
        }
    record(s * dt);
  }
  return trace;
}

// Decay rate of the formation error: minus the least-squares slope of
// log(error) over the trailing window. Returns +infinity when the window
// touches the equilibrium floor (1e-13, a hair above rounding noise for
// unit-scale formations): there is nothing left to fit.
constexpr double kEquilibriumFloor = 1e-13;

inline double convergence_rate(const SimTrace& trace, double tail_fraction = 0.5) {
  if (tail_fraction <= 0 || tail_fraction > 1)
    throw ValidationError("tail fraction must be in (0, 1]");
  const std::size_t total = trace.times.size();
  if (total < 2) throw ValidationError("trace too short to fit a rate");
  const std::size_t start =
      std::min(total - 2, static_cast<std::size_t>(std::floor((1.0 - tail_fraction) * total)));

  double st = 0, sy = 0, stt = 0, sty = 0;
  const std::size_t count = total - start;
  for (std::size_t k = start; k < total; ++k) {
    if (trace.error[k] <= kEquilibriumFloor) return std::numeric_limits<double>::infinity();
    const double t = trace.times[k];
    const double y = std::log(trace.error[k]);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double denom = count * stt - st * st;
  const double slope = (count * sty - st * sy) / denom;
  return -slope;
}

// Plot-ready trace: one row per sample per node.
inline std::string trace_csv(const SimTrace& trace) {
  std::string out = "t,node,px,py,vx,vy\n";
  const std::size_t n = trace.node_labels.size();
  char buf[192];
  for (std::size_t k = 0; k < trace.times.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = trace.positions[k * n + i];
      const auto& v = trace.velocities[k * n + i];
      std::snprintf(buf, sizeof(buf), "%.12g,%s,%.12g,%.12g,%.12g,%.12g\n", trace.times[k],
                    trace.node_labels[i].c_str(), p[0], p[1], v[0], v[1]);
      out += buf;
    }
  return out;
}

} // namespace laycon
