#include "topochain/suites.hpp"

namespace topo {

RunConfig RunConfig::from_json(const Json& j) {
  RunConfig c;
  if (j.contains("potential")) {
    const auto& p = j["potential"];
    c.potential.sigma = p.value("sigma", c.potential.sigma);
    c.potential.range = p.value("range", c.potential.range);
    c.potential.epsilon = p.value("epsilon", c.potential.epsilon);
  }
  if (j.contains("integrator")) {
    const auto& p = j["integrator"];
    c.integrator.dt = p.value("dt", c.integrator.dt);
    c.integrator.event_tol = p.value("event_tol", c.integrator.event_tol);
    c.integrator.max_events = p.value("max_events", c.integrator.max_events);
    c.integrator.scheme = p.value("scheme", c.integrator.scheme);
  }
  if (j.contains("quadrature")) {
    const auto& p = j["quadrature"];
    c.quad_points = p.value("points_per_dim", c.quad_points);
    c.mc_samples = p.value("mc_samples", c.mc_samples);
    c.momentum_halfwidth = p.value("momentum_halfwidth", c.momentum_halfwidth);
    c.box_halfwidth = p.value("box_halfwidth", c.box_halfwidth);
  }
  c.n_max = j.value("n_max", c.n_max);
  c.alpha = j.value("alpha", c.alpha);
  c.seed = j.value("seed", c.seed);
  c.max_particles = j.value("max_particles", c.max_particles);
  c.t_max = j.value("t_max", c.t_max);
  return c;
}

Json RunConfig::to_json() const {
  Json j;
  j["potential"] = {{"sigma", potential.sigma},
                    {"range", potential.range},
                    {"epsilon", potential.epsilon}};
  j["integrator"] = {{"dt", integrator.dt},
                     {"event_tol", integrator.event_tol},
                     {"max_events", integrator.max_events},
                     {"scheme", integrator.scheme}};
  j["quadrature"] = {{"points_per_dim", quad_points},
                     {"mc_samples", mc_samples},
                     {"momentum_halfwidth", momentum_halfwidth},
                     {"box_halfwidth", box_halfwidth}};
  j["n_max"] = n_max;
  j["alpha"] = alpha;
  j["seed"] = seed;
  j["max_particles"] = max_particles;
  j["t_max"] = t_max;
  return j;
}

QuadratureSpec RunConfig::quadrature() const {
  QuadratureSpec q;
  q.points_per_dim = quad_points;
  q.sample_count = mc_samples;
  q.momentum_halfwidth = momentum_halfwidth;
  const double half = box_halfwidth;
  q.position_box = [half](Label) { return ParticleBox{-half, half}; };
  q.seed = seed;
  return q;
}

}  // namespace topo
