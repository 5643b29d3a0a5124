#pragma once

#include "topochain/bbgky.hpp"
#include "topochain/report.hpp"

namespace topo {

/// Run-wide configuration: potential, integrator, quadrature, truncation,
/// norm weight, seed. Loaded from a JSON config file; every field has the
/// documented default.
struct RunConfig {
  PotentialSpec potential;
  IntegratorConfig integrator;
  int quad_points = 16;
  long long mc_samples = 200000;
  double momentum_halfwidth = 6.0;
  double box_halfwidth = 6.0;
  int n_max = 4;
  double alpha = 4.0;
  std::uint64_t seed = 42;
  int max_particles = 4;
  double t_max = 2.0;

  static RunConfig from_json(const Json& j);
  Json to_json() const;

  EvolutionContext context() const { return {potential, integrator}; }
  QuadratureSpec quadrature() const;
};

SuiteReport run_combinatorics_suite(const RunConfig& cfg);
SuiteReport run_star_suite(const RunConfig& cfg);
SuiteReport run_dynamics_suite(const RunConfig& cfg);
SuiteReport run_hierarchy_suite(const RunConfig& cfg);
SuiteReport run_bbgky_suite(const RunConfig& cfg);
SuiteReport run_norm_bounds_suite(const RunConfig& cfg);
SuiteReport run_observables_suite(const RunConfig& cfg);

/// All suites in order, concatenated into one report.
SuiteReport run_all_suites(const RunConfig& cfg);

/// Deterministic symbolic term dump of the cluster and cumulant expansions
/// of one component (s1 + s2 <= 6).
Json dump_expansions(Arity a);

/// Chain simulation: frames at frame_dt, returned with drift diagnostics and
/// optionally written as CSV (t,label,q,p).
struct SimulationResult {
  double energy_drift = 0.0;
  double momentum_drift = 0.0;
  double min_gap_seen = 0.0;
  int frames = 0;
};
SimulationResult simulate_chain(const RunConfig& cfg, int particles, double t_final,
                                const std::string& csv_path);

}  // namespace topo
