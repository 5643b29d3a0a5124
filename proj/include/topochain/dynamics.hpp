#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "topochain/phase.hpp"
#include "topochain/potential.hpp"

namespace topo {

struct IntegratorConfig {
  double dt = 1e-3;          // base step
  double event_tol = 1e-10;  // contact-time bisection tolerance
  int max_events = 100000;
  /// 2: velocity Verlet. 4: triple-jump composition of Verlet sub-steps
  /// (fourth order), needed for the 1e-8 drift targets at the default dt.
  int scheme = 4;
};

/// Evolve the chain by (signed) time t under nearest-neighbor dynamics:
/// symplectic steps through the tail potential, elastic momentum exchange
/// at hard-core contact. Throws on forbidden input or event-cap overflow.
Configuration hamiltonian_flow(const Configuration& x, double t,
                               const PotentialSpec& pot, const IntegratorConfig& cfg);

/// (energy, momentum) with energy = sum p^2/2 + sum_adjacent phi(gap).
std::pair<double, double> conserved_quantities(const Configuration& x,
                                               const PotentialSpec& pot);

/// Group of the Liouville equation: (S*(t) f)(x) = f(X(-t, x)) on allowed
/// configurations, 0 on forbidden ones. f is any evaluator of x's arity.
double apply_group(double t, const std::function<double(const Configuration&)>& f,
                   const Configuration& x, const PotentialSpec& pot,
                   const IntegratorConfig& cfg);

/// Generator L* of the group, by central differences (one Richardson level):
/// free streaming -p_j d/dq_j plus the nearest-neighbor interaction terms
/// lint_factor(gap) (d/dp_j - d/dp_{j+1}). Throws when the stencil reaches
/// the forbidden set.
double liouville_apply(const std::function<double(const Configuration&)>& f,
                       const Configuration& x, const PotentialSpec& pot,
                       double fd_step = 1e-4);

struct TrajectoryFrame {
  double t;
  Configuration x;
};

/// Sampled trajectory at multiples of frame_dt (last frame at t_final).
std::vector<TrajectoryFrame> record_trajectory(const Configuration& x, double t_final,
                                               double frame_dt, const PotentialSpec& pot,
                                               const IntegratorConfig& cfg);

/// Caches flows of contiguous sub-chains of one parent configuration, all by
/// the same signed time. Blocks of a partition evolve independently as their
/// own chains; repeated label runs across partitions reuse the cached flow.
class SubchainEvolver {
 public:
  SubchainEvolver(const Configuration& parent, double flow_time,
                  const PotentialSpec& pot, const IntegratorConfig& cfg)
      : parent_(parent), flow_time_(flow_time), pot_(pot), cfg_(cfg) {}

  /// Evolved sub-configuration for a contiguous run of parent labels.
  const Configuration& evolved(const IndexSet& run);

  /// Parent-shaped configuration whose points on each given run are the
  /// independently evolved ones. Runs must cover all parent labels.
  Configuration assemble(const std::vector<IndexSet>& runs);

  const Configuration& parent() const { return parent_; }

 private:
  Configuration parent_;
  double flow_time_;
  PotentialSpec pot_;
  IntegratorConfig cfg_;
  std::map<std::pair<Label, Label>, Configuration> cache_;
};

}  // namespace topo
