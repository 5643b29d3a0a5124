#pragma once

#include "topochain/hierarchy.hpp"
#include "topochain/numerics.hpp"

namespace topo {

/// Grand-ensemble initial data: a double sequence of distribution functions
/// whose scalar component is the vacuum weight of the ensemble.
struct GrandState {
  DoubleSequence D0;
  int n_max = 4;  // truncation of the sums over integrated-out particles
};

/// (I, D(0)): the scalar plus all component integrals. Throws when the
/// result is not positive.
double partition_function(const GrandState& state, const QuadratureSpec& spec);

/// Value of F(t2, arity, x): the interface shared by the hierarchy checks,
/// so either solution representation can back them.
using ReducedProvider = std::function<double(double, Arity, const Configuration&)>;

/// Reduced distribution functions as normalized marginals of the evolved
/// ensemble: the sum over (n1, n2) added particles of integrals of the
/// evolved (n1+s1+s2+n2)-particle distribution, divided by (I, D(0)).
double reduced_distribution_direct(double t, const GrandState& state, Arity s,
                                   const Configuration& x, const EvolutionContext& ctx,
                                   const QuadratureSpec& spec);

/// Reduced distribution functions from the dynamics of correlations: the sum
/// over added particles of integrals of the correlation functions of a
/// particle cluster and particles. Unlike the other routes this series does
/// not truncate with the support of g0; n_cut bounds the added particles and
/// the neglected tail scales with the activity.
double reduced_distribution_via_correlations(double t, const DoubleSequence& g0, int n_cut,
                                             Arity s, const Configuration& x,
                                             const EvolutionContext& ctx,
                                             const QuadratureSpec& spec);

/// Annihilation-type operators: integrate out one appended rightmost
/// (resp. prepended leftmost) particle of the next-larger component.
DoubleSequence annihilate_right(const DoubleSequence& f, const QuadratureSpec& spec);
DoubleSequence annihilate_left(const DoubleSequence& f, const QuadratureSpec& spec);

/// Non-perturbative solution series of the BBGKY hierarchy: cumulants of a
/// particle cluster and particles applied to the initial reduced functions,
/// integrated over the added particles.
double bbgky_solution_series(double t, const DoubleSequence& F0, Arity s,
                             const Configuration& x, const EvolutionContext& ctx,
                             const QuadratureSpec& spec);

/// Reduced-form solution: generating operators U with at most four
/// edge-dropped groups per term.
double bbgky_solution_reduced(double t, const DoubleSequence& F0, Arity s,
                              const Configuration& x, const EvolutionContext& ctx,
                              const QuadratureSpec& spec);

struct RhsCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of the BBGKY hierarchy at one configuration: the time
/// derivative of F_s against L*_s F_s plus the two boundary collision
/// integrals with one added particle each.
RhsCheck bbgky_rhs_check(double t, const ReducedProvider& F, Arity s,
                         const Configuration& x, const EvolutionContext& ctx,
                         const QuadratureSpec& spec, double fd_time_step = 0.02,
                         double fd_p_step = 1e-4);

/// Reduced correlation functions, route (a): cumulant expansion over the
/// reduced distribution functions.
double reduced_correlations_cumulant_route(double t, const ReducedProvider& F, Arity s,
                                           const Configuration& x);

/// Route (b): integrals of the plain correlation functions of n more
/// particles (series in the activity, like the via-correlations route).
double reduced_correlations_series_route(double t, const DoubleSequence& g0, int n_cut,
                                         Arity s, const Configuration& x,
                                         const EvolutionContext& ctx,
                                         const QuadratureSpec& spec);

struct CumulantNormRatio {
  int n1 = 0;
  int n2 = 0;
  double cumulant_norm = 0.0;
  double f_norm = 0.0;
  double ratio = 0.0;
  double bound = 0.0;  // 2^(n1+n2)
};

/// Measured L1 ratio |A_{1+n1+n2}(t) f| / |f| for one component f of the
/// full (s1+n1+s2+n2) arity, kept cluster s.
CumulantNormRatio cumulant_norm_ratio(double t, const ComponentFunction& f, Arity kept,
                                      const EvolutionContext& ctx, const QuadratureSpec& spec);

struct SequenceNormRatio {
  double evolved_norm = 0.0;
  double initial_norm = 0.0;
  double ratio = 0.0;
  double bound = 0.0;  // (1 - 2/alpha)^(-1)
};

/// |F(t)| / |F(0)| in the weighted space, F(t) from the solution series.
/// Throws for alpha <= 2.
SequenceNormRatio sequence_norm_ratio(double t, const DoubleSequence& F0, NormWeight alpha,
                                      const EvolutionContext& ctx, const QuadratureSpec& spec);

}  // namespace topo
