#pragma once

#include "topochain/dynamics.hpp"
#include "topochain/star.hpp"

namespace topo {

struct EvolutionContext {
  PotentialSpec pot;
  IntegratorConfig icfg;
};

/// Cumulant of the operator groups over an ordered element list, flowing by
/// the signed time flow_time (-t realizes S*(t), +t the adjoint group S(t)).
/// Each partition of the list evolves its groups as isolated sub-chains (the
/// flattened element unions); the target is evaluated on the assembled
/// configuration. A group whose input sub-configuration is forbidden
/// contributes zero (the zero branch of the group).
double element_operator_cumulant(double flow_time, const ElementList& elems,
                                 const Evaluator& target, const Configuration& x,
                                 const EvolutionContext& ctx);

/// Cumulant of order |s| over the singleton elements of s.
double operator_cumulant(double t, const IndexSet& s, const Evaluator& target,
                         const Configuration& x, const EvolutionContext& ctx);

/// Cumulant over a list of clusters (partition blocks as single elements).
double operator_cumulant_blocks(double t, const std::vector<IndexSet>& clusters,
                                const Evaluator& target, const Configuration& x,
                                const EvolutionContext& ctx);

/// Cumulant of a particle cluster and particles (cluster stays whole).
double clustered_operator_cumulant(double t, const ClusteredIndexSet& c,
                                   const Evaluator& target, const Configuration& x,
                                   const EvolutionContext& ctx);

/// Solution of the Liouville hierarchy: sum over interval partitions P of s
/// of the |P|-th order cumulant over P's blocks applied to the product of
/// initial correlations over the blocks.
double solve_correlations(double t, const DoubleSequence& g0, const IndexSet& s,
                          const Configuration& x, const EvolutionContext& ctx);

/// Equivalent representation: per-block cumulants acting on the clustered
/// initial correlation function of the partition's blocks.
double solve_correlations_clustered(double t, const DoubleSequence& g0, const IndexSet& s,
                                    const Configuration& x, const EvolutionContext& ctx);

/// Right-hand side of the nonlinear hierarchy for correlation functions at
/// one configuration: L*_s g_s plus the two-block-split interaction terms
/// applied to products of lower correlations. g_t holds the time-t
/// evaluators; momentum derivatives by central differences.
double liouville_hierarchy_rhs(const DoubleSequence& g_t, const IndexSet& s,
                               const Configuration& x, const EvolutionContext& ctx,
                               double fd_step = 1e-4);

}  // namespace topo
