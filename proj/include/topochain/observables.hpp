#pragma once

#include "topochain/bbgky.hpp"

namespace topo {

/// Creation-type operators: component (n1, n2) evaluates the next-smaller
/// component with the rightmost (resp. leftmost) particle dropped.
DoubleSequence create_right(const DoubleSequence& b);
DoubleSequence create_left(const DoubleSequence& b);

/// Adjoint group S(t) = S*(-t): b along the forward flow, zero on forbidden
/// configurations.
double adjoint_group(double t, const Evaluator& b, const Configuration& x,
                     const EvolutionContext& ctx);

/// Reduced observables from initial observables: the alternating
/// edge-dropped differences of forward-evolved components, each retained
/// sub-chain evolving as its own chain.
double reduced_observables(double t, const DoubleSequence& A0, Arity s,
                           const Configuration& x, const EvolutionContext& ctx);

/// Solution series of the dual hierarchy: cumulants of the forward groups
/// with the inner labels -n1..n2 clustered, applied to B0_{n1+n2} evaluated
/// at the evolved inner coordinates. The n1+n2 = 0 term carries an empty
/// cluster element whose groups act on no variables; with a nonzero B0
/// scalar its alternating sum cancels, matching the reduced-form expansion.
double dual_solution_series(double t, const DoubleSequence& B0, Arity s,
                            const Configuration& x, const EvolutionContext& ctx);

/// Equivalent reduced-form expansion with min(1, .) edge-drop limits.
double dual_solution_min_form(double t, const DoubleSequence& B0, Arity s,
                              const Configuration& x, const EvolutionContext& ctx);

/// Mean-value pairing (B, F): the scalar product plus component integrals of
/// B_s * F_s over the phase boxes.
double mean_value(const DoubleSequence& B, const DoubleSequence& F,
                  const QuadratureSpec& spec);

/// Both sides of the dual hierarchy at one configuration: d/dt B_s against
/// L B_s plus the two boundary creation terms (L = -L*).
RhsCheck dual_rhs_check(double t, const DoubleSequence& B0, Arity s, const Configuration& x,
                        const EvolutionContext& ctx, double fd_time_step = 0.02,
                        double fd_p_step = 1e-4);

}  // namespace topo
