#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "topochain/labels.hpp"
#include "topochain/phase.hpp"

namespace topo {

using Evaluator = std::function<double(const Configuration&)>;

/// One component of a double sequence: an evaluator on configurations of a
/// fixed arity. Components of state/observable sequences vanish on forbidden
/// configurations; constructors of concrete families enforce that.
struct ComponentFunction {
  Arity arity;
  Evaluator fn;
  double operator()(const Configuration& x) const { return fn(x); }
};

/// Finitely supported double sequence f = {f_0, f_{n1+n2}}: a scalar plus a
/// map from arity to component evaluator. Immutable once built; evaluation is
/// pure and reentrant.
class DoubleSequence {
 public:
  DoubleSequence() = default;

  /// I = (1, 0, 0, ...)
  static DoubleSequence unit();

  double scalar0() const { return scalar0_; }
  void set_scalar0(double v) { scalar0_ = v; }

  void set_component(Arity a, Evaluator f);
  bool has_component(Arity a) const { return comps_.count(a) != 0; }
  const std::map<Arity, Evaluator>& components() const { return comps_; }

  /// Largest total particle number carrying a component (0 for scalars).
  int support_bound() const { return support_bound_; }

  /// Evaluate the component matching x's arity (0 when absent; x empty uses
  /// the scalar).
  double eval(const Configuration& x) const;

  /// Block evaluation: the component keyed by (#negative, #positive) labels
  /// of the block, at the block's phase points in ascending label order.
  double eval_block(const Configuration& parent, const IndexSet& block) const;

  /// Prefix/suffix evaluation by point index range [i0, i1) of a canonical
  /// parent; empty ranges give the scalar.
  double eval_range(const Configuration& parent, int i0, int i1) const;

  ComponentFunction component_function(Arity a) const;

 private:
  double scalar0_ = 0.0;
  std::map<Arity, Evaluator> comps_;
  int support_bound_ = 0;
};

/// Tensor star product: component at X sums f1(Y) f2(X \ Y) over all prefix
/// splits of X (Y a left interval, possibly empty).
DoubleSequence star_product(const DoubleSequence& f1, const DoubleSequence& f2);

/// (I - f)^{-I_*} = I + sum_{n>=1} f^{*n}. Component form: the sum over all
/// interval partitions of products of f over blocks. Requires f.scalar0 == 0.
DoubleSequence star_resolvent(const DoubleSequence& f);

/// I - (I + f)^{-I_*} = sum_{n>=1} (-1)^(n-1) f^{*n}; interval partitions
/// weighted by the Moebius sign. Requires f.scalar0 == 0.
DoubleSequence star_inverse_resolvent(const DoubleSequence& f);

/// Cluster expansion D of correlation functions g (scalar fixed to 0).
DoubleSequence cluster_expand(const DoubleSequence& g);

/// Cumulant expansion g of distribution functions D (scalar fixed to 0).
DoubleSequence cumulant_transform(const DoubleSequence& D);

/// Signed sum over partitions of an element list, each factor a component of
/// D on the flattened group. The correlation function of clusters.
double element_cumulant(const DoubleSequence& D, const ElementList& elems,
                        const Configuration& x);

/// Cumulant of a particle cluster and particles, from distribution functions.
double clustered_cumulant(const DoubleSequence& D, const ClusteredIndexSet& c,
                          const Configuration& x);

/// Both sides of the relation between clustered and plain correlation
/// functions: lhs via the distribution-function route, rhs as the explicit
/// double partition sum over products of g.
std::pair<double, double> cluster_to_particle_relation_check(
    const DoubleSequence& g, const ClusteredIndexSet& c, const Configuration& x);

/// Symbolic expansion term: sign and the label blocks of one partition.
struct ExpansionTerm {
  int sign;
  std::vector<std::vector<Label>> blocks;
};

/// Terms of the cluster expansion of the (s1, s2) component (all signs +1).
std::vector<ExpansionTerm> cluster_expansion_terms(Arity a);

/// Terms of the cumulant expansion (signs (-1)^(|P|-1)).
std::vector<ExpansionTerm> cumulant_expansion_terms(Arity a);

}  // namespace topo
