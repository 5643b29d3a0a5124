#include "topochain/star.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

DoubleSequence DoubleSequence::unit() {
  DoubleSequence f;
  f.set_scalar0(1.0);
  return f;
}

void DoubleSequence::set_component(Arity a, Evaluator f) {
  comps_[a] = std::move(f);
  support_bound_ = std::max(support_bound_, a.total());
}

double DoubleSequence::eval(const Configuration& x) const {
  if (x.size() == 0) return scalar0_;
  auto it = comps_.find(x.arity());
  return it == comps_.end() ? 0.0 : it->second(x);
}

double DoubleSequence::eval_block(const Configuration& parent, const IndexSet& block) const {
  if (block.empty()) return scalar0_;
  return eval(parent.subset(block));
}

double DoubleSequence::eval_range(const Configuration& parent, int i0, int i1) const {
  if (i0 >= i1) return scalar0_;
  Configuration sub;
  const int neg = std::max(0, std::min(i1, parent.n1) - i0);
  sub.n1 = neg;
  sub.n2 = (i1 - i0) - neg;
  sub.pts.assign(parent.pts.begin() + i0, parent.pts.begin() + i1);
  return eval(sub);
}

ComponentFunction DoubleSequence::component_function(Arity a) const {
  auto it = comps_.find(a);
  if (it == comps_.end()) return {a, [](const Configuration&) { return 0.0; }};
  return {a, it->second};
}

DoubleSequence star_product(const DoubleSequence& f1, const DoubleSequence& f2) {
  auto p1 = std::make_shared<const DoubleSequence>(f1);
  auto p2 = std::make_shared<const DoubleSequence>(f2);
  DoubleSequence r;
  r.set_scalar0(f1.scalar0() * f2.scalar0());
  const int bound = f1.support_bound() + f2.support_bound();
  for (int total = 1; total <= bound; ++total) {
    for (int n1 = 0; n1 <= total; ++n1) {
      const Arity a{n1, total - n1};
      r.set_component(a, [p1, p2, total](const Configuration& x) {
        double acc = 0.0;
        for (int k = 0; k <= total; ++k)
          acc += p1->eval_range(x, 0, k) * p2->eval_range(x, k, total);
        return acc;
      });
    }
  }
  return r;
}

namespace {

/// Sum over interval partitions of products of f over blocks, optionally
/// Moebius-signed. The value at arity a depends on f only at arities of total
/// <= a.total(), so materializing components up to `bound` is exact.
DoubleSequence partition_sum(const DoubleSequence& f, bool signed_terms, int bound) {
  if (f.scalar0() != 0.0)
    throw std::invalid_argument("resolvent requires vanishing scalar component");
  auto pf = std::make_shared<const DoubleSequence>(f);
  DoubleSequence r;
  for (int total = 1; total <= bound; ++total) {
    for (int n1 = 0; n1 <= total; ++n1) {
      const Arity a{n1, total - n1};
      auto parts = std::make_shared<const std::vector<IntervalPartition>>(
          enumerate_interval_partitions(IndexSet::canonical(a.n1, a.n2)));
      r.set_component(a, [pf, parts, signed_terms](const Configuration& x) {
        double acc = 0.0;
        for (const auto& p : *parts) {
          double term = signed_terms ? mobius_sign(p) : 1.0;
          for (const auto& block : p.blocks) {
            term *= pf->eval_block(x, block);
            if (term == 0.0) break;
          }
          acc += term;
        }
        return acc;
      });
    }
  }
  return r;
}

}  // namespace

DoubleSequence star_resolvent(const DoubleSequence& f) {
  DoubleSequence r = partition_sum(f, false, f.support_bound());
  r.set_scalar0(1.0);
  return r;
}

DoubleSequence star_inverse_resolvent(const DoubleSequence& f) {
  return partition_sum(f, true, f.support_bound());
}

DoubleSequence cluster_expand(const DoubleSequence& g) {
  return partition_sum(g, false, g.support_bound());
}

DoubleSequence cumulant_transform(const DoubleSequence& D) {
  return partition_sum(D, true, D.support_bound());
}

double element_cumulant(const DoubleSequence& D, const ElementList& elems,
                        const Configuration& x) {
  double acc = 0.0;
  for (const auto& groups : enumerate_element_partitions(elems.size())) {
    double term = mobius_sign(static_cast<int>(groups.size()));
    for (const auto& g : groups) {
      term *= D.eval_block(x, elems.flatten_range(g.begin, g.end));
      if (term == 0.0) break;
    }
    acc += term;
  }
  return acc;
}

double clustered_cumulant(const DoubleSequence& D, const ClusteredIndexSet& c,
                          const Configuration& x) {
  if (c.cluster.empty()) throw std::invalid_argument("empty cluster");
  return element_cumulant(D, ElementList::of_clustered(c), x);
}

std::pair<double, double> cluster_to_particle_relation_check(
    const DoubleSequence& g, const ClusteredIndexSet& c, const Configuration& x) {
  const double lhs = clustered_cumulant(cluster_expand(g), c, x);

  const ElementList elems = ElementList::of_clustered(c);
  double rhs = 0.0;
  for (const auto& groups : enumerate_element_partitions(elems.size())) {
    double term = mobius_sign(static_cast<int>(groups.size()));
    for (const auto& grp : groups) {
      const IndexSet flat = elems.flatten_range(grp.begin, grp.end);
      double inner = 0.0;
      for (const auto& q : enumerate_interval_partitions(flat)) {
        double prod = 1.0;
        for (const auto& block : q.blocks) prod *= g.eval_block(x, block);
        inner += prod;
      }
      term *= inner;
      if (term == 0.0) break;
    }
    rhs += term;
  }
  return {lhs, rhs};
}

namespace {

std::vector<ExpansionTerm> expansion_terms(Arity a, bool signed_terms) {
  std::vector<ExpansionTerm> out;
  for (const auto& p : enumerate_interval_partitions(IndexSet::canonical(a.n1, a.n2))) {
    ExpansionTerm t;
    t.sign = signed_terms ? mobius_sign(p) : 1;
    for (const auto& block : p.blocks) t.blocks.push_back(block.labels);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<ExpansionTerm> cluster_expansion_terms(Arity a) {
  return expansion_terms(a, false);
}

std::vector<ExpansionTerm> cumulant_expansion_terms(Arity a) {
  return expansion_terms(a, true);
}

}  // namespace topo
