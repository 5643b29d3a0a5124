#include "topochain/hierarchy.hpp"

namespace topo {

namespace {

bool group_inputs_allowed(SubchainEvolver& ev, const std::vector<IndexSet>& runs,
                          double sigma, double slack) {
  for (const auto& run : runs)
    if (!is_allowed(ev.parent().subset(run), sigma, slack)) return false;
  return true;
}

}  // namespace

double element_operator_cumulant(double flow_time, const ElementList& elems,
                                 const Evaluator& target, const Configuration& x,
                                 const EvolutionContext& ctx) {
  SubchainEvolver ev(x, flow_time, ctx.pot, ctx.icfg);
  double acc = 0.0;
  for (const auto& groups : enumerate_element_partitions(elems.size())) {
    std::vector<IndexSet> runs;
    runs.reserve(groups.size());
    for (const auto& g : groups) runs.push_back(elems.flatten_range(g.begin, g.end));
    if (!group_inputs_allowed(ev, runs, ctx.pot.sigma, ctx.icfg.event_tol)) continue;
    acc += mobius_sign(static_cast<int>(groups.size())) * target(ev.assemble(runs));
  }
  return acc;
}

double operator_cumulant(double t, const IndexSet& s, const Evaluator& target,
                         const Configuration& x, const EvolutionContext& ctx) {
  return element_operator_cumulant(-t, ElementList::singletons(s), target, x, ctx);
}

double operator_cumulant_blocks(double t, const std::vector<IndexSet>& clusters,
                                const Evaluator& target, const Configuration& x,
                                const EvolutionContext& ctx) {
  return element_operator_cumulant(-t, ElementList::of_blocks(clusters), target, x, ctx);
}

double clustered_operator_cumulant(double t, const ClusteredIndexSet& c,
                                   const Evaluator& target, const Configuration& x,
                                   const EvolutionContext& ctx) {
  return element_operator_cumulant(-t, ElementList::of_clustered(c), target, x, ctx);
}

double solve_correlations(double t, const DoubleSequence& g0, const IndexSet& s,
                          const Configuration& x, const EvolutionContext& ctx) {
  double acc = 0.0;
  for (const auto& p : enumerate_interval_partitions(s)) {
    auto target = [&g0, &p](const Configuration& y) {
      double v = 1.0;
      for (const auto& block : p.blocks) {
        v *= g0.eval_block(y, block);
        if (v == 0.0) break;
      }
      return v;
    };
    acc += operator_cumulant_blocks(t, p.blocks, target, x, ctx);
  }
  return acc;
}

double solve_correlations_clustered(double t, const DoubleSequence& g0, const IndexSet& s,
                                    const Configuration& x, const EvolutionContext& ctx) {
  const DoubleSequence D0 = cluster_expand(g0);
  SubchainEvolver ev(x, -t, ctx.pot, ctx.icfg);
  double acc = 0.0;

  for (const auto& p : enumerate_interval_partitions(s)) {
    // Product of per-block cumulants, expanded over refinements: each block
    // contributes a signed sum over its own interval partitions, the groups
    // of all blocks evolving independently.
    std::vector<std::vector<IntervalPartition>> refinements;
    refinements.reserve(p.blocks.size());
    for (const auto& block : p.blocks)
      refinements.push_back(enumerate_interval_partitions(block));

    const ElementList block_elems = ElementList::of_blocks(p.blocks);
    std::vector<size_t> choice(p.blocks.size(), 0);
    while (true) {
      int sign = 1;
      std::vector<IndexSet> runs;
      for (size_t b = 0; b < choice.size(); ++b) {
        const IntervalPartition& q = refinements[b][choice[b]];
        sign *= mobius_sign(q);
        for (const auto& blk : q.blocks) runs.push_back(blk);
      }
      if (group_inputs_allowed(ev, runs, ctx.pot.sigma, ctx.icfg.event_tol))
        acc += sign * element_cumulant(D0, block_elems, ev.assemble(runs));

      size_t b = 0;
      while (b < choice.size() && ++choice[b] == refinements[b].size()) choice[b++] = 0;
      if (b == choice.size()) break;
    }
  }
  return acc;
}

double liouville_hierarchy_rhs(const DoubleSequence& g_t, const IndexSet& s,
                               const Configuration& x, const EvolutionContext& ctx,
                               double fd_step) {
  const ComponentFunction gs = g_t.component_function({s.neg_count(), s.pos_count()});
  double acc = liouville_apply(gs.fn, x, ctx.pot, fd_step);

  auto dp = [&](const Evaluator& h, Label j) {
    auto central = [&](double step) {
      Configuration yp = x, ym = x;
      yp.at(j).p += step;
      ym.at(j).p -= step;
      return (h(yp) - h(ym)) / (2.0 * step);
    };
    return (4.0 * central(0.5 * fd_step) - central(fd_step)) / 3.0;
  };

  for (const auto& split : enumerate_two_block_splits(s)) {
    const Label j = split.j, jn = next_label(j);
    const double gap = x.at(jn).q - x.at(j).q;
    if (gap >= ctx.pot.range) continue;
    auto product = [&](const Configuration& y) {
      return g_t.eval_block(y, split.left) * g_t.eval_block(y, split.right);
    };
    acc += ctx.pot.lint_factor(gap) * (dp(product, j) - dp(product, jn));
  }
  return acc;
}

}  // namespace topo
