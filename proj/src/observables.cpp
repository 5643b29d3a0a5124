#include "topochain/observables.hpp"

#include <cmath>

namespace topo {

namespace {

DoubleSequence create(const DoubleSequence& b, bool right) {
  auto pb = std::make_shared<const DoubleSequence>(b);
  DoubleSequence out;
  const int bound = b.support_bound() + 1;
  for (int total = 1; total <= bound; ++total) {
    for (int n1 = 0; n1 <= total; ++n1) {
      const Arity a{n1, total - n1};
      if (right && a.n2 == 0) continue;
      if (!right && a.n1 == 0) continue;
      const Arity source = right ? Arity{a.n1, a.n2 - 1} : Arity{a.n1 - 1, a.n2};
      if (source.total() > 0 && !pb->has_component(source)) continue;
      if (source.total() == 0 && pb->scalar0() == 0.0) continue;
      out.set_component(a, [pb, right](const Configuration& x) {
        return right ? pb->eval_range(x, 0, x.size() - 1) : pb->eval_range(x, 1, x.size());
      });
    }
  }
  return out;
}

}  // namespace

DoubleSequence create_right(const DoubleSequence& b) { return create(b, true); }
DoubleSequence create_left(const DoubleSequence& b) { return create(b, false); }

double adjoint_group(double t, const Evaluator& b, const Configuration& x,
                     const EvolutionContext& ctx) {
  if (!is_allowed(x, ctx.pot.sigma, ctx.icfg.event_tol)) return 0.0;
  if (t == 0.0) return b(x);
  return b(hamiltonian_flow(x, t, ctx.pot, ctx.icfg));
}

double reduced_observables(double t, const DoubleSequence& A0, Arity s,
                           const Configuration& x, const EvolutionContext& ctx) {
  double acc = 0.0;
  for (int n1 = 0; n1 <= std::min(1, s.n1); ++n1) {
    for (int n2 = 0; n2 <= std::min(1, s.n2); ++n2) {
      IndexSet retained;
      for (int j = -(s.n1 - n1); j <= s.n2 - n2; ++j)
        if (j != 0) retained.labels.push_back(j);
      const double sign = (n1 + n2) % 2 == 0 ? 1.0 : -1.0;
      if (retained.empty()) {
        acc += sign * A0.scalar0();
        continue;
      }
      const Configuration sub = x.subset(retained);
      acc += sign * adjoint_group(
                        t, [&](const Configuration& y) { return A0.eval(y); }, sub, ctx);
    }
  }
  return acc;
}

double dual_solution_series(double t, const DoubleSequence& B0, Arity s,
                            const Configuration& x, const EvolutionContext& ctx) {
  double acc = 0.0;
  for (int n1 = 0; n1 <= s.n1; ++n1) {
    for (int n2 = 0; n2 <= s.n2; ++n2) {
      if (n1 + n2 > 0 && !B0.has_component({n1, n2})) continue;
      if (n1 + n2 == 0 && B0.scalar0() == 0.0) continue;
      ElementList elems;
      for (int j = -s.n1; j < -n1; ++j) elems.elements.push_back(IndexSet{{j}});
      elems.elements.push_back(IndexSet::canonical(n1, n2));  // inner cluster
      for (int j = n2 + 1; j <= s.n2; ++j) elems.elements.push_back(IndexSet{{j}});

      const IndexSet inner = IndexSet::canonical(n1, n2);
      auto target = [&](const Configuration& y) { return B0.eval_block(y, inner); };
      acc += element_operator_cumulant(+t, elems, target, x, ctx);
    }
  }
  return acc;
}

double dual_solution_min_form(double t, const DoubleSequence& B0, Arity s,
                              const Configuration& x, const EvolutionContext& ctx) {
  SubchainEvolver ev(x, +t, ctx.pot, ctx.icfg);
  double acc = 0.0;
  for (int n1 = 0; n1 <= s.n1; ++n1) {
    for (int n2 = 0; n2 <= s.n2; ++n2) {
      if (n1 + n2 > 0 && !B0.has_component({n1, n2})) continue;
      if (n1 + n2 == 0 && B0.scalar0() == 0.0) continue;
      const IndexSet inner = IndexSet::canonical(n1, n2);
      for (int k1 = 0; k1 <= std::min(1, s.n1 - n1); ++k1) {
        for (int k2 = 0; k2 <= std::min(1, s.n2 - n2); ++k2) {
          IndexSet run;
          for (int j = -(s.n1 - k1); j <= s.n2 - k2; ++j)
            if (j != 0) run.labels.push_back(j);
          const double sign = (k1 + k2) % 2 == 0 ? 1.0 : -1.0;
          if (run.empty()) {
            acc += sign * B0.scalar0();
            continue;
          }
          if (!is_allowed(x.subset(run), ctx.pot.sigma, ctx.icfg.event_tol)) continue;
          acc += sign * B0.eval_block(ev.assemble({run}), inner);
        }
      }
    }
  }
  return acc;
}

double mean_value(const DoubleSequence& B, const DoubleSequence& F,
                  const QuadratureSpec& spec) {
  double acc = B.scalar0() * F.scalar0();
  for (const auto& [arity, bfn] : B.components()) {
    if (!F.has_component(arity)) continue;
    const ComponentFunction ffn = F.component_function(arity);
    ComponentFunction product{arity, [bfn, ffn](const Configuration& x) {
                                const double fv = ffn(x);
                                return fv == 0.0 ? 0.0 : bfn(x) * fv;
                              }};
    acc += integrate_component(product, spec).value;
  }
  return acc;
}

RhsCheck dual_rhs_check(double t, const DoubleSequence& B0, Arity s, const Configuration& x,
                        const EvolutionContext& ctx, double fd_time_step, double fd_p_step) {
  RhsCheck out;
  out.lhs =
      time_derivative([&](double t2) { return dual_solution_series(t2, B0, s, x, ctx); }, t,
                      fd_time_step)
          .value;

  // L = -L* on the full chain.
  auto B_now = [&](const Configuration& y) {
    return dual_solution_series(t, B0, y.arity(), y, ctx);
  };
  out.rhs = -liouville_apply(B_now, x, ctx.pot, fd_p_step);

  // Boundary creation terms L_int(j, j+1) applied to the edge-dropped
  // reduced observables, as functions of the full configuration.
  auto boundary = [&](bool left_edge) {
    const Arity reduced = left_edge ? Arity{s.n1 - 1, s.n2} : Arity{s.n1, s.n2 - 1};
    // the retained labels in the full frame: dropped leftmost keeps
    // -(s1-1)..s2, dropped rightmost keeps -s1..s2-1
    IndexSet frame;
    if (left_edge) {
      for (int j = -(s.n1 - 1); j <= s.n2; ++j)
        if (j != 0) frame.labels.push_back(j);
    } else {
      for (int j = -s.n1; j <= s.n2 - 1; ++j)
        if (j != 0) frame.labels.push_back(j);
    }
    auto h = [&](const Configuration& y) {
      return dual_solution_series(t, B0, reduced, y.subset(frame), ctx);
    };
    const Label jl = left_edge ? -s.n1 : prev_label(s.n2);
    const Label jr = next_label(jl);
    const double gap = x.at(jr).q - x.at(jl).q;
    if (gap >= ctx.pot.range) return 0.0;
    auto dp = [&](Label j) {
      auto central = [&](double step) {
        Configuration yp = x, ym = x;
        yp.at(j).p += step;
        ym.at(j).p -= step;
        return (h(yp) - h(ym)) / (2.0 * step);
      };
      return (4.0 * central(0.5 * fd_p_step) - central(fd_p_step)) / 3.0;
    };
    // L_int = -L*_int
    return -ctx.pot.lint_factor(gap) * (dp(jl) - dp(jr));
  };

  if (s.n1 >= 1 && s.total() >= 2) out.rhs += boundary(true);
  if (s.n2 >= 1 && s.total() >= 2) out.rhs += boundary(false);
  return out;
}

}  // namespace topo
