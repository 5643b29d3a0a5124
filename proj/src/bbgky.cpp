#include "topochain/bbgky.hpp"

#include <cmath>
#include <stdexcept>

namespace topo {

namespace {

/// (n1, n2) particles added around the kept arity. Canonical integration
/// labels -n1..-1, 1..n2 map to the outermost parent labels.
struct OuterExtension {
  Arity kept;
  int n1 = 0;
  int n2 = 0;

  Arity full() const { return {kept.n1 + n1, kept.n2 + n2}; }

  Label parent_label(Label canon) const {
    return canon < 0 ? canon - kept.n1 : canon + kept.n2;
  }

  Configuration assemble(const Configuration& x, const Configuration& outer) const {
    Configuration y;
    y.n1 = kept.n1 + n1;
    y.n2 = kept.n2 + n2;
    y.pts.resize(y.n1 + y.n2);
    for (int i = 0; i < n1; ++i) y.pts[i] = outer.pts[i];
    for (int i = 0; i < kept.total(); ++i) y.pts[n1 + i] = x.pts[i];
    for (int i = 0; i < n2; ++i) y.pts[n1 + kept.total() + i] = outer.pts[n1 + i];
    return y;
  }

  ClusteredIndexSet clustered() const {
    ClusteredIndexSet c;
    for (int k = kept.n1 + n1; k > kept.n1; --k) c.left.labels.push_back(-k);
    c.cluster = IndexSet::canonical(kept.n1, kept.n2);
    for (int k = kept.n2 + 1; k <= kept.n2 + n2; ++k) c.right.labels.push_back(k);
    return c;
  }

  QuadratureSpec wrap_spec(const QuadratureSpec& spec) const {
    QuadratureSpec out = spec;
    auto orig = spec.position_box;
    const OuterExtension self = *this;
    out.position_box = [orig, self](Label canon) {
      const Label parent = self.parent_label(canon);
      return orig ? orig(parent) : ParticleBox{};
    };
    return out;
  }
};

/// Sum over (n1, n2) with n1+n2 <= n_cut of integrals over the added
/// particles of term(ext, full configuration).
double outer_series(Arity kept, int n_cut, const Configuration& x, const QuadratureSpec& spec,
                    const std::function<bool(Arity)>& include,
                    const std::function<double(const OuterExtension&, const Configuration&)>& term) {
  double acc = 0.0;
  for (int n = 0; n <= n_cut; ++n) {
    for (int n1 = 0; n1 <= n; ++n1) {
      const OuterExtension ext{kept, n1, n - n1};
      if (include && !include(ext.full())) continue;
      if (n == 0) {
        acc += term(ext, x);
        continue;
      }
      ComponentFunction integrand{
          {ext.n1, ext.n2},
          [&](const Configuration& outer) { return term(ext, ext.assemble(x, outer)); }};
      acc += integrate_component(integrand, ext.wrap_spec(spec)).value;
    }
  }
  return acc;
}

}  // namespace

double partition_function(const GrandState& state, const QuadratureSpec& spec) {
  double z = state.D0.scalar0();
  for (const auto& [arity, fn] : state.D0.components()) {
    if (arity.total() > state.n_max) continue;
    z += integrate_component({arity, fn}, spec).value;
  }
  if (!(z > 0.0)) throw std::runtime_error("degenerate ensemble");
  return z;
}

double reduced_distribution_direct(double t, const GrandState& state, Arity s,
                                   const Configuration& x, const EvolutionContext& ctx,
                                   const QuadratureSpec& spec) {
  if (s.total() < 1) throw std::invalid_argument("reduced functions need s1+s2 >= 1");
  const double z = partition_function(state, spec);
  const double sum = outer_series(
      s, state.n_max - s.total(), x, spec,
      [&](Arity full) { return state.D0.has_component(full); },
      [&](const OuterExtension& ext, const Configuration& y) {
        return apply_group(t, state.D0.component_function(ext.full()).fn, y, ctx.pot,
                           ctx.icfg);
      });
  return sum / z;
}

namespace {

/// Correlation function of a particle cluster and particles at time t: sum
/// over clustered partitions, the blocks acting as cluster elements of the
/// generating cumulant, applied to products of clustered initial
/// correlations of the blocks.
double clustered_correlation_value(double t, const DoubleSequence& D0,
                                   const ClusteredIndexSet& c, const Configuration& y,
                                   const EvolutionContext& ctx) {
  const ElementList elems = ElementList::of_clustered(c);
  double acc = 0.0;
  for (const auto& groups : enumerate_element_partitions(elems.size())) {
    std::vector<IndexSet> flat_blocks;
    std::vector<ElementList> block_elements;
    flat_blocks.reserve(groups.size());
    block_elements.reserve(groups.size());
    for (const auto& g : groups) {
      flat_blocks.push_back(elems.flatten_range(g.begin, g.end));
      ElementList bl;
      bl.elements.assign(elems.elements.begin() + g.begin, elems.elements.begin() + g.end);
      block_elements.push_back(std::move(bl));
    }
    auto target = [&](const Configuration& z) {
      double v = 1.0;
      for (const auto& bl : block_elements) {
        v *= element_cumulant(D0, bl, z);
        if (v == 0.0) break;
      }
      return v;
    };
    acc += operator_cumulant_blocks(t, flat_blocks, target, y, ctx);
  }
  return acc;
}

}  // namespace

double reduced_distribution_via_correlations(double t, const DoubleSequence& g0, int n_cut,
                                             Arity s, const Configuration& x,
                                             const EvolutionContext& ctx,
                                             const QuadratureSpec& spec) {
  const DoubleSequence D0 = cluster_expand(g0);
  return outer_series(s, n_cut, x, spec, nullptr,
                      [&](const OuterExtension& ext, const Configuration& y) {
                        return clustered_correlation_value(t, D0, ext.clustered(), y, ctx);
                      });
}

namespace {

DoubleSequence annihilate(const DoubleSequence& f, const QuadratureSpec& spec, bool right) {
  auto pf = std::make_shared<const DoubleSequence>(f);
  DoubleSequence out;
  for (const auto& [arity, fn] : f.components()) {
    const Arity reduced = right ? Arity{arity.n1, arity.n2 - 1} : Arity{arity.n1 - 1, arity.n2};
    if (reduced.n1 < 0 || reduced.n2 < 0) continue;
    auto integral_at = [pf, spec, reduced, right](const Configuration& x) {
      const OuterExtension ext{reduced, right ? 0 : 1, right ? 1 : 0};
      ComponentFunction integrand{
          {ext.n1, ext.n2},
          [&](const Configuration& outer) { return pf->eval(ext.assemble(x, outer)); }};
      return integrate_component(integrand, ext.wrap_spec(spec)).value;
    };
    if (reduced.total() == 0) {
      out.set_scalar0(out.scalar0() + integral_at(Configuration{}));
    } else {
      out.set_component(reduced, integral_at);
    }
  }
  return out;
}

}  // namespace

DoubleSequence annihilate_right(const DoubleSequence& f, const QuadratureSpec& spec) {
  return annihilate(f, spec, true);
}

DoubleSequence annihilate_left(const DoubleSequence& f, const QuadratureSpec& spec) {
  return annihilate(f, spec, false);
}

double bbgky_solution_series(double t, const DoubleSequence& F0, Arity s,
                             const Configuration& x, const EvolutionContext& ctx,
                             const QuadratureSpec& spec) {
  return outer_series(s, F0.support_bound() - s.total(), x, spec,
                      [&](Arity full) { return F0.has_component(full); },
                      [&](const OuterExtension& ext, const Configuration& y) {
                        return clustered_operator_cumulant(
                            t, ext.clustered(),
                            [&](const Configuration& z) { return F0.eval(z); }, y, ctx);
                      });
}

double bbgky_solution_reduced(double t, const DoubleSequence& F0, Arity s,
                              const Configuration& x, const EvolutionContext& ctx,
                              const QuadratureSpec& spec) {
  return outer_series(
      s, F0.support_bound() - s.total(), x, spec,
      [&](Arity full) { return F0.has_component(full); },
      [&](const OuterExtension& ext, const Configuration& y) {
        SubchainEvolver ev(y, -t, ctx.pot, ctx.icfg);
        const Arity full = ext.full();
        double acc = 0.0;
        for (int k1 = 0; k1 <= std::min(1, ext.n1); ++k1) {
          for (int k2 = 0; k2 <= std::min(1, ext.n2); ++k2) {
            IndexSet run;
            for (int j = -(full.n1 - k1); j <= full.n2 - k2; ++j)
              if (j != 0) run.labels.push_back(j);
            if (!is_allowed(y.subset(run), ctx.pot.sigma, ctx.icfg.event_tol)) continue;
            const double sign = (k1 + k2) % 2 == 0 ? 1.0 : -1.0;
            acc += sign * F0.eval(ev.assemble({run}));
          }
        }
        return acc;
      });
}

RhsCheck bbgky_rhs_check(double t, const ReducedProvider& F, Arity s, const Configuration& x,
                         const EvolutionContext& ctx, const QuadratureSpec& spec,
                         double fd_time_step, double fd_p_step) {
  RhsCheck out;
  out.lhs = time_derivative([&](double t2) { return F(t2, s, x); }, t, fd_time_step).value;

  auto F_now = [&](const Configuration& y) { return F(t, y.arity(), y); };
  out.rhs = liouville_apply(F_now, x, ctx.pot, fd_p_step);

  auto dp_at = [&](Label j, const Configuration& y, Arity a) {
    auto central = [&](double h) {
      Configuration yp = y, ym = y;
      yp.at(j).p += h;
      ym.at(j).p -= h;
      return (F(t, a, yp) - F(t, a, ym)) / (2.0 * h);
    };
    return (4.0 * central(0.5 * fd_p_step) - central(fd_p_step)) / 3.0;
  };

  // Left boundary collision integral: one particle prepended at -(s1+1).
  {
    const OuterExtension ext{s, 1, 0};
    ComponentFunction integrand{{1, 0}, [&](const Configuration& outer) {
                                  const Configuration y = ext.assemble(x, outer);
                                  const double gap = y.pts[1].q - y.pts[0].q;
                                  if (gap <= ctx.pot.sigma || gap >= ctx.pot.range) return 0.0;
                                  return ctx.pot.dphi(gap) * dp_at(-s.n1, y, ext.full());
                                }};
    out.rhs += integrate_component(integrand, ext.wrap_spec(spec)).value;
  }
  // Right boundary collision integral: one particle appended at s2+1.
  {
    const OuterExtension ext{s, 0, 1};
    ComponentFunction integrand{{0, 1}, [&](const Configuration& outer) {
                                  const Configuration y = ext.assemble(x, outer);
                                  const double gap = y.pts[y.size() - 1].q - y.pts[y.size() - 2].q;
                                  if (gap <= ctx.pot.sigma || gap >= ctx.pot.range) return 0.0;
                                  return ctx.pot.lint_factor(gap) *
                                         dp_at(s.n2 > 0 ? s.n2 : -1, y, ext.full());
                                }};
    out.rhs += integrate_component(integrand, ext.wrap_spec(spec)).value;
  }
  return out;
}

double reduced_correlations_cumulant_route(double t, const ReducedProvider& F, Arity s,
                                           const Configuration& x) {
  double acc = 0.0;
  for (const auto& p : enumerate_interval_partitions(IndexSet::canonical(s.n1, s.n2))) {
    double term = mobius_sign(p);
    for (const auto& block : p.blocks) {
      const Configuration sub = x.subset(block);
      term *= F(t, sub.arity(), sub);
      if (term == 0.0) break;
    }
    acc += term;
  }
  return acc;
}

double reduced_correlations_series_route(double t, const DoubleSequence& g0, int n_cut,
                                         Arity s, const Configuration& x,
                                         const EvolutionContext& ctx,
                                         const QuadratureSpec& spec) {
  return outer_series(s, n_cut, x, spec, nullptr,
                      [&](const OuterExtension& ext, const Configuration& y) {
                        const Arity full = ext.full();
                        return solve_correlations(t, g0, IndexSet::canonical(full.n1, full.n2),
                                                  y, ctx);
                      });
}

CumulantNormRatio cumulant_norm_ratio(double t, const ComponentFunction& f, Arity kept,
                                      const EvolutionContext& ctx, const QuadratureSpec& spec) {
  CumulantNormRatio r;
  r.n1 = f.arity.n1 - kept.n1;
  r.n2 = f.arity.n2 - kept.n2;
  if (r.n1 < 0 || r.n2 < 0) throw std::invalid_argument("kept arity exceeds component arity");
  r.bound = std::pow(2.0, r.n1 + r.n2);

  const OuterExtension ext{kept, r.n1, r.n2};
  ComponentFunction abs_f{f.arity,
                          [&](const Configuration& y) { return std::abs(f.fn(y)); }};
  ComponentFunction abs_af{f.arity, [&](const Configuration& y) {
                             if (!is_allowed(y, ctx.pot.sigma, ctx.icfg.event_tol)) return 0.0;
                             return std::abs(
                                 clustered_operator_cumulant(t, ext.clustered(), f.fn, y, ctx));
                           }};
  r.f_norm = integrate_component(abs_f, spec).value;
  r.cumulant_norm = integrate_component(abs_af, spec).value;
  r.ratio = r.cumulant_norm / r.f_norm;
  return r;
}

SequenceNormRatio sequence_norm_ratio(double t, const DoubleSequence& F0, NormWeight alpha,
                                      const EvolutionContext& ctx, const QuadratureSpec& spec) {
  if (!(alpha.alpha > 2.0))
    throw std::invalid_argument("the norm bound requires alpha > 2");
  SequenceNormRatio r;
  r.bound = 1.0 / (1.0 - 2.0 / alpha.alpha);

  auto pF0 = std::make_shared<const DoubleSequence>(F0);
  DoubleSequence Ft;
  for (const auto& [arity, fn] : F0.components()) {
    Ft.set_component(arity, [pF0, t, arity, ctx, spec](const Configuration& y) {
      if (!is_allowed(y, ctx.pot.sigma, ctx.icfg.event_tol)) return 0.0;
      return bbgky_solution_series(t, *pF0, arity, y, ctx, spec);
    });
  }
  r.initial_norm = l1alpha_norm(F0, alpha, spec);
  r.evolved_norm = l1alpha_norm(Ft, alpha, spec);
  r.ratio = r.evolved_norm / r.initial_norm;
  return r;
}

}  // namespace topo
