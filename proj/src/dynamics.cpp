#include "topochain/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace topo {

namespace {

struct ChainState {
  std::vector<double> q;
  std::vector<double> p;

  explicit ChainState(const Configuration& x) {
    q.reserve(x.size());
    p.reserve(x.size());
    for (const auto& pt : x.pts) {
      q.push_back(pt.q);
      p.push_back(pt.p);
    }
  }

  int size() const { return static_cast<int>(q.size()); }

  double min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < size(); ++i) g = std::min(g, q[i + 1] - q[i]);
    return g;
  }
};

void accumulate_forces(const ChainState& s, const PotentialSpec& pot,
                       std::vector<double>& f) {
  f.assign(s.size(), 0.0);
  if (pot.epsilon == 0.0) return;
  for (int i = 0; i + 1 < s.size(); ++i) {
    const double gap = s.q[i + 1] - s.q[i];
    if (gap < pot.range) {
      const double dp = pot.dphi(gap);  // <= 0, repulsive
      f[i] += dp;
      f[i + 1] -= dp;
    }
  }
}

void verlet_substep(ChainState& s, double h, const PotentialSpec& pot,
                    std::vector<double>& f) {
  accumulate_forces(s, pot, f);
  for (int i = 0; i < s.size(); ++i) s.p[i] += 0.5 * h * f[i];
  for (int i = 0; i < s.size(); ++i) s.q[i] += h * s.p[i];
  accumulate_forces(s, pot, f);
  for (int i = 0; i < s.size(); ++i) s.p[i] += 0.5 * h * f[i];
}

// Triple-jump composition coefficients (fourth order).
constexpr double kW1 = 1.3512071919596576;   // 1 / (2 - 2^(1/3))
constexpr double kW0 = -1.7024143839193153;  // 1 - 2*w1

void smooth_step(ChainState& s, double h, const PotentialSpec& pot, int scheme,
                 std::vector<double>& f) {
  if (scheme == 4) {
    verlet_substep(s, kW1 * h, pot, f);
    verlet_substep(s, kW0 * h, pot, f);
    verlet_substep(s, kW1 * h, pot, f);
  } else {
    verlet_substep(s, h, pot, f);
  }
}

}  // namespace

Configuration hamiltonian_flow(const Configuration& x, double t,
                               const PotentialSpec& pot, const IntegratorConfig& cfg) {
  if (!is_allowed(x, pot.sigma, cfg.event_tol))
    throw std::invalid_argument("forbidden configuration");

  ChainState state(x);
  std::vector<double> f;
  const int n = state.size();
  const double dir = t >= 0.0 ? 1.0 : -1.0;
  double remaining = std::abs(t);
  int events = 0;

  while (remaining > 0.0) {
    const double h = dir * std::min(cfg.dt, remaining);
    ChainState trial = state;
    smooth_step(trial, h, pot, cfg.scheme, f);
    if (n < 2 || trial.min_gap() >= pot.sigma) {
      state = std::move(trial);
      remaining -= std::abs(h);
      continue;
    }

    // Contact inside the step: bisect the step fraction to the first time
    // some adjacent gap reaches sigma, then exchange momenta elastically.
    double lo = 0.0, hi = h;
    while (std::abs(hi - lo) > cfg.event_tol) {
      const double mid = 0.5 * (lo + hi);
      ChainState probe = state;
      smooth_step(probe, mid, pot, cfg.scheme, f);
      (probe.min_gap() >= pot.sigma ? lo : hi) = mid;
    }

    ChainState at_hit = state;
    smooth_step(at_hit, hi, pot, cfg.scheme, f);
    int pair = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < n; ++i) {
      const double gap = at_hit.q[i + 1] - at_hit.q[i];
      if (gap < worst) {
        worst = gap;
        pair = i;
      }
    }

    ChainState at_contact = state;
    if (lo != 0.0) smooth_step(at_contact, lo, pot, cfg.scheme, f);
    std::swap(at_contact.p[pair], at_contact.p[pair + 1]);
    state = std::move(at_contact);
    remaining -= std::abs(lo);
    if (++events > cfg.max_events)
      throw std::runtime_error("event cap exceeded: " + std::to_string(events) +
                               " hard-core contacts");
  }

  Configuration out = x;
  for (int i = 0; i < n; ++i) out.pts[i] = {state.q[i], state.p[i]};
  return out;
}

std::pair<double, double> conserved_quantities(const Configuration& x,
                                               const PotentialSpec& pot) {
  double energy = 0.0, momentum = 0.0;
  for (const auto& pt : x.pts) {
    energy += 0.5 * pt.p * pt.p;
    momentum += pt.p;
  }
  for (int i = 0; i + 1 < x.size(); ++i) energy += pot.phi(x.pts[i + 1].q - x.pts[i].q);
  return {energy, momentum};
}

double apply_group(double t, const std::function<double(const Configuration&)>& f,
                   const Configuration& x, const PotentialSpec& pot,
                   const IntegratorConfig& cfg) {
  if (!is_allowed(x, pot.sigma, cfg.event_tol)) return 0.0;
  if (t == 0.0) return f(x);
  return f(hamiltonian_flow(x, -t, pot, cfg));
}

double liouville_apply(const std::function<double(const Configuration&)>& f,
                       const Configuration& x, const PotentialSpec& pot, double fd_step) {
  if (min_gap(x) <= pot.sigma + 2.0 * fd_step)
    throw std::invalid_argument("stencil crosses forbidden set");

  // Central difference with one Richardson level: (4 D(h/2) - D(h)) / 3.
  auto deriv = [&](auto&& bump) {
    auto central = [&](double h) {
      Configuration xp = x, xm = x;
      bump(xp, h);
      bump(xm, -h);
      return (f(xp) - f(xm)) / (2.0 * h);
    };
    return (4.0 * central(0.5 * fd_step) - central(fd_step)) / 3.0;
  };

  double acc = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    acc += -x.pts[i].p * deriv([i](Configuration& y, double h) { y.pts[i].q += h; });
  }
  for (int i = 0; i + 1 < x.size(); ++i) {
    const double gap = x.pts[i + 1].q - x.pts[i].q;
    if (gap >= pot.range) continue;
    const double factor = pot.lint_factor(gap);
    acc += factor * deriv([i](Configuration& y, double h) { y.pts[i].p += h; });
    acc -= factor * deriv([i](Configuration& y, double h) { y.pts[i + 1].p += h; });
  }
  return acc;
}

std::vector<TrajectoryFrame> record_trajectory(const Configuration& x, double t_final,
                                               double frame_dt, const PotentialSpec& pot,
                                               const IntegratorConfig& cfg) {
  std::vector<TrajectoryFrame> frames;
  frames.push_back({0.0, x});
  double t = 0.0;
  Configuration cur = x;
  while (t < t_final - 1e-15) {
    const double step = std::min(frame_dt, t_final - t);
    cur = hamiltonian_flow(cur, step, pot, cfg);
    t += step;
    frames.push_back({t, cur});
  }
  return frames;
}

const Configuration& SubchainEvolver::evolved(const IndexSet& run) {
  if (run.empty()) {
    static const Configuration empty;
    return empty;
  }
  const auto key = std::make_pair(run.labels.front(), run.labels.back());
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Configuration sub = parent_.subset(run);
  Configuration moved =
      flow_time_ == 0.0 ? sub : hamiltonian_flow(sub, flow_time_, pot_, cfg_);
  return cache_.emplace(key, std::move(moved)).first->second;
}

Configuration SubchainEvolver::assemble(const std::vector<IndexSet>& runs) {
  Configuration out = parent_;
  for (const auto& run : runs) {
    const Configuration& sub = evolved(run);
    for (int k = 0; k < run.size(); ++k) out.at(run.labels[k]) = sub.pts[k];
  }
  return out;
}

}  // namespace topo
