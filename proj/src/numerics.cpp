#include "topochain/numerics.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace topo {

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

int thread_cap() {
  if (const char* env = std::getenv("TOPOCHAIN_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::vector<double> indexed_map(long long n, const std::function<double(long long)>& fn) {
  std::vector<double> out(static_cast<size_t>(n));
  const int threads = std::min<long long>(thread_cap(), n > 0 ? n : 1);
  if (threads <= 1) {
    for (long long i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int tid = 0; tid < threads; ++tid) {
    pool.emplace_back([&, tid]() {
      for (long long i = tid; i < n; i += threads) out[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

namespace {

struct Axis {
  double lo, hi;
};

std::vector<Axis> phase_axes(Arity a, const QuadratureSpec& spec) {
  std::vector<Axis> axes;
  const IndexSet s = IndexSet::canonical(a.n1, a.n2);
  for (Label j : s.labels) {
    const ParticleBox b = spec.box_for(j);
    axes.push_back({b.qlo, b.qhi});
    axes.push_back({-spec.momentum_halfwidth, spec.momentum_halfwidth});
  }
  return axes;
}

Configuration node_config(Arity a, const std::vector<double>& coords) {
  Configuration x;
  x.n1 = a.n1;
  x.n2 = a.n2;
  x.pts.resize(a.total());
  for (int i = 0; i < a.total(); ++i) x.pts[i] = {coords[2 * i], coords[2 * i + 1]};
  return x;
}

double tensor_integral(const ComponentFunction& f, const std::vector<Axis>& axes,
                       int points) {
  const int dims = static_cast<int>(axes.size());
  const auto& [nodes, weights] = gauss_legendre(points);
  long long total = 1;
  for (int d = 0; d < dims; ++d) total *= points;

  auto value_at = [&](long long flat) {
    std::vector<double> coords(dims);
    double w = 1.0;
    long long rest = flat;
    for (int d = 0; d < dims; ++d) {
      const int k = static_cast<int>(rest % points);
      rest /= points;
      const double half = 0.5 * (axes[d].hi - axes[d].lo);
      coords[d] = axes[d].lo + half * (nodes[k] + 1.0);
      w *= half * weights[k];
    }
    return w * f.fn(node_config(f.arity, coords));
  };

  const std::vector<double> vals = indexed_map(total, value_at);
  double acc = 0.0;
  for (double v : vals) acc += v;
  return acc;
}

IntegralResult mc_integral(const ComponentFunction& f, const std::vector<Axis>& axes,
                           long long samples, std::uint64_t seed) {
  const int dims = static_cast<int>(axes.size());
  double volume = 1.0;
  for (const auto& ax : axes) volume *= ax.hi - ax.lo;

  // One generator per sample index keeps the stream independent of the
  // thread count and bit-reproducible.
  auto value_at = [&](long long i) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
    std::vector<double> coords(dims);
    for (int d = 0; d < dims; ++d)
      coords[d] = axes[d].lo + (axes[d].hi - axes[d].lo) * u64_to_unit(rng());
    return f.fn(node_config(f.arity, coords));
  };

  const std::vector<double> vals = indexed_map(samples, value_at);
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= static_cast<double>(samples);
  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  var /= static_cast<double>(samples - 1);
  const double se = std::sqrt(var / static_cast<double>(samples));
  return {volume * mean, volume * se};
}

}  // namespace

IntegralResult integrate_component(const ComponentFunction& f, const QuadratureSpec& spec) {
  if (f.arity.total() == 0) return {0.0, 0.0};
  const int dims = 2 * f.arity.total();
  if (dims > spec.dim_cap) throw std::invalid_argument("dimension cap");

  const std::vector<Axis> axes = phase_axes(f.arity, spec);
  const bool tensor = spec.mode == QuadratureSpec::Mode::TensorGauss ||
                      (spec.mode == QuadratureSpec::Mode::Auto && dims <= spec.tensor_dim_cap);
  if (tensor) {
    const double fine = tensor_integral(f, axes, spec.points_per_dim);
    const int coarse_pts = std::max(4, spec.points_per_dim / 2);
    const double coarse = tensor_integral(f, axes, coarse_pts);
    return {fine, std::abs(fine - coarse)};
  }
  return mc_integral(f, axes, spec.sample_count, spec.seed);
}

double l1alpha_norm(const DoubleSequence& f, NormWeight w, const QuadratureSpec& spec) {
  double acc = std::abs(f.scalar0());
  for (const auto& [arity, fn] : f.components()) {
    ComponentFunction absf{arity, [fn](const Configuration& x) { return std::abs(fn(x)); }};
    acc += std::pow(w.alpha, arity.total()) * integrate_component(absf, spec).value;
  }
  return acc;
}

DerivativeResult time_derivative(const std::function<double(double)>& fn, double t, double h) {
  auto central = [&](double step) {
    const double a = fn(t + step), b = fn(t - step);
    if (!std::isfinite(a) || !std::isfinite(b))
      throw std::runtime_error("non-finite evaluation in time derivative");
    return (a - b) / (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  const double d3 = central(0.25 * h);
  DerivativeResult r;
  r.value = (4.0 * d3 - d2) / 3.0;
  const double e1 = std::abs(d1 - d2), e2 = std::abs(d2 - d3);
  r.observed_order = (e1 > 0.0 && e2 > 0.0) ? std::log2(e1 / e2) : 4.0;
  return r;
}

}  // namespace topo
