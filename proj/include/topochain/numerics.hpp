#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "topochain/star.hpp"

namespace topo {

/// Weight of the sequence-space norm sum alpha^(n1+n2) |f_{n1+n2}|_{L1}.
struct NormWeight {
  double alpha = 4.0;
};

struct ParticleBox {
  double qlo = -6.0;
  double qhi = 6.0;
};

struct QuadratureSpec {
  enum class Mode { Auto, TensorGauss, MonteCarlo };

  Mode mode = Mode::Auto;
  int points_per_dim = 16;
  long long sample_count = 200000;
  double momentum_halfwidth = 6.0;
  /// Position box per particle label; defaults to [-6, 6] everywhere.
  std::function<ParticleBox(Label)> position_box;
  std::uint64_t seed = 42;
  /// Auto mode: tensor Gauss-Legendre up to this total dimension, MC beyond.
  int tensor_dim_cap = 4;
  int dim_cap = 12;

  ParticleBox box_for(Label j) const { return position_box ? position_box(j) : ParticleBox{}; }
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Integral of f over the phase box of its arity (dimension 2 per particle).
/// Tensor Gauss-Legendre for low dimension, seeded Monte Carlo beyond; the
/// error estimate is the refinement delta (tensor) or the MC standard error.
/// Throws above spec.dim_cap dimensions.
IntegralResult integrate_component(const ComponentFunction& f, const QuadratureSpec& spec);

/// |f_0| + sum over components of alpha^(n1+n2) * integral of |f_{n1+n2}|.
double l1alpha_norm(const DoubleSequence& f, NormWeight w, const QuadratureSpec& spec);

struct DerivativeResult {
  double value = 0.0;
  double observed_order = 0.0;
};

/// d/dt fn at t by central differences over h, h/2, h/4 with Richardson
/// extrapolation of the finest pair; observed_order estimates the
/// convergence rate. Throws on non-finite evaluations.
DerivativeResult time_derivative(const std::function<double(double)>& fn, double t,
                                 double h = 0.08);

/// Gauss-Legendre nodes and weights on [-1, 1] (cached per n).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// Thread cap from TOPOCHAIN_THREADS (>= 1); defaults to 1.
int thread_cap();

/// fn(i) for i in [0, n), possibly across threads, results in index order.
/// Reduction by the caller stays deterministic for any thread count.
std::vector<double> indexed_map(long long n, const std::function<double(long long)>& fn);

/// Deterministic uniform double in [0, 1) from a 64-bit generator state.
inline double u64_to_unit(std::uint64_t v) {
  return static_cast<double>(v >> 11) * 0x1.0p-53;
}

}  // namespace topo
