#pragma once

#include <cstdint>
#include <random>

#include "topochain/numerics.hpp"
#include "topochain/potential.hpp"
#include "topochain/star.hpp"

namespace topo {

/// exp(1 - 1/(1 - (2y/width)^2)) for |y| < width/2, else 0. Smooth compact
/// bump with peak 1.
double smooth_bump(double y, double width);

/// C^2 ramp in the adjacent gap: 0 for gap <= sigma + delta, 1 for
/// gap >= sigma + 2*delta (quintic smoothstep between).
double c2_ramp(double gap, double sigma, double delta);

/// Normalized Gaussian density.
double gaussian(double p, double std_dev);

/// Product of c2_ramp over all adjacent gaps: smooth cutoff vanishing on the
/// forbidden set with margin delta.
double admissibility_ramp(const Configuration& x, double sigma, double delta);

/// Generic smooth correlation/distribution data for pointwise identity
/// tests: per component, coefficient * prod_i gaussian(p_i) *
/// envelope(q_i) * (1 + wobble * sin(k q + phase)) * admissibility ramp.
struct RampFamilySpec {
  double sigma = 1.0;
  double delta = 0.1;
  double p_std = 1.0;
  double env_width = 5.0;
  double wobble = 0.3;
  int max_total = 4;
  std::uint64_t seed = 1;
};

DoubleSequence make_ramp_sequence(const RampFamilySpec& spec);

/// Bounded smooth observables: per particle a quadratic in p times a
/// Gaussian, a broad position envelope, and the admissibility ramp.
struct ObservableFamilySpec {
  double sigma = 1.0;
  double delta = 0.1;
  double p_scale = 1.5;
  double env_width = 6.0;
  int max_total = 3;
  std::uint64_t seed = 7;
  double scalar0 = 0.0;
};

DoubleSequence make_observable_sequence(const ObservableFamilySpec& spec);

/// Grand-canonical initial data factorized over label-anchored slots:
///   D0_{n1+n2}(x) = c_{n1+n2} prod_i gaussian(p_i) * bump(q_i - anchor(i)),
/// scalar D_0 = 1. Slots are spaced so every configuration in the support is
/// allowed with clearance; one-particle marginals integrate in closed form,
/// which keeps every reduced quantity a single-level quadrature.
struct AnchoredFamilySpec {
  double p_std = 0.55;
  double bump_width = 1.2;
  double spacing = 6.0;
  double base_weight = 0.05;  // per-particle activity scale of c_{n1+n2}
  int max_total = 3;
  std::uint64_t seed = 42;
};

class AnchoredFamily {
 public:
  AnchoredFamily(AnchoredFamilySpec spec, double momentum_halfwidth);

  const AnchoredFamilySpec& spec() const { return spec_; }
  double anchor(Label j) const;
  double coefficient(Arity a) const;
  /// gaussian(p) * bump(q - anchor(j)) for slot j.
  double slot_value(Label j, const PhasePoint& pt) const;

  /// D(0): scalar 1 plus factorized components up to max_total.
  const DoubleSequence& distribution() const { return dist_; }
  /// Initial correlation functions (cumulants of the components of D(0)).
  DoubleSequence correlations() const;

  /// Integral of one slot over the momentum box and the bump support.
  double per_slot_integral() const { return slot_integral_; }
  /// (I, D(0)) in closed form.
  double grand_partition() const;
  /// Reduced distribution functions at t = 0: lambda_{m1+m2} times the slot
  /// product, where lambda resums the integrated-out outer slots.
  DoubleSequence reduced_initial() const;
  double reduced_coefficient(Arity a) const;

  /// Position box for slot j: bump support padded by slack.
  ParticleBox box_for(Label j, double slack) const;

 private:
  AnchoredFamilySpec spec_;
  double momentum_halfwidth_;
  double slot_integral_;
  std::map<Arity, double> coeffs_;
  DoubleSequence dist_;
};

/// Uniformly random allowed chain: sequential gaps in
/// [sigma + clearance, sigma + clearance + gap_spread], Gaussian momenta.
Configuration random_allowed_config(Arity a, double sigma, double clearance,
                                    double gap_spread, double p_scale,
                                    std::mt19937_64& rng);

/// Standard normal from the shared deterministic stream.
double random_normal(std::mt19937_64& rng);

}  // namespace topo
