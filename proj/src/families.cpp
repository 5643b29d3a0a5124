#include "topochain/families.hpp"

#include <cmath>

namespace topo {

double smooth_bump(double y, double width) {
  const double t = 2.0 * y / width;
  const double s = 1.0 - t * t;
  if (s <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / s);
}

double c2_ramp(double gap, double sigma, double delta) {
  const double u = (gap - sigma - delta) / delta;
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double gaussian(double p, double std_dev) {
  const double z = p / std_dev;
  return std::exp(-0.5 * z * z) / (std_dev * std::sqrt(2.0 * M_PI));
}

double admissibility_ramp(const Configuration& x, double sigma, double delta) {
  double v = 1.0;
  for (int i = 0; i + 1 < x.size(); ++i) {
    v *= c2_ramp(x.pts[i + 1].q - x.pts[i].q, sigma, delta);
    if (v == 0.0) return 0.0;
  }
  return v;
}

double random_normal(std::mt19937_64& rng) {
  // Box-Muller on the deterministic unit mapping.
  double u1 = u64_to_unit(rng());
  const double u2 = u64_to_unit(rng());
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

DoubleSequence make_ramp_sequence(const RampFamilySpec& spec) {
  std::mt19937_64 rng(spec.seed);
  DoubleSequence f;
  for (int total = 1; total <= spec.max_total; ++total) {
    for (int n1 = 0; n1 <= total; ++n1) {
      const double coeff = 0.5 + u64_to_unit(rng());
      std::vector<double> wave_k, wave_phi;
      for (int i = 0; i < total; ++i) {
        wave_k.push_back(0.4 + 0.8 * u64_to_unit(rng()));
        wave_phi.push_back(2.0 * M_PI * u64_to_unit(rng()));
      }
      f.set_component({n1, total - n1}, [spec, coeff, wave_k, wave_phi](const Configuration& x) {
        double v = coeff * admissibility_ramp(x, spec.sigma, spec.delta);
        if (v == 0.0) return 0.0;
        for (int i = 0; i < x.size(); ++i) {
          const auto& pt = x.pts[i];
          v *= gaussian(pt.p, spec.p_std) *
               std::exp(-(pt.q * pt.q) / (spec.env_width * spec.env_width)) *
               (1.0 + spec.wobble * std::sin(wave_k[i] * pt.q + wave_phi[i]));
        }
        return v;
      });
    }
  }
  return f;
}

DoubleSequence make_observable_sequence(const ObservableFamilySpec& spec) {
  std::mt19937_64 rng(spec.seed);
  DoubleSequence b;
  b.set_scalar0(spec.scalar0);
  for (int total = 1; total <= spec.max_total; ++total) {
    for (int n1 = 0; n1 <= total; ++n1) {
      std::vector<double> a0, a1, a2, qc;
      for (int i = 0; i < total; ++i) {
        a0.push_back(0.4 + u64_to_unit(rng()));
        a1.push_back(-0.5 + u64_to_unit(rng()));
        a2.push_back(-0.3 + 0.6 * u64_to_unit(rng()));
        qc.push_back(-1.5 + 3.0 * u64_to_unit(rng()));
      }
      b.set_component({n1, total - n1}, [spec, a0, a1, a2, qc](const Configuration& x) {
        double v = admissibility_ramp(x, spec.sigma, spec.delta);
        if (v == 0.0) return 0.0;
        for (int i = 0; i < x.size(); ++i) {
          const double p = x.pts[i].p, q = x.pts[i].q;
          const double pz = p / spec.p_scale;
          const double qz = (q - qc[i]) / spec.env_width;
          v *= (a0[i] + a1[i] * p + a2[i] * p * p) * std::exp(-0.5 * pz * pz) *
               std::exp(-0.5 * qz * qz);
        }
        return v;
      });
    }
  }
  return b;
}

namespace {

double slot_value_impl(const AnchoredFamilySpec& spec, Label j, const PhasePoint& pt) {
  const double mu = spec.spacing * (j > 0 ? j - 0.5 : j + 0.5);
  return gaussian(pt.p, spec.p_std) * smooth_bump(pt.q - mu, spec.bump_width);
}

Evaluator anchored_product(const AnchoredFamilySpec& spec, double coeff) {
  return [spec, coeff](const Configuration& x) {
    double v = coeff;
    const IndexSet s = IndexSet::canonical(x.n1, x.n2);
    for (int i = 0; i < x.size(); ++i) {
      v *= slot_value_impl(spec, s.labels[i], x.pts[i]);
      if (v == 0.0) return 0.0;
    }
    return v;
  };
}

// High-order 1D Gauss-Legendre value of the bump integral over its support.
double bump_integral(double width) {
  const auto& [nodes, weights] = gauss_legendre(64);
  double acc = 0.0;
  for (size_t k = 0; k < nodes.size(); ++k)
    acc += weights[k] * smooth_bump(0.5 * width * nodes[k], width);
  return 0.5 * width * acc;
}

double gaussian_box_mass(double std_dev, double halfwidth) {
  return std::erf(halfwidth / (std_dev * std::sqrt(2.0)));
}

}  // namespace

AnchoredFamily::AnchoredFamily(AnchoredFamilySpec spec, double momentum_halfwidth)
    : spec_(spec), momentum_halfwidth_(momentum_halfwidth) {
  slot_integral_ = bump_integral(spec_.bump_width) *
                   gaussian_box_mass(spec_.p_std, momentum_halfwidth_);

  std::mt19937_64 rng(spec_.seed);
  for (int total = 1; total <= spec_.max_total; ++total)
    for (int n1 = 0; n1 <= total; ++n1)
      coeffs_[{n1, total - n1}] =
          std::pow(spec_.base_weight, total) * (0.5 + u64_to_unit(rng()));

  dist_.set_scalar0(1.0);
  for (const auto& [arity, c] : coeffs_) dist_.set_component(arity, anchored_product(spec_, c));
}

double AnchoredFamily::anchor(Label j) const {
  return spec_.spacing * (j > 0 ? j - 0.5 : j + 0.5);
}

double AnchoredFamily::coefficient(Arity a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? 0.0 : it->second;
}

double AnchoredFamily::slot_value(Label j, const PhasePoint& pt) const {
  return slot_value_impl(spec_, j, pt);
}

DoubleSequence AnchoredFamily::correlations() const {
  DoubleSequence d = dist_;
  d.set_scalar0(0.0);
  return cumulant_transform(d);
}

double AnchoredFamily::grand_partition() const {
  double z = dist_.scalar0();
  for (const auto& [arity, c] : coeffs_) z += c * std::pow(slot_integral_, arity.total());
  return z;
}

double AnchoredFamily::reduced_coefficient(Arity a) const {
  double acc = 0.0;
  for (const auto& [key, c] : coeffs_)
    if (key.n1 >= a.n1 && key.n2 >= a.n2)
      acc += c * std::pow(slot_integral_, (key.n1 - a.n1) + (key.n2 - a.n2));
  return acc / grand_partition();
}

DoubleSequence AnchoredFamily::reduced_initial() const {
  DoubleSequence f;
  for (const auto& [arity, c] : coeffs_)
    f.set_component(arity, anchored_product(spec_, reduced_coefficient(arity)));
  return f;
}

ParticleBox AnchoredFamily::box_for(Label j, double slack) const {
  const double mu = anchor(j);
  return {mu - 0.5 * spec_.bump_width - slack, mu + 0.5 * spec_.bump_width + slack};
}

Configuration random_allowed_config(Arity a, double sigma, double clearance,
                                    double gap_spread, double p_scale,
                                    std::mt19937_64& rng) {
  Configuration x;
  x.n1 = a.n1;
  x.n2 = a.n2;
  const int n = a.total();
  x.pts.resize(n);
  double q = -2.0 + 4.0 * u64_to_unit(rng());
  for (int i = 0; i < n; ++i) {
    if (i > 0) q += sigma + clearance + gap_spread * u64_to_unit(rng());
    x.pts[i].q = q;
    x.pts[i].p = p_scale * random_normal(rng);
  }
  // center positions around the origin
  double mean = 0.0;
  for (const auto& pt : x.pts) mean += pt.q;
  mean /= std::max(1, n);
  for (auto& pt : x.pts) pt.q -= mean;
  return x;
}

}  // namespace topo
