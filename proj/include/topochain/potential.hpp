#pragma once

namespace topo {

/// Nearest-neighbor pair potential: hard core of length sigma (realized as
/// elastic momentum exchange at contact) plus the C^2 compact tail
///   phi(d) = epsilon * (range - d)^3 / (range - sigma)^3,  d in [sigma, range],
/// zero for d > range. The tail vanishes to second order at d = range.
struct PotentialSpec {
  double sigma = 1.0;
  double range = 1.5;
  double epsilon = 1.0;

  /// Tail value at gap d >= sigma.
  double phi(double d) const {
    if (d >= range || epsilon == 0.0) return 0.0;
    const double u = range - d;
    const double w = range - sigma;
    return epsilon * u * u * u / (w * w * w);
  }

  /// d/dd phi(d), derivative with respect to the (positive) gap.
  double dphi(double d) const {
    if (d >= range || epsilon == 0.0) return 0.0;
    const double u = range - d;
    const double w = range - sigma;
    return -3.0 * epsilon * u * u / (w * w * w);
  }

  /// Interaction-operator factor (d/dq_j) Phi(q_j - q_{j+1}) for the even
  /// extension of the potential: equals -dphi(gap).
  double lint_factor(double gap) const { return -dphi(gap); }

  bool valid() const { return sigma > 0.0 && range > sigma && epsilon >= 0.0; }
};

}  // namespace topo
