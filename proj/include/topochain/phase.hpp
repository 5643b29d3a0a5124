#pragma once

#include <compare>
#include <vector>

#include "topochain/labels.hpp"

namespace topo {

/// Component index: n1 particles left of the origin pair, n2 to the right.
struct Arity {
  int n1 = 0;
  int n2 = 0;
  int total() const { return n1 + n2; }
  auto operator<=>(const Arity&) const = default;
};

struct PhasePoint {
  double q = 0.0;  // position
  double p = 0.0;  // momentum (unit mass, equals velocity)
};

/// Label-ordered chain of phase points with labels -n1,...,-1,1,...,n2.
struct Configuration {
  int n1 = 0;
  int n2 = 0;
  std::vector<PhasePoint> pts;  // index 0 holds label -n1

  Configuration() = default;
  Configuration(int neg, int pos, std::vector<PhasePoint> points);

  int size() const { return static_cast<int>(pts.size()); }
  Arity arity() const { return {n1, n2}; }

  int index_of(Label j) const { return j < 0 ? j + n1 : n1 + j - 1; }
  const PhasePoint& at(Label j) const { return pts[index_of(j)]; }
  PhasePoint& at(Label j) { return pts[index_of(j)]; }

  /// Sub-configuration on the given labels, re-keyed to its own canonical
  /// arity (#negative labels, #positive labels). Phase points keep label order.
  Configuration subset(const IndexSet& s) const;
};

/// Smallest adjacent gap q_{i+1} - q_i (infinity for fewer than 2 points).
double min_gap(const Configuration& x);

/// Allowed iff every adjacent gap is >= sigma - slack.
bool is_allowed(const Configuration& x, double sigma, double slack = 0.0);

}  // namespace topo
