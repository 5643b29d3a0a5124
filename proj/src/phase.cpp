#include "topochain/phase.hpp"

#include <limits>
#include <stdexcept>

namespace topo {

Configuration::Configuration(int neg, int pos, std::vector<PhasePoint> points)
    : n1(neg), n2(pos), pts(std::move(points)) {
  if (static_cast<int>(pts.size()) != n1 + n2)
    throw std::invalid_argument("configuration size does not match arity");
}

Configuration Configuration::subset(const IndexSet& s) const {
  Configuration sub;
  sub.n1 = s.neg_count();
  sub.n2 = s.pos_count();
  sub.pts.reserve(s.size());
  for (Label j : s.labels) sub.pts.push_back(at(j));
  return sub;
}

double min_gap(const Configuration& x) {
  double g = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < x.size(); ++i) g = std::min(g, x.pts[i + 1].q - x.pts[i].q);
  return g;
}

bool is_allowed(const Configuration& x, double sigma, double slack) {
  return min_gap(x) >= sigma - slack;
}

}  // namespace topo
