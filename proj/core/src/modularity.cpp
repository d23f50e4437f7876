#include "commdetect/modularity.hpp"

#include <string>
#include <vector>

#include "commdetect/errors.hpp"

namespace commdetect {

double modularity(const Graph& g, const Partition& p) {
  if (p.size() != g.node_count()) {
    throw ValidationError("partition covers " + std::to_string(p.size()) + " nodes, graph has " +
                          std::to_string(g.node_count()));
  }
  const double m = g.total_weight();
  if (!(m > 0.0)) throw ValidationError("modularity is undefined for a graph without edges");

  // Per community: internal weight (each edge once) and degree sum.
  const Partition canon = p.canonical();
  std::vector<double> internal(g.node_count(), 0.0);
  std::vector<double> degree(g.node_count(), 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) degree[canon[i]] += g.weighted_degree(i);
  for (const auto& e : g.edges()) {
    if (canon[e.u] == canon[e.v]) internal[canon[e.u]] += e.weight;
  }

  double q = 0.0;
  const double two_m = 2.0 * m;
  for (std::size_t c = 0; c < g.node_count(); ++c) {
    const double share = degree[c] / two_m;
    q += internal[c] / m - share * share;
  }
  return q;
}

}  // namespace commdetect
