#include "riemstats/local_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "riemstats/errors.hpp"

namespace riemstats {

namespace {

double membership_sum(const std::vector<Neighbor>& list, double rho,
                      double sigma) {
  double sum = 0.0;
  for (const auto& nb : list) {
    sum += std::exp(-std::max(0.0, nb.distance - rho) / sigma);
  }
  return sum;
}

struct UnionFind {
  std::vector<Eigen::Index> parent;

  explicit UnionFind(Eigen::Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  }
  Eigen::Index find(Eigen::Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // Smaller root wins so component representatives are stable.
  bool unite(Eigen::Index a, Eigen::Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

std::vector<std::vector<std::pair<Eigen::Index, double>>> adjacency(
    const FuzzyGraph& graph) {
  std::vector<std::vector<std::pair<Eigen::Index, double>>> adj(
      static_cast<std::size_t>(graph.n));
  for (const auto& e : graph.edges) {
    adj[static_cast<std::size_t>(e.i)].emplace_back(e.j, e.ell);
    adj[static_cast<std::size_t>(e.j)].emplace_back(e.i, e.ell);
  }
  return adj;
}

// Dijkstra shortest-path lengths from `source` over positive edge weights.
void dijkstra(
    const std::vector<std::vector<std::pair<Eigen::Index, double>>>& adj,
    Eigen::Index source, Eigen::VectorXd& dist) {
  const auto n = static_cast<Eigen::Index>(adj.size());
  dist.setConstant(n, std::numeric_limits<double>::infinity());
  dist[source] = 0.0;
  using Item = std::pair<double, Eigen::Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
      const double nd = d + w;
      if (nd < dist[v]) {
        dist[v] = nd;
        queue.emplace(nd, v);
      }
    }
  }
}

// Repeated relaxation sweeps until d(i,k) <= d(i,j) + d(j,k) holds exactly
// for every ordered triple. Floating-point sums along different path orders
// can violate the inequality by an ulp after plain Dijkstra; entries only
// decrease here, so the sweep terminates, and both updates keep the matrix
// symmetric.
void enforce_triangle_fixpoint(Eigen::MatrixXd& d) {
  const Eigen::Index n = d.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const double dij = d(i, j);
        for (Eigen::Index k = 0; k < n; ++k) {
          const double s = dij + d(j, k);
          if (s < d(i, k)) {
            d(i, k) = s;
            d(k, i) = s;
            changed = true;
          }
        }
      }
    }
  }
}

std::string describe_component(const std::vector<Eigen::Index>& comp) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (i) out << ", ";
    out << comp[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

LocalScales compute_local_scales(const NeighborLists& neighbors, int k) {
  const Eigen::Index n = neighbors.size();
  const double target = std::log2(static_cast<double>(k));

  LocalScales scales;
  scales.rho.resize(n);
  scales.sigma.resize(n);
  scales.clamped.assign(static_cast<std::size_t>(n), false);

  double max_distance = 0.0;
  for (const auto& list : neighbors.lists) {
    for (const auto& nb : list) max_distance = std::max(max_distance, nb.distance);
  }
  const double sigma_max = 1e3 * (max_distance + 1.0);

  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& list = neighbors.lists[static_cast<std::size_t>(i)];
    const double rho = list.front().distance;
    scales.rho[i] = rho;

    // The membership sum is nondecreasing in sigma; bisect for the target.
    double lo = kSigmaMin;
    double hi = sigma_max;
    if (membership_sum(list, rho, lo) >= target) {
      scales.sigma[i] = lo;
      scales.clamped[static_cast<std::size_t>(i)] = true;
      continue;
    }
    if (membership_sum(list, rho, hi) <= target) {
      scales.sigma[i] = hi;
      scales.clamped[static_cast<std::size_t>(i)] = true;
      continue;
    }
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 64; ++iter) {
      mid = 0.5 * (lo + hi);
      const double sum = membership_sum(list, rho, mid);
      if (std::abs(sum - target) <= 1e-5) break;
      if (sum > target) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    scales.sigma[i] = mid;
  }
  return scales;
}

FuzzyGraph fuzzy_memberships(const NeighborLists& neighbors,
                             const LocalScales& scales) {
  const Eigen::Index n = neighbors.size();
  FuzzyGraph graph;
  graph.n = n;
  graph.directed.resize(static_cast<std::size_t>(n));

  std::unordered_map<long long, double> directed_w;
  directed_w.reserve(static_cast<std::size_t>(n) * neighbors.lists[0].size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& list = neighbors.lists[static_cast<std::size_t>(i)];
    for (const auto& nb : list) {
      const double w = std::exp(-std::max(0.0, nb.distance - scales.rho[i]) /
                                scales.sigma[i]);
      graph.directed[static_cast<std::size_t>(i)].emplace_back(nb.index, w);
      directed_w[i * n + nb.index] = w;
    }
  }

  // One edge per unordered pair present in either direction.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const auto& [j, w] : graph.directed[static_cast<std::size_t>(i)]) {
      pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  graph.edges.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    const auto it_ij = directed_w.find(i * n + j);
    const auto it_ji = directed_w.find(j * n + i);
    const double a = it_ij == directed_w.end() ? 0.0 : it_ij->second;
    const double b = it_ji == directed_w.end() ? 0.0 : it_ji->second;
    const double mu = std::min(a + b - a * b, 1.0 - kMembershipClamp);
    graph.edges.push_back({i, j, mu, -std::log(mu), false});
  }
  return graph;
}

std::vector<std::vector<Eigen::Index>> connected_components(
    const FuzzyGraph& graph) {
  UnionFind uf(graph.n);
  for (const auto& e : graph.edges) uf.unite(e.i, e.j);

  std::vector<std::vector<Eigen::Index>> components;
  std::unordered_map<Eigen::Index, std::size_t> root_to_slot;
  for (Eigen::Index i = 0; i < graph.n; ++i) {
    const Eigen::Index root = uf.find(i);
    auto [it, inserted] = root_to_slot.try_emplace(root, components.size());
    if (inserted) components.emplace_back();
    components[it->second].push_back(i);
  }
  // Scanning i ascending already orders components by smallest member.
  return components;
}

FuzzyGraph bridge_components(const FuzzyGraph& graph, const DataTable& table) {
  const auto components = connected_components(graph);
  if (components.size() <= 1) return graph;

  double sum_ell = 0.0;
  double sum_euclid = 0.0;
  for (const auto& e : graph.edges) {
    sum_ell += e.ell;
    sum_euclid += row_distance(table.values, e.i, e.j);
  }
  // All-coincident edge sets would give a zero denominator; fall back to
  // the raw Euclidean length.
  const double c = sum_euclid > 0.0 ? sum_ell / sum_euclid : 1.0;

  FuzzyGraph bridged = graph;
  for (std::size_t a = 0; a < components.size(); ++a) {
    for (std::size_t b = a + 1; b < components.size(); ++b) {
      double best = std::numeric_limits<double>::infinity();
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i : components[a]) {
        for (Eigen::Index j : components[b]) {
          const double d = row_distance(table.values, i, j);
          if (d < best) {
            best = d;
            bi = std::min(i, j);
            bj = std::max(i, j);
          }
        }
      }
      const double mu =
          std::min(std::exp(-c * best), 1.0 - kMembershipClamp);
      bridged.edges.push_back({bi, bj, mu, -std::log(mu), true});
    }
  }
  std::sort(bridged.edges.begin(), bridged.edges.end(),
            [](const FuzzyEdge& x, const FuzzyEdge& y) {
              return std::tie(x.i, x.j) < std::tie(y.i, y.j);
            });
  return bridged;
}

DistanceMatrix umap_distance_matrix(const FuzzyGraph& graph, MetricMode mode,
                                    DisconnectPolicy policy,
                                    const DataTable& table) {
  const auto components = connected_components(graph);
  if (components.size() > 1 && policy == DisconnectPolicy::fail) {
    throw input_error("graph is disconnected: component " +
                      describe_component(components[0]) + " and component " +
                      describe_component(components[1]) +
                      (components.size() > 2 ? " (and others)" : ""));
  }
  const FuzzyGraph& connected =
      components.size() > 1 ? bridge_components(graph, table) : graph;
  const Eigen::Index n = connected.n;

  DistanceMatrix result;
  result.mode = mode;
  result.values.setZero(n, n);

  if (mode == MetricMode::geodesic) {
    const auto adj = adjacency(connected);
    Eigen::VectorXd dist(n);
    for (Eigen::Index s = 0; s < n; ++s) {
      dijkstra(adj, s, dist);
      result.values.row(s) = dist;
    }
    // Symmetrize (summation order differs between sources), then polish.
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double d = std::min(result.values(i, j), result.values(j, i));
        result.values(i, j) = d;
        result.values(j, i) = d;
      }
    }
    enforce_triangle_fixpoint(result.values);
  } else {
    // Minimax distance = maximum edge along the minimum-spanning-tree path.
    std::vector<FuzzyEdge> edges = connected.edges;
    std::sort(edges.begin(), edges.end(),
              [](const FuzzyEdge& x, const FuzzyEdge& y) {
                return std::tie(x.ell, x.i, x.j) < std::tie(y.ell, y.i, y.j);
              });
    UnionFind uf(n);
    std::vector<std::vector<std::pair<Eigen::Index, double>>> tree(
        static_cast<std::size_t>(n));
    for (const auto& e : edges) {
      if (uf.unite(e.i, e.j)) {
        tree[static_cast<std::size_t>(e.i)].emplace_back(e.j, e.ell);
        tree[static_cast<std::size_t>(e.j)].emplace_back(e.i, e.ell);
      }
    }
    std::vector<Eigen::Index> stack;
    for (Eigen::Index s = 0; s < n; ++s) {
      stack.assign(1, s);
      Eigen::VectorXd dist =
          Eigen::VectorXd::Constant(n, -1.0);
      dist[s] = 0.0;
      while (!stack.empty()) {
        const Eigen::Index u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : tree[static_cast<std::size_t>(u)]) {
          if (dist[v] < 0.0) {
            dist[v] = std::max(dist[u], w);
            stack.push_back(v);
          }
        }
      }
      result.values.row(s) = dist;
    }
  }
  return result;
}

}  // namespace riemstats
