#include "riemstats/neighbors.hpp"

#include <algorithm>
#include <cmath>

#include "riemstats/errors.hpp"

namespace riemstats {

double row_distance(const Eigen::MatrixXd& values, Eigen::Index i,
                    Eigen::Index j) {
  return (values.row(i) - values.row(j)).norm();
}

NeighborLists exact_knn(const DataTable& table, int k) {
  const Eigen::Index n = table.rows();
  if (k < 2 || k > n - 1) {
    throw input_error("k out of range: k=" + std::to_string(k) +
                      " must satisfy 2 <= k <= n-1 with n=" +
                      std::to_string(n));
  }

  NeighborLists result;
  result.k = k;
  result.lists.resize(static_cast<std::size_t>(n));
  std::vector<Neighbor> candidates;
  candidates.reserve(static_cast<std::size_t>(n - 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    candidates.clear();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      candidates.push_back({j, row_distance(table.values, i, j)});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Neighbor& a, const Neighbor& b) {
                if (a.distance != b.distance) return a.distance < b.distance;
                return a.index < b.index;
              });
    candidates.resize(static_cast<std::size_t>(k));
    result.lists[static_cast<std::size_t>(i)] = candidates;
  }
  return result;
}

}  // namespace riemstats
