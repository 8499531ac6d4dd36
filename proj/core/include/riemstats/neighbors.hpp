#pragma once

#include <vector>

#include <Eigen/Core>

#include "riemstats/table.hpp"

namespace riemstats {

struct Neighbor {
  Eigen::Index index;
  double distance;
};

/// For each point i, exactly k neighbors j != i sorted by
/// (distance, index) ascending.
struct NeighborLists {
  int k = 0;
  std::vector<std::vector<Neighbor>> lists;

  Eigen::Index size() const { return static_cast<Eigen::Index>(lists.size()); }
};

/// Euclidean distance between rows i and j of a matrix.
double row_distance(const Eigen::MatrixXd& values, Eigen::Index i,
                    Eigen::Index j);

/// Exact brute-force k-nearest-neighbors under the Euclidean row metric.
/// Ties broken by smaller index; deterministic. Requires 2 <= k <= n-1.
NeighborLists exact_knn(const DataTable& table, int k);

}  // namespace riemstats
