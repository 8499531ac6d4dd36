#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "riemstats/config.hpp"
#include "riemstats/neighbors.hpp"
#include "riemstats/table.hpp"

namespace riemstats {

/// Memberships are clamped at 1 - kMembershipClamp before taking logs so
/// that every edge distance stays strictly positive.
inline constexpr double kMembershipClamp = 1e-6;

/// Lower and upper bisection bounds for the bandwidth search.
inline constexpr double kSigmaMin = 1e-12;

/// Per-point local scales: rho is the distance to the nearest neighbor,
/// sigma the bandwidth calibrated so that
///   sum_j exp(-max(0, d_ij - rho_i) / sigma_i) = log2(k)
/// within 1e-5, unless the target is unreachable and sigma clamps to a
/// bisection bound (tracked in `clamped`).
struct LocalScales {
  Eigen::VectorXd rho;
  Eigen::VectorXd sigma;
  std::vector<bool> clamped;
};

struct FuzzyEdge {
  Eigen::Index i = 0;  // i < j always
  Eigen::Index j = 0;
  double mu = 0.0;   // symmetric membership in (0, 1 - kMembershipClamp]
  double ell = 0.0;  // -ln(mu) > 0
  bool bridge = false;
};

/// The weighted 1-skeleton: directed memberships per source point and the
/// symmetrized edge list (sorted by (i, j), one entry per unordered pair).
struct FuzzyGraph {
  Eigen::Index n = 0;
  std::vector<std::vector<std::pair<Eigen::Index, double>>> directed;  // w_ij
  std::vector<FuzzyEdge> edges;
};

/// All-pairs distances derived from a FuzzyGraph. Symmetric bit-exactly,
/// zero diagonal, finite entries. In geodesic mode the matrix satisfies the
/// triangle inequality exactly (double comparison) over all triples.
struct DistanceMatrix {
  Eigen::MatrixXd values;
  MetricMode mode = MetricMode::geodesic;

  Eigen::Index size() const { return values.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const {
    return values(i, j);
  }
};

/// Calibrates rho_i and sigma_i per point by bisection (64 iterations max,
/// tolerance 1e-5 on the membership sum).
LocalScales compute_local_scales(const NeighborLists& neighbors, int k);

/// Directed memberships w_ij = exp(-max(0, d_ij - rho_i) / sigma_i) for
/// j in kNN(i), symmetrized with the probabilistic union
/// mu = w_ij + w_ji - w_ij * w_ji (absent direction counts as 0).
FuzzyGraph fuzzy_memberships(const NeighborLists& neighbors,
                             const LocalScales& scales);

/// Connected components of the edge set, each sorted ascending, ordered by
/// smallest member.
std::vector<std::vector<Eigen::Index>> connected_components(
    const FuzzyGraph& graph);

/// Returns a connected copy of the graph. If the graph is already connected
/// this is the identity. Otherwise one edge is added between every pair of
/// components, joining their Euclidean-closest rows, with edge distance
/// c * d_euclid where c = mean(existing ell) / mean(corresponding Euclidean
/// lengths). Bridge edges carry mu = exp(-ell) (same clamp as fuzzy edges)
/// and are flagged.
FuzzyGraph bridge_components(const FuzzyGraph& graph, const DataTable& table);

/// All-pairs distances over the (bridged, per policy) graph.
///   geodesic: single-source shortest paths from every node, polished so the
///             triangle inequality holds exactly over the matrix.
///   minimax:  min over paths of the maximum edge, via the minimum spanning
///             tree (single-linkage merge height over ell weights).
/// With policy = fail a disconnected graph raises input_error naming the
/// components.
DistanceMatrix umap_distance_matrix(const FuzzyGraph& graph, MetricMode mode,
                                    DisconnectPolicy policy,
                                    const DataTable& table);

}  // namespace riemstats
