#pragma once

#include <cstddef>

#include "riemstats/config.hpp"
#include "riemstats/embedding.hpp"
#include "riemstats/local_metric.hpp"
#include "riemstats/neighbors.hpp"
#include "riemstats/riemannian.hpp"
#include "riemstats/table.hpp"

namespace riemstats {

/// Everything one run produces, kept so callers can serialize any stage.
struct PipelineResult {
  PipelineConfig config;
  DataTable table;  // after standardization
  NeighborLists neighbors;
  LocalScales scales;
  FuzzyGraph graph;  // bridged when the policy allows it
  std::size_t bridges_added = 0;
  DistanceMatrix distances;
  CurveParams curve;
  Embedding embedding;
  FrechetMean mean;
  RiemannianCovariance covariance;
  Eigen::MatrixXd correlation;  // p x p
  CorrelationCircle circle;     // orthogonalized
};

/// load -> standardize -> knn -> scales -> memberships -> bridge ->
/// distances -> curve fit -> spectral init -> layout -> mean ->
/// covariance -> correlation -> circle. Deterministic for fixed inputs.
PipelineResult run_pipeline(const DataTable& raw, const PipelineConfig& config);

}  // namespace riemstats
