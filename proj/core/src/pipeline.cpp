#include "riemstats/pipeline.hpp"

namespace riemstats {

PipelineResult run_pipeline(const DataTable& raw, const PipelineConfig& config) {
  validate_config(config, raw.rows());

  PipelineResult result;
  result.config = config;
  result.table = standardize(raw, config.standardize);
  result.neighbors = exact_knn(result.table, config.k);
  result.scales = compute_local_scales(result.neighbors, config.k);

  FuzzyGraph raw_graph = fuzzy_memberships(result.neighbors, result.scales);
  if (config.disconnect_policy == DisconnectPolicy::euclidean_bridge) {
    result.graph = bridge_components(raw_graph, result.table);
    result.bridges_added = result.graph.edges.size() - raw_graph.edges.size();
  } else {
    result.graph = std::move(raw_graph);
    result.bridges_added = 0;
  }
  result.distances =
      umap_distance_matrix(result.graph, config.metric_mode,
                           config.disconnect_policy, result.table);

  result.curve = fit_curve(config.min_dist, 1.0);
  const Embedding init =
      spectral_init(result.graph, config.embedding_dim, config.seed);
  result.embedding = optimize_layout(init, result.graph, result.curve,
                                     config.n_epochs, config.seed);

  result.mean = frechet_mean(result.distances, result.table);
  result.covariance = covariance(result.table, result.mean, result.distances);
  result.correlation = riemannian_correlation_matrix(result.covariance);
  result.circle = correlation_circle(result.table, result.embedding,
                                     result.covariance, /*orthogonalize=*/true);
  return result;
}

}  // namespace riemstats
