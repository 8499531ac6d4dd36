#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace riemstats {

/// How all-pairs distances are derived from the weighted neighborhood graph.
enum class MetricMode {
  geodesic,  // shortest-path length over edge distances
  minimax,   // min over paths of the maximum edge (single-linkage merge height)
};

/// What to do when the neighborhood graph has more than one component.
enum class DisconnectPolicy {
  euclidean_bridge,  // connect components with scaled Euclidean edges
  fail,              // raise an error naming the components
};

enum class StandardizeMode {
  none,
  zscore,  // per column: mean 0, population standard deviation 1
};

struct PipelineConfig {
  int k = 3;
  double min_dist = 0.1;
  int n_epochs = 200;
  std::uint64_t seed = 42;
  MetricMode metric_mode = MetricMode::geodesic;
  DisconnectPolicy disconnect_policy = DisconnectPolicy::euclidean_bridge;
  StandardizeMode standardize = StandardizeMode::none;
  int embedding_dim = 2;
};

/// Checks the config against a table with n rows. Throws input_error on
/// violation (k out of [2, n-1], min_dist < 0, n_epochs < 1, ...).
void validate_config(const PipelineConfig& config, Eigen::Index n);

std::string to_string(MetricMode mode);
std::string to_string(DisconnectPolicy policy);
std::string to_string(StandardizeMode mode);

MetricMode metric_mode_from_string(const std::string& s);
DisconnectPolicy disconnect_policy_from_string(const std::string& s);
StandardizeMode standardize_mode_from_string(const std::string& s);

}  // namespace riemstats
