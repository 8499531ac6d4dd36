#include "riemstats/config.hpp"

#include "riemstats/errors.hpp"

namespace riemstats {

void validate_config(const PipelineConfig& config, Eigen::Index n) {
  if (config.k < 2 || config.k > n - 1) {
    throw input_error("k out of range: k=" + std::to_string(config.k) +
                      " must satisfy 2 <= k <= n-1 with n=" +
                      std::to_string(n));
  }
  if (config.min_dist < 0.0) {
    throw input_error("min_dist must be nonnegative");
  }
  if (config.n_epochs < 1) {
    throw input_error("n_epochs must be positive");
  }
  if (config.embedding_dim < 2) {
    throw input_error("embedding_dim must be at least 2");
  }
  if (config.embedding_dim > n - 1) {
    throw input_error("embedding_dim must be at most n-1");
  }
}

std::string to_string(MetricMode mode) {
  return mode == MetricMode::geodesic ? "geodesic" : "minimax";
}

std::string to_string(DisconnectPolicy policy) {
  return policy == DisconnectPolicy::euclidean_bridge ? "euclidean-bridge"
                                                      : "fail";
}

std::string to_string(StandardizeMode mode) {
  return mode == StandardizeMode::none ? "none" : "zscore";
}

MetricMode metric_mode_from_string(const std::string& s) {
  if (s == "geodesic") return MetricMode::geodesic;
  if (s == "minimax") return MetricMode::minimax;
  throw input_error("unknown metric mode: " + s);
}

DisconnectPolicy disconnect_policy_from_string(const std::string& s) {
  if (s == "euclidean-bridge") return DisconnectPolicy::euclidean_bridge;
  if (s == "fail") return DisconnectPolicy::fail;
  throw input_error("unknown disconnect policy: " + s);
}

StandardizeMode standardize_mode_from_string(const std::string& s) {
  if (s == "none") return StandardizeMode::none;
  if (s == "zscore") return StandardizeMode::zscore;
  throw input_error("unknown standardize mode: " + s);
}

}  // namespace riemstats
