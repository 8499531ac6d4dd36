#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riemstats/pipeline.hpp"

namespace riemstats {

/// Pearson baseline companion to the circle: classical correlations of each
/// variable against the two component axes, plus the variables whose tips
/// leave the unit disk.
struct PearsonBaseline {
  std::vector<CircleVariable> variables;
  std::vector<std::string> violations;  // labels with x^2 + y^2 > 1
};

PearsonBaseline pearson_baseline(const DataTable& table,
                                 const Embedding& embedding);

/// Full run report: config echo (every effective parameter including
/// defaults and seed), mean summary, S, R, circle, embedding, and the
/// baseline diagnostics when requested.
std::string stats_report_json(const PipelineResult& result,
                              const std::string& input_path,
                              const std::optional<PearsonBaseline>& baseline);

/// Neighbor lists as JSON (`knn` subcommand).
std::string knn_report_json(const DataTable& table,
                            const NeighborLists& neighbors);

/// Scales, directed and symmetrized memberships, and the distance matrix
/// (`graph` subcommand).
std::string graph_report_json(const PipelineResult& result);

/// Embedding coordinates as CSV with row labels (`embed` subcommand).
std::string embedding_csv(const DataTable& table, const Embedding& embedding);

struct TopologySummary {
  double epsilon = 0.0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  int beta0 = 0;
  int beta1 = 0;
  int beta2 = 0;
};

std::string topology_report_json(const std::vector<TopologySummary>& sweeps,
                                 Eigen::Index n_points);

/// Correlation-circle SVG: a unit circle, one labeled arrow per variable,
/// axes labeled C1/C2. With a baseline a second panel shows the Pearson
/// coordinates (whose arrows may leave the disk).
std::string circle_svg(const CorrelationCircle& circle,
                       const std::optional<PearsonBaseline>& baseline);

}  // namespace riemstats
