#include "riemstats/report.hpp"

#include <cmath>
#include <sstream>

#include "riemstats/json_writer.hpp"

namespace riemstats {

namespace {

JsonValue matrix_json(const Eigen::MatrixXd& m) {
  JsonValue rows = JsonValue::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    JsonValue row = JsonValue::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

JsonValue vector_json(const Eigen::VectorXd& v) {
  JsonValue items = JsonValue::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) items.push_back(v[i]);
  return items;
}

JsonValue labels_json(const std::vector<std::string>& labels) {
  JsonValue items = JsonValue::array();
  for (const auto& label : labels) items.push_back(label);
  return items;
}

JsonValue circle_variables_json(const std::vector<CircleVariable>& variables) {
  JsonValue items = JsonValue::array();
  for (const auto& var : variables) {
    JsonValue entry = JsonValue::object();
    entry.set("label", var.label);
    entry.set("x", var.x);
    entry.set("y", var.y);
    entry.set("norm", std::sqrt(var.squared_norm()));
    items.push_back(std::move(entry));
  }
  return items;
}

}  // namespace

PearsonBaseline pearson_baseline(const DataTable& table,
                                 const Embedding& embedding) {
  const Eigen::Index p = table.cols();
  const Eigen::MatrixXd corr =
      pearson_correlation_matrix(table, embedding.coords.leftCols(2));

  PearsonBaseline baseline;
  for (Eigen::Index j = 0; j < p; ++j) {
    CircleVariable var;
    var.label = table.col_labels[static_cast<std::size_t>(j)];
    var.x = corr(j, p);
    var.y = corr(j, p + 1);
    if (var.squared_norm() > 1.0) baseline.violations.push_back(var.label);
    baseline.variables.push_back(std::move(var));
  }
  return baseline;
}

std::string stats_report_json(const PipelineResult& result,
                              const std::string& input_path,
                              const std::optional<PearsonBaseline>& baseline) {
  const auto& config = result.config;

  JsonValue config_echo = JsonValue::object();
  config_echo.set("input", input_path);
  config_echo.set("k", config.k);
  config_echo.set("min_dist", config.min_dist);
  config_echo.set("epochs", config.n_epochs);
  config_echo.set("seed", config.seed);
  config_echo.set("metric_mode", to_string(config.metric_mode));
  config_echo.set("disconnect_policy", to_string(config.disconnect_policy));
  config_echo.set("standardize", to_string(config.standardize));
  config_echo.set("embedding_dim", config.embedding_dim);
  config_echo.set("baseline_pearson", baseline.has_value());

  JsonValue mean = JsonValue::object();
  mean.set("label",
           result.table.row_labels[static_cast<std::size_t>(result.mean.index)]);
  mean.set("index", static_cast<long long>(result.mean.index));
  mean.set("coordinates", vector_json(result.mean.g));
  mean.set("objective", result.mean.objective);

  JsonValue circle = JsonValue::object();
  circle.set("variables", circle_variables_json(result.circle.variables));
  circle.set("orthogonalized", result.circle.orthogonalized);
  circle.set("warnings", labels_json(result.circle.warnings));

  JsonValue embedding = JsonValue::object();
  embedding.set("rows", labels_json(result.table.row_labels));
  embedding.set("coordinates", matrix_json(result.embedding.coords));
  embedding.set("epochs", result.embedding.epochs);
  embedding.set("cross_entropy", result.embedding.cross_entropy_value);

  JsonValue root = JsonValue::object();
  root.set("config", std::move(config_echo));
  root.set("mean", std::move(mean));
  root.set("rho", vector_json(result.covariance.rho));
  root.set("S", matrix_json(result.covariance.S));
  root.set("R", matrix_json(result.correlation));
  root.set("circle", std::move(circle));
  root.set("embedding", std::move(embedding));

  JsonValue violations = JsonValue::array();
  if (baseline) {
    JsonValue base = JsonValue::object();
    base.set("variables", circle_variables_json(baseline->variables));
    base.set("violations", labels_json(baseline->violations));
    root.set("baseline_pearson", std::move(base));
    violations = labels_json(baseline->violations);
  }
  root.set("violations", std::move(violations));
  return root.dump();
}

std::string knn_report_json(const DataTable& table,
                            const NeighborLists& neighbors) {
  JsonValue rows = JsonValue::array();
  for (Eigen::Index i = 0; i < neighbors.size(); ++i) {
    JsonValue row = JsonValue::object();
    row.set("label", table.row_labels[static_cast<std::size_t>(i)]);
    JsonValue list = JsonValue::array();
    for (const auto& nb : neighbors.lists[static_cast<std::size_t>(i)]) {
      JsonValue entry = JsonValue::object();
      entry.set("index", static_cast<long long>(nb.index));
      entry.set("label", table.row_labels[static_cast<std::size_t>(nb.index)]);
      entry.set("distance", nb.distance);
      list.push_back(std::move(entry));
    }
    row.set("neighbors", std::move(list));
    rows.push_back(std::move(row));
  }
  JsonValue root = JsonValue::object();
  root.set("k", neighbors.k);
  root.set("rows", std::move(rows));
  return root.dump();
}

std::string graph_report_json(const PipelineResult& result) {
  JsonValue scales = JsonValue::object();
  scales.set("rho", vector_json(result.scales.rho));
  scales.set("sigma", vector_json(result.scales.sigma));
  JsonValue clamped = JsonValue::array();
  for (bool c : result.scales.clamped) clamped.push_back(c);
  scales.set("clamped", std::move(clamped));

  JsonValue directed = JsonValue::array();
  for (const auto& out_edges : result.graph.directed) {
    JsonValue row = JsonValue::array();
    for (const auto& [target, w] : out_edges) {
      JsonValue entry = JsonValue::object();
      entry.set("target", static_cast<long long>(target));
      entry.set("w", w);
      row.push_back(std::move(entry));
    }
    directed.push_back(std::move(row));
  }

  JsonValue edges = JsonValue::array();
  for (const auto& e : result.graph.edges) {
    JsonValue entry = JsonValue::object();
    entry.set("i", static_cast<long long>(e.i));
    entry.set("j", static_cast<long long>(e.j));
    entry.set("mu", e.mu);
    entry.set("ell", e.ell);
    entry.set("bridge", e.bridge);
    edges.push_back(std::move(entry));
  }

  JsonValue distance = JsonValue::object();
  distance.set("mode", to_string(result.distances.mode));
  distance.set("values", matrix_json(result.distances.values));

  JsonValue root = JsonValue::object();
  root.set("scales", std::move(scales));
  root.set("directed", std::move(directed));
  root.set("edges", std::move(edges));
  root.set("bridges_added", static_cast<long long>(result.bridges_added));
  root.set("distance_matrix", std::move(distance));
  return root.dump();
}

std::string embedding_csv(const DataTable& table, const Embedding& embedding) {
  std::vector<std::string> col_labels;
  for (Eigen::Index c = 0; c < embedding.coords.cols(); ++c) {
    col_labels.push_back("C" + std::to_string(c + 1));
  }
  const DataTable out{embedding.coords, table.row_labels, col_labels};
  return emit_csv(out);
}

std::string topology_report_json(const std::vector<TopologySummary>& sweeps,
                                 Eigen::Index n_points) {
  JsonValue results = JsonValue::array();
  for (const auto& s : sweeps) {
    JsonValue entry = JsonValue::object();
    entry.set("epsilon", s.epsilon);
    entry.set("vertices", static_cast<long long>(s.vertices));
    entry.set("edges", static_cast<long long>(s.edges));
    entry.set("triangles", static_cast<long long>(s.triangles));
    entry.set("beta0", s.beta0);
    entry.set("beta1", s.beta1);
    entry.set("beta2", s.beta2);
    results.push_back(std::move(entry));
  }
  JsonValue root = JsonValue::object();
  root.set("points", static_cast<long long>(n_points));
  root.set("results", std::move(results));
  return root.dump();
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// One panel: unit circle, axes, labeled arrows. Returns SVG fragment.
std::string circle_panel(const std::vector<CircleVariable>& variables,
                         const std::string& title, double offset_x) {
  constexpr double kRadius = 140.0;
  constexpr double kCenter = 200.0;
  std::ostringstream svg;
  const double cx = kCenter + offset_x;
  const double cy = kCenter;
  svg << "  <g>\n";
  svg << "    <text x=\"" << cx << "\" y=\"28\" text-anchor=\"middle\" "
         "font-size=\"16\" font-family=\"sans-serif\">"
      << title << "</text>\n";
  // Axes through the origin, labeled C1/C2.
  svg << "    <line x1=\"" << cx - kRadius * 1.25 << "\" y1=\"" << cy
      << "\" x2=\"" << cx + kRadius * 1.25 << "\" y2=\"" << cy
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  svg << "    <line x1=\"" << cx << "\" y1=\"" << cy - kRadius * 1.25
      << "\" x2=\"" << cx << "\" y2=\"" << cy + kRadius * 1.25
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  svg << "    <text x=\"" << cx + kRadius * 1.25 + 6 << "\" y=\"" << cy + 4
      << "\" font-size=\"12\" font-family=\"sans-serif\">C1</text>\n";
  svg << "    <text x=\"" << cx - 8 << "\" y=\"" << cy - kRadius * 1.25 - 6
      << "\" font-size=\"12\" font-family=\"sans-serif\">C2</text>\n";
  // The unit circle: radius kRadius pixels == 1 data unit.
  svg << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kRadius
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  for (const auto& var : variables) {
    const double tip_x = cx + var.x * kRadius;
    const double tip_y = cy - var.y * kRadius;  // SVG y grows downward
    svg << "    <line class=\"arrow\" x1=\"" << cx << "\" y1=\"" << cy
        << "\" x2=\"" << tip_x << "\" y2=\"" << tip_y
        << "\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" "
           "marker-end=\"url(#tip)\"/>\n";
    svg << "    <text x=\"" << tip_x + (var.x >= 0 ? 5 : -5) << "\" y=\""
        << tip_y + (var.y >= 0 ? -5 : 12) << "\" text-anchor=\""
        << (var.x >= 0 ? "start" : "end")
        << "\" font-size=\"12\" font-family=\"sans-serif\">"
        << xml_escape(var.label) << "</text>\n";
  }
  svg << "  </g>\n";
  return svg.str();
}

}  // namespace

std::string circle_svg(const CorrelationCircle& circle,
                       const std::optional<PearsonBaseline>& baseline) {
  const int panels = baseline ? 2 : 1;
  const int width = 400 * panels;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"400\" viewBox=\"0 0 " << width << " 400\">\n";
  svg << "  <defs>\n"
         "    <marker id=\"tip\" markerWidth=\"8\" markerHeight=\"8\" "
         "refX=\"6\" refY=\"3\" orient=\"auto\">\n"
         "      <path d=\"M0,0 L6,3 L0,6 z\" fill=\"#1f5fbf\"/>\n"
         "    </marker>\n"
         "  </defs>\n";
  if (baseline) {
    svg << circle_panel(baseline->variables, "Pearson correlation", 0.0);
    svg << circle_panel(circle.variables, "Riemannian correlation", 400.0);
  } else {
    svg << circle_panel(circle.variables, "Riemannian correlation", 0.0);
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace riemstats
