#include "riemstats/riemannian.hpp"

#include <cmath>
#include <limits>

#include "riemstats/errors.hpp"

namespace riemstats {

double rho_factor(double d_umap, double d_euclid) {
  return d_euclid != 0.0 ? d_umap / d_euclid : 1.0;
}

Eigen::VectorXd riemannian_subtract(const Eigen::VectorXd& x_a,
                                    const Eigen::VectorXd& x_b,
                                    double rho_ab) {
  if (x_a.size() != x_b.size()) {
    throw input_error("dimension mismatch in subtraction: " +
                      std::to_string(x_a.size()) + " vs " +
                      std::to_string(x_b.size()));
  }
  return rho_ab * (x_a - x_b);
}

FrechetMean frechet_mean(const DistanceMatrix& dist, const DataTable& table) {
  const Eigen::Index n = dist.size();
  FrechetMean mean;
  mean.objective = std::numeric_limits<double>::infinity();
  for (Eigen::Index candidate = 0; candidate < n; ++candidate) {
    double objective = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = dist(candidate, i);
      objective += d * d;
    }
    if (objective < mean.objective) {  // strict: ties keep the lowest index
      mean.objective = objective;
      mean.index = candidate;
    }
  }
  mean.g = table.values.row(mean.index);
  return mean;
}

RiemannianCovariance covariance_weighted(const Eigen::MatrixXd& values,
                                         const Eigen::VectorXd& center,
                                         const Eigen::VectorXd& rho,
                                         Eigen::Index mean_index) {
  const Eigen::Index n = values.rows();
  const Eigen::Index p = values.cols();

  RiemannianCovariance cov;
  cov.mean.index = mean_index;
  cov.mean.g = center;
  cov.rho = rho;
  cov.deviations.resize(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    cov.deviations.row(i) = rho[i] * (values.row(i) - center.transpose());
  }
  // Upper triangle mirrored so S is symmetric bit-exactly.
  cov.S.resize(p, p);
  for (Eigen::Index a = 0; a < p; ++a) {
    for (Eigen::Index b = a; b < p; ++b) {
      const double s = cov.deviations.col(a).dot(cov.deviations.col(b)) /
                       static_cast<double>(n);
      cov.S(a, b) = s;
      cov.S(b, a) = s;
    }
  }
  return cov;
}

RiemannianCovariance covariance(const DataTable& table, const FrechetMean& mean,
                                const DistanceMatrix& dist) {
  const Eigen::Index n = table.rows();
  Eigen::VectorXd rho(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d_euclid = row_distance(table.values, i, mean.index);
    rho[i] = rho_factor(dist(i, mean.index), d_euclid);
  }
  auto cov = covariance_weighted(table.values, mean.g, rho, mean.index);
  cov.mean = mean;
  return cov;
}

double riemannian_correlation(const RiemannianCovariance& cov, Eigen::Index i,
                              Eigen::Index j) {
  const double sii = cov.S(i, i);
  const double sjj = cov.S(j, j);
  if (sii <= 0.0 || sjj <= 0.0) {
    throw degenerate_variance_error(
        "variable " + std::to_string(sii <= 0.0 ? i : j) +
        " has zero variance; correlation undefined");
  }
  return cov.S(i, j) / std::sqrt(sii * sjj);
}

Eigen::MatrixXd riemannian_correlation_matrix(const RiemannianCovariance& cov) {
  const Eigen::Index p = cov.S.rows();
  Eigen::MatrixXd r(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      r(i, j) = riemannian_correlation(cov, i, j);
    }
  }
  return r;
}

namespace {

// Orthonormalizes {v1, v2} in order. A second projection pass keeps the
// pair orthogonal to machine precision even when v2 is nearly parallel to
// v1; without it the disk bound can leak. Returns the number of basis
// vectors produced (dependent or zero inputs shrink the basis).
int orthonormal_basis(Eigen::MatrixXd& basis,
                      std::vector<std::string>& warnings) {
  const double norm1 = basis.col(0).norm();
  if (norm1 == 0.0) {
    warnings.emplace_back(
        "first component deviations are identically zero; coordinates set "
        "to 0");
    return 0;
  }
  basis.col(0) /= norm1;

  const double norm2_raw = basis.col(1).norm();
  basis.col(1) -= basis.col(0).dot(basis.col(1)) * basis.col(0);
  if (norm2_raw == 0.0 || basis.col(1).norm() <= 1e-12 * norm2_raw) {
    warnings.emplace_back(
        "component deviations are linearly dependent; second coordinate set "
        "to 0");
    return 1;
  }
  basis.col(1) -= basis.col(0).dot(basis.col(1)) * basis.col(0);
  basis.col(1) /= basis.col(1).norm();
  return 2;
}

}  // namespace

CorrelationCircle correlation_circle_weighted(
    const Eigen::MatrixXd& values, const std::vector<std::string>& labels,
    const Eigen::MatrixXd& components, const Eigen::VectorXd& rho,
    const Eigen::VectorXd& table_center,
    const Eigen::VectorXd& component_center, bool orthogonalize) {
  const Eigen::Index n = values.rows();
  const Eigen::Index p = values.cols();

  CorrelationCircle circle;
  circle.orthogonalized = orthogonalize;
  circle.basis.resize(n, 2);
  for (int r = 0; r < 2; ++r) {
    circle.basis.col(r) =
        rho.array() * (components.col(r).array() - component_center[r]);
  }

  int basis_rank = 2;
  if (orthogonalize) {
    basis_rank = orthonormal_basis(circle.basis, circle.warnings);
  }

  for (Eigen::Index j = 0; j < p; ++j) {
    Eigen::VectorXd u =
        rho.array() * (values.col(j).array() - table_center[j]);
    const double norm_u = u.norm();
    if (norm_u == 0.0) {
      throw degenerate_variance_error(
          "variable \"" + labels[static_cast<std::size_t>(j)] +
          "\" has zero weighted deviation; circle coordinates undefined");
    }
    u /= norm_u;

    CircleVariable var;
    var.label = labels[static_cast<std::size_t>(j)];
    if (orthogonalize) {
      var.x = basis_rank > 0 ? u.dot(circle.basis.col(0)) : 0.0;
      var.y = basis_rank > 1 ? u.dot(circle.basis.col(1)) : 0.0;
    } else {
      for (int r = 0; r < 2; ++r) {
        const double norm_v = circle.basis.col(r).norm();
        double c = 0.0;
        if (norm_v == 0.0) {
          if (j == 0) {
            circle.warnings.emplace_back(
                "component " + std::to_string(r + 1) +
                " deviations are identically zero; coordinates set to 0");
          }
        } else {
          c = u.dot(circle.basis.col(r)) / norm_v;
        }
        (r == 0 ? var.x : var.y) = c;
      }
    }
    circle.variables.push_back(std::move(var));
  }
  return circle;
}

CorrelationCircle correlation_circle(const DataTable& table,
                                     const Embedding& embedding,
                                     const RiemannianCovariance& cov,
                                     bool orthogonalize) {
  if (embedding.coords.cols() < 2) {
    throw input_error("embedding must have at least 2 columns");
  }
  if (embedding.coords.rows() != table.rows()) {
    throw input_error("embedding and table row counts differ");
  }
  const Eigen::Index lambda = cov.mean.index;
  Eigen::VectorXd component_center(2);
  component_center << embedding.coords(lambda, 0), embedding.coords(lambda, 1);
  return correlation_circle_weighted(
      table.values, table.col_labels, embedding.coords.leftCols(2), cov.rho,
      cov.mean.g, component_center, orthogonalize);
}

Eigen::MatrixXd pearson_correlation_matrix(const DataTable& table,
                                           const Eigen::MatrixXd& extra_columns) {
  const Eigen::Index n = table.rows();
  const Eigen::Index p = table.cols();
  const Eigen::Index q = extra_columns.cols();
  if (q > 0 && extra_columns.rows() != n) {
    throw input_error("extra column row count differs from the table");
  }

  Eigen::MatrixXd columns(n, p + q);
  columns.leftCols(p) = table.values;
  if (q > 0) columns.rightCols(q) = extra_columns;

  Eigen::MatrixXd centered(n, p + q);
  Eigen::VectorXd scale(p + q);
  for (Eigen::Index j = 0; j < p + q; ++j) {
    const auto col = columns.col(j);
    if (col.maxCoeff() == col.minCoeff()) {
      const std::string name =
          j < p ? "\"" + table.col_labels[static_cast<std::size_t>(j)] + "\""
                : "component " + std::to_string(j - p + 1);
      throw degenerate_variance_error("constant column " + name +
                                      "; Pearson correlation undefined");
    }
    const double mean = col.sum() / static_cast<double>(n);
    centered.col(j) = col.array() - mean;
    scale[j] = centered.col(j).norm();
  }

  Eigen::MatrixXd corr(p + q, p + q);
  for (Eigen::Index i = 0; i < p + q; ++i) {
    for (Eigen::Index j = i; j < p + q; ++j) {
      const double c =
          centered.col(i).dot(centered.col(j)) / (scale[i] * scale[j]);
      corr(i, j) = c;
      corr(j, i) = c;
    }
  }
  return corr;
}

}  // namespace riemstats
