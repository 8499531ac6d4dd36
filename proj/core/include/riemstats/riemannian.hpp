#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "riemstats/embedding.hpp"
#include "riemstats/local_metric.hpp"
#include "riemstats/table.hpp"

namespace riemstats {

/// The data row minimizing the sum of squared graph distances to all rows
/// (ties broken by lowest index).
struct FrechetMean {
  Eigen::Index index = 0;     // row index of the minimizer
  Eigen::VectorXd g;          // that row's coordinates
  double objective = 0.0;     // attained sum of squared distances
};

/// rho-weighted deviations about the mean and the variance-covariance
/// matrix S = (1/n) * sum_i dev_i dev_i^T. S is symmetric positive
/// semidefinite by construction; the row of the mean deviates by zero.
struct RiemannianCovariance {
  FrechetMean mean;
  Eigen::VectorXd rho;         // n factors rho_ig
  Eigen::MatrixXd deviations;  // n x p, row i = rho_ig * (x_i - g)
  Eigen::MatrixXd S;           // p x p
};

struct CircleVariable {
  std::string label;
  double x = 0.0;
  double y = 0.0;

  double squared_norm() const { return x * x + y * y; }
};

/// Per-variable coordinates against two component axes. With
/// orthogonalized = true every variable satisfies x^2 + y^2 <= 1 (+1e-12).
struct CorrelationCircle {
  std::vector<CircleVariable> variables;
  Eigen::MatrixXd basis;  // n x 2 component deviation basis actually used
  bool orthogonalized = false;
  std::vector<std::string> warnings;
};

/// Ratio of graph distance to Euclidean distance; 1 when the Euclidean
/// distance vanishes.
double rho_factor(double d_umap, double d_euclid);

/// rho_ab * (x_a - x_b), componentwise. Throws input_error on dimension
/// mismatch.
Eigen::VectorXd riemannian_subtract(const Eigen::VectorXd& x_a,
                                    const Eigen::VectorXd& x_b, double rho_ab);

/// Argmin over the n rows of sum_i d(., x_i)^2 under the given distance
/// matrix; deterministic tie-break by lowest row index.
FrechetMean frechet_mean(const DistanceMatrix& dist, const DataTable& table);

/// Low-level form with explicit center and rho weights; `mean_index` < 0
/// means the center is not a data row. Used by covariance() and by the
/// classical-covariance reduction (rho = 1, center = column means).
RiemannianCovariance covariance_weighted(const Eigen::MatrixXd& values,
                                         const Eigen::VectorXd& center,
                                         const Eigen::VectorXd& rho,
                                         Eigen::Index mean_index);

/// rho_ig = rho_factor(d_graph(x_i, g), d_euclid(x_i, g)), then
/// S = (1/n) sum_i (x_i [-] g)(x_i [-] g)^T with the rho-weighted
/// subtraction.
RiemannianCovariance covariance(const DataTable& table, const FrechetMean& mean,
                                const DistanceMatrix& dist);

/// S_ij / sqrt(S_ii * S_jj). Zero-variance variables raise
/// degenerate_variance_error rather than producing NaN.
double riemannian_correlation(const RiemannianCovariance& cov, Eigen::Index i,
                              Eigen::Index j);

/// Full p x p matrix of pairwise correlations.
Eigen::MatrixXd riemannian_correlation_matrix(const RiemannianCovariance& cov);

/// General weighted circle: variable deviation vectors u_j from the table
/// columns about `table_center`, component deviation vectors v_r from the
/// component columns about `component_center`, all weighted by `rho`.
/// With orthogonalize = true, {v_1, v_2} is replaced by an orthonormal pair
/// (v_1 first) and c_jr = <u_j/|u_j|, v_r>, which keeps every variable
/// inside the unit disk. With orthogonalize = false, c_jr is the plain
/// cosine <u_j, v_r>/(|u_j||v_r|) with no disk guarantee.
CorrelationCircle correlation_circle_weighted(
    const Eigen::MatrixXd& values, const std::vector<std::string>& labels,
    const Eigen::MatrixXd& components, const Eigen::VectorXd& rho,
    const Eigen::VectorXd& table_center, const Eigen::VectorXd& component_center,
    bool orthogonalize);

/// Circle of the table's variables against the first two embedding axes,
/// centered at the mean row and its embedded position, weighted by cov.rho.
CorrelationCircle correlation_circle(const DataTable& table,
                                     const Embedding& embedding,
                                     const RiemannianCovariance& cov,
                                     bool orthogonalize);

/// Classical Pearson correlations over the table's columns augmented with
/// `extra_columns` (may have zero columns). Throws
/// degenerate_variance_error on a constant column.
Eigen::MatrixXd pearson_correlation_matrix(const DataTable& table,
                                           const Eigen::MatrixXd& extra_columns);

}  // namespace riemstats
