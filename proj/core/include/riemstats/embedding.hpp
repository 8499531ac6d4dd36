#pragma once

#include <cstdint>
#include <limits>

#include <Eigen/Core>

#include "riemstats/local_metric.hpp"

namespace riemstats {

/// Low-dimensional similarity kernel Phi(d) = 1 / (1 + a * d^(2b)).
struct CurveParams {
  double a = 1.0;
  double b = 1.0;
};

struct Embedding {
  Eigen::MatrixXd coords;  // n x dim, all finite
  int epochs = 0;
  double cross_entropy_value = std::numeric_limits<double>::quiet_NaN();
};

/// Phi evaluated at squared distance d2.
double low_dim_similarity(double d2, const CurveParams& params);

/// Least-squares fit of (a, b) against the target curve (1 for
/// d <= min_dist, exp(-(d - min_dist)/spread) beyond) on a 300-point grid
/// over [0, 3*spread]. Deterministic Levenberg-Marquardt from (1, 1).
CurveParams fit_curve(double min_dist, double spread);

/// Coordinates from the `dim` nontrivial bottom eigenvectors of the
/// symmetric normalized Laplacian of the membership matrix, scaled to max
/// absolute coordinate 10. Falls back to seeded uniform noise in [-10, 10]
/// if the eigensolver does not converge.
Embedding spectral_init(const FuzzyGraph& graph, int dim, std::uint64_t seed);

/// Sequential stochastic gradient descent on the membership cross-entropy.
/// Per epoch every edge is updated with probability mu (attractive move on
/// both endpoints) plus 5 uniform negative samples per update (repulsive
/// move on the first endpoint). Learning rate decays linearly from 1,
/// per-coordinate moves are clipped to [-4, 4]. Pure function of
/// (init, graph, params, epochs, seed).
Embedding optimize_layout(const Embedding& init, const FuzzyGraph& graph,
                          const CurveParams& params, int epochs,
                          std::uint64_t seed);

/// Sum over edges of mu*ln(mu/nu) + (1-mu)*ln((1-mu)/(1-nu)) with
/// nu = Phi(distance) clamped to [1e-12, 1 - 1e-12].
double cross_entropy(const FuzzyGraph& graph, const Embedding& embedding,
                     const CurveParams& params);

/// Per-edge objective pieces and their exact analytic gradients with
/// respect to the head coordinates; `diff` is head - tail, d2 = |diff|^2.
/// Both require d2 > 0.
double attractive_energy(double d2, const CurveParams& params);   // -ln Phi
double repulsive_energy(double d2, const CurveParams& params);    // -ln(1-Phi)
Eigen::VectorXd attractive_gradient(const Eigen::VectorXd& diff,
                                    const CurveParams& params);
Eigen::VectorXd repulsive_gradient(const Eigen::VectorXd& diff,
                                   const CurveParams& params);

}  // namespace riemstats
