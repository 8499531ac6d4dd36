#include "riemstats/embedding.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "riemstats/errors.hpp"
#include "riemstats/rng.hpp"

namespace riemstats {

namespace {

constexpr int kNegativeSamples = 5;
constexpr double kGradientClip = 4.0;

double clip(double v) {
  return std::clamp(v, -kGradientClip, kGradientClip);
}

// Target similarity: 1 inside min_dist, exponential decay beyond.
double target_curve(double d, double min_dist, double spread) {
  return d <= min_dist ? 1.0 : std::exp(-(d - min_dist) / spread);
}

}  // namespace

double low_dim_similarity(double d2, const CurveParams& params) {
  return 1.0 / (1.0 + params.a * std::pow(d2, params.b));
}

CurveParams fit_curve(double min_dist, double spread) {
  if (min_dist < 0.0) throw input_error("min_dist must be nonnegative");
  if (spread <= 0.0) throw input_error("spread must be positive");

  constexpr int kGrid = 300;
  Eigen::VectorXd d(kGrid), y(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    d[i] = 3.0 * spread * static_cast<double>(i) / (kGrid - 1);
    y[i] = target_curve(d[i], min_dist, spread);
  }

  // Levenberg-Marquardt on (a, b) from (1, 1). The model is smooth in both
  // parameters and the problem is tiny, so a fixed iteration budget with
  // multiplicative damping converges well past the tolerance we need.
  double a = 1.0, b = 1.0;
  double lambda = 1e-3;
  auto sse = [&](double pa, double pb) {
    double s = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      const double t = d[i] * d[i];
      const double phi = 1.0 / (1.0 + pa * std::pow(t, pb));
      s += (phi - y[i]) * (phi - y[i]);
    }
    return s;
  };
  double current = sse(a, b);
  for (int iter = 0; iter < 200; ++iter) {
    double jtj00 = 0, jtj01 = 0, jtj11 = 0, jtr0 = 0, jtr1 = 0;
    for (int i = 0; i < kGrid; ++i) {
      const double t = d[i] * d[i];
      const double tb = std::pow(t, b);
      const double denom = 1.0 + a * tb;
      const double phi = 1.0 / denom;
      const double r = phi - y[i];
      const double da = -tb / (denom * denom);
      const double db = t > 0.0 ? -a * tb * std::log(t) / (denom * denom) : 0.0;
      jtj00 += da * da;
      jtj01 += da * db;
      jtj11 += db * db;
      jtr0 += da * r;
      jtr1 += db * r;
    }
    const double m00 = jtj00 + lambda * jtj00;
    const double m11 = jtj11 + lambda * jtj11;
    const double det = m00 * m11 - jtj01 * jtj01;
    if (det == 0.0) break;
    const double step_a = (-jtr0 * m11 + jtr1 * jtj01) / det;
    const double step_b = (-jtr1 * m00 + jtr0 * jtj01) / det;
    const double na = std::max(a + step_a, 1e-8);
    const double nb = std::max(b + step_b, 1e-8);
    const double next = sse(na, nb);
    if (next < current) {
      a = na;
      b = nb;
      current = next;
      lambda = std::max(lambda * 0.5, 1e-12);
      if (std::abs(step_a) < 1e-12 && std::abs(step_b) < 1e-12) break;
    } else {
      lambda *= 10.0;
      if (lambda > 1e12) break;
    }
  }
  return CurveParams{a, b};
}

Embedding spectral_init(const FuzzyGraph& graph, int dim, std::uint64_t seed) {
  const Eigen::Index n = graph.n;

  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : graph.edges) {
    weights(e.i, e.j) = e.mu;
    weights(e.j, e.i) = e.mu;
  }
  Eigen::VectorXd degree = weights.rowwise().sum();

  Embedding init;
  init.epochs = 0;

  bool ok = degree.minCoeff() > 0.0;
  if (ok) {
    const Eigen::VectorXd inv_sqrt = degree.array().rsqrt();
    Eigen::MatrixXd laplacian =
        Eigen::MatrixXd::Identity(n, n) -
        (inv_sqrt.asDiagonal() * weights * inv_sqrt.asDiagonal());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
    if (solver.info() == Eigen::Success) {
      // Columns 1..dim: the bottom nontrivial eigenvectors.
      init.coords = solver.eigenvectors().block(0, 1, n, dim);
      // Canonical sign: largest-magnitude entry positive per column.
      for (int c = 0; c < dim; ++c) {
        Eigen::Index arg = 0;
        init.coords.col(c).cwiseAbs().maxCoeff(&arg);
        if (init.coords(arg, c) < 0.0) init.coords.col(c) = -init.coords.col(c);
      }
      const double scale = init.coords.cwiseAbs().maxCoeff();
      if (scale > 0.0) init.coords *= 10.0 / scale;
    } else {
      ok = false;
    }
  }
  if (!ok) {
    Rng rng(seed);
    init.coords.resize(n, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (int c = 0; c < dim; ++c) {
        init.coords(i, c) = rng.uniform(-10.0, 10.0);
      }
    }
  }
  return init;
}

Embedding optimize_layout(const Embedding& init, const FuzzyGraph& graph,
                          const CurveParams& params, int epochs,
                          std::uint64_t seed) {
  if (epochs < 1) throw input_error("epochs must be at least 1");
  const Eigen::Index n = graph.n;
  const auto dim = init.coords.cols();
  const double a = params.a;
  const double b = params.b;

  Embedding out;
  out.coords = init.coords;
  out.epochs = epochs;
  Rng rng(seed);

  // Edges are visited in their stored (sorted) order; together with the
  // single RNG stream this makes the layout a pure function of the seed.
  for (int epoch = 0; epoch < epochs; ++epoch) {
    const double alpha =
        1.0 - static_cast<double>(epoch) / static_cast<double>(epochs);
    for (const auto& edge : graph.edges) {
      if (rng.uniform() >= edge.mu) continue;

      const Eigen::Index i = edge.i;
      const Eigen::Index j = edge.j;
      double d2 = (out.coords.row(i) - out.coords.row(j)).squaredNorm();
      if (d2 > 0.0) {
        const double coeff =
            -2.0 * a * b * std::pow(d2, b - 1.0) / (1.0 + a * std::pow(d2, b));
        for (Eigen::Index c = 0; c < dim; ++c) {
          const double move =
              clip(coeff * (out.coords(i, c) - out.coords(j, c))) * alpha;
          out.coords(i, c) += move;
          out.coords(j, c) -= move;
        }
      }
      for (int s = 0; s < kNegativeSamples; ++s) {
        const auto other = static_cast<Eigen::Index>(
            rng.uniform_below(static_cast<std::uint64_t>(n)));
        if (other == i) continue;
        d2 = (out.coords.row(i) - out.coords.row(other)).squaredNorm();
        if (d2 > 0.0) {
          const double coeff = 2.0 * b / (d2 * (1.0 + a * std::pow(d2, b)));
          for (Eigen::Index c = 0; c < dim; ++c) {
            out.coords(i, c) +=
                clip(coeff * (out.coords(i, c) - out.coords(other, c))) *
                alpha;
          }
        } else {
          // Coincident distinct points: push by the clip bound.
          for (Eigen::Index c = 0; c < dim; ++c) {
            out.coords(i, c) += kGradientClip * alpha;
          }
        }
      }
    }
  }
  out.cross_entropy_value = cross_entropy(graph, out, params);
  return out;
}

double cross_entropy(const FuzzyGraph& graph, const Embedding& embedding,
                     const CurveParams& params) {
  double total = 0.0;
  for (const auto& edge : graph.edges) {
    const double d2 =
        (embedding.coords.row(edge.i) - embedding.coords.row(edge.j))
            .squaredNorm();
    const double nu =
        std::clamp(low_dim_similarity(d2, params), 1e-12, 1.0 - 1e-12);
    const double mu = edge.mu;
    total += mu * std::log(mu / nu);
    if (mu < 1.0) {
      total += (1.0 - mu) * std::log((1.0 - mu) / (1.0 - nu));
    }
  }
  return total;
}

double attractive_energy(double d2, const CurveParams& params) {
  return std::log1p(params.a * std::pow(d2, params.b));
}

double repulsive_energy(double d2, const CurveParams& params) {
  const double atb = params.a * std::pow(d2, params.b);
  return std::log1p(atb) - std::log(atb);
}

Eigen::VectorXd attractive_gradient(const Eigen::VectorXd& diff,
                                    const CurveParams& params) {
  const double d2 = diff.squaredNorm();
  const double coeff = 2.0 * params.a * params.b * std::pow(d2, params.b - 1.0) /
                       (1.0 + params.a * std::pow(d2, params.b));
  return coeff * diff;
}

Eigen::VectorXd repulsive_gradient(const Eigen::VectorXd& diff,
                                   const CurveParams& params) {
  const double d2 = diff.squaredNorm();
  const double coeff =
      -2.0 * params.b / (d2 * (1.0 + params.a * std::pow(d2, params.b)));
  return coeff * diff;
}

}  // namespace riemstats
