#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace riemstats {

/// A simplex of dimension 0..2: strictly increasing vertex list plus the
/// smallest scale at which it appears in the filtration.
struct Simplex {
  std::vector<int> vertices;
  double birth = 0.0;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Simplices up to dimension 2, sorted by (dimension, vertices).
struct FilteredComplex {
  int n_points = 0;
  std::vector<Simplex> simplices;

  std::size_t count(int dimension) const;
  /// True iff every face of every simplex is present with birth no larger
  /// than the simplex's own.
  bool closure_holds() const;
};

struct BettiNumbers {
  int beta0 = 0;
  int beta1 = 0;
  int beta2 = 0;
};

struct NerveReport {
  int complex_components = 0;  // components of the complex 1-skeleton
  int union_components = 0;    // components of the ball union (grid oracle)
  int samples = 0;
  long long mismatch_pairs = 0;  // pairs classified differently by the views
};

/// Radius of the smallest ball enclosing three points (any ambient
/// dimension): half the longest side for obtuse/right triangles, the
/// circumradius otherwise.
double min_enclosing_ball_radius(const Eigen::VectorXd& p0,
                                 const Eigen::VectorXd& p1,
                                 const Eigen::VectorXd& p2);

/// Groups points i, j together iff they are joined by a chain of points
/// with consecutive Euclidean distances <= epsilon. Union-find over all
/// pairs; components sorted by smallest member.
std::vector<std::vector<int>> single_linkage_components(
    const Eigen::MatrixXd& points, double epsilon);

/// Balls-of-radius-epsilon complex: all vertices; an edge [u, v] iff
/// d(u, v) <= 2*epsilon; a triangle [u, v, w] iff the minimum enclosing
/// ball of the three points has radius <= epsilon. Faces are always born
/// no later than their cofaces, so closure holds by construction.
/// Requires epsilon > 0 and pairwise-distinct points.
FilteredComplex cech_complex(const Eigen::MatrixXd& points, double epsilon);

/// Betti numbers via boundary-operator ranks over GF(2):
///   beta0 = #vertices - rank(d1)
///   beta1 = (#edges - rank(d1)) - rank(d2)
///   beta2 = #triangles - rank(d2)     (no 3-simplices are stored)
/// Throws input_error if the closure property is violated.
BettiNumbers betti_numbers(const FilteredComplex& complex);

/// Monte-Carlo check that complex connectivity matches ball-union
/// connectivity for planar points: samples of the ball union must lie in
/// the same union component (grid flood fill) iff their nearest ball
/// centers share a complex component. Requires trials >= 1.
NerveReport nerve_consistency_check(const Eigen::MatrixXd& points,
                                    double epsilon, int trials,
                                    std::uint64_t seed);

}  // namespace riemstats
