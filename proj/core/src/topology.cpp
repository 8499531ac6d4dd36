#include "riemstats/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "riemstats/errors.hpp"
#include "riemstats/rng.hpp"

namespace riemstats {

namespace {

struct IntUnionFind {
  std::vector<int> parent;

  explicit IntUnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

// Rank of a GF(2) matrix given as bitset columns (one uint64 block row
// group per 64 rows).
int gf2_rank(std::vector<std::vector<std::uint64_t>> columns) {
  if (columns.empty()) return 0;
  const std::size_t blocks = columns[0].size();
  int rank = 0;
  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < blocks * 64 && pivot_col < columns.size();
       ++row) {
    const std::size_t block = row / 64;
    const std::uint64_t mask = std::uint64_t{1} << (row % 64);
    std::size_t pivot = pivot_col;
    while (pivot < columns.size() && !(columns[pivot][block] & mask)) ++pivot;
    if (pivot == columns.size()) continue;
    std::swap(columns[pivot_col], columns[pivot]);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c != pivot_col && (columns[c][block] & mask)) {
        for (std::size_t bl = 0; bl < blocks; ++bl) {
          columns[c][bl] ^= columns[pivot_col][bl];
        }
      }
    }
    ++rank;
    ++pivot_col;
  }
  return rank;
}

}  // namespace

std::size_t FilteredComplex::count(int dimension) const {
  std::size_t c = 0;
  for (const auto& s : simplices) {
    if (s.dimension() == dimension) ++c;
  }
  return c;
}

bool FilteredComplex::closure_holds() const {
  std::map<std::vector<int>, double> birth;
  for (const auto& s : simplices) birth[s.vertices] = s.birth;
  for (const auto& s : simplices) {
    if (s.dimension() == 0) continue;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<int> face = s.vertices;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      const auto it = birth.find(face);
      if (it == birth.end() || it->second > s.birth) return false;
    }
  }
  return true;
}

double min_enclosing_ball_radius(const Eigen::VectorXd& p0,
                                 const Eigen::VectorXd& p1,
                                 const Eigen::VectorXd& p2) {
  double a = (p1 - p2).norm();
  double b = (p0 - p2).norm();
  double c = (p0 - p1).norm();
  // Sort so a >= b >= c.
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  // Right or obtuse: the longest side is a diameter. Collinear triples
  // always land here (a >= b + c implies a^2 >= b^2 + c^2).
  if (a * a >= b * b + c * c) return a / 2.0;
  // Acute: circumradius via Kahan's numerically stable Heron form.
  const double area =
      0.25 * std::sqrt((a + (b + c)) * (c - (a - b)) * (c + (a - b)) *
                       (a + (b - c)));
  return a * b * c / (4.0 * area);
}

std::vector<std::vector<int>> single_linkage_components(
    const Eigen::MatrixXd& points, double epsilon) {
  if (epsilon < 0.0) throw input_error("epsilon must be nonnegative");
  const int n = static_cast<int>(points.rows());
  IntUnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((points.row(i) - points.row(j)).norm() <= epsilon) uf.unite(i, j);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> components;
  components.reserve(groups.size());
  for (auto& [root, members] : groups) components.push_back(std::move(members));
  return components;
}

FilteredComplex cech_complex(const Eigen::MatrixXd& points, double epsilon) {
  if (epsilon <= 0.0) throw input_error("epsilon must be positive");
  const int n = static_cast<int>(points.rows());

  FilteredComplex complex;
  complex.n_points = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((points.row(i) - points.row(j)).norm() == 0.0) {
        throw input_error("points " + std::to_string(i) + " and " +
                          std::to_string(j) + " coincide");
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    complex.simplices.push_back({{i}, 0.0});
  }
  // Edge [u, v] iff the two epsilon-balls intersect: d <= 2*epsilon.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = (points.row(i) - points.row(j)).norm();
      if (d <= 2.0 * epsilon) complex.simplices.push_back({{i, j}, d / 2.0});
    }
  }
  // Triangle [u, v, w] iff the three balls share a point, i.e. the minimum
  // enclosing ball of the vertices has radius <= epsilon.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const double r = min_enclosing_ball_radius(
            points.row(i).transpose(), points.row(j).transpose(),
            points.row(k).transpose());
        if (r <= epsilon) complex.simplices.push_back({{i, j, k}, r});
      }
    }
  }
  return complex;
}

BettiNumbers betti_numbers(const FilteredComplex& complex) {
  if (!complex.closure_holds()) {
    throw input_error("closure violation: a simplex is missing a face");
  }

  std::vector<std::vector<int>> edges;
  std::vector<std::vector<int>> triangles;
  std::set<int> vertex_set;
  for (const auto& s : complex.simplices) {
    switch (s.dimension()) {
      case 0: vertex_set.insert(s.vertices[0]); break;
      case 1: edges.push_back(s.vertices); break;
      case 2: triangles.push_back(s.vertices); break;
      default: throw input_error("simplex of unsupported dimension");
    }
  }
  std::vector<int> vertices(vertex_set.begin(), vertex_set.end());
  std::map<int, std::size_t> vertex_slot;
  for (std::size_t i = 0; i < vertices.size(); ++i) vertex_slot[vertices[i]] = i;
  std::map<std::vector<int>, std::size_t> edge_slot;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_slot[edges[i]] = i;

  const std::size_t vertex_blocks = (vertices.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> d1;
  d1.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<std::uint64_t> col(vertex_blocks, 0);
    for (int v : e) {
      const std::size_t slot = vertex_slot.at(v);
      col[slot / 64] |= std::uint64_t{1} << (slot % 64);
    }
    d1.push_back(std::move(col));
  }

  const std::size_t edge_blocks = (edges.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> d2;
  d2.reserve(triangles.size());
  for (const auto& t : triangles) {
    std::vector<std::uint64_t> col(std::max<std::size_t>(edge_blocks, 1), 0);
    for (std::size_t drop = 0; drop < 3; ++drop) {
      std::vector<int> face = t;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      const std::size_t slot = edge_slot.at(face);
      col[slot / 64] |= std::uint64_t{1} << (slot % 64);
    }
    d2.push_back(std::move(col));
  }

  const int rank1 = gf2_rank(std::move(d1));
  const int rank2 = gf2_rank(std::move(d2));

  BettiNumbers betti;
  betti.beta0 = static_cast<int>(vertices.size()) - rank1;
  betti.beta1 = (static_cast<int>(edges.size()) - rank1) - rank2;
  betti.beta2 = static_cast<int>(triangles.size()) - rank2;
  return betti;
}

NerveReport nerve_consistency_check(const Eigen::MatrixXd& points,
                                    double epsilon, int trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw input_error("trials must be at least 1");
  if (points.cols() != 2) throw input_error("points must be planar (2 columns)");
  const int n = static_cast<int>(points.rows());

  // Complex-side components from the 1-skeleton.
  const FilteredComplex complex = cech_complex(points, epsilon);
  IntUnionFind complex_uf(n);
  for (const auto& s : complex.simplices) {
    if (s.dimension() == 1) complex_uf.unite(s.vertices[0], s.vertices[1]);
  }

  // Union-side components: flood fill over a fine grid of the bounding
  // box; a cell belongs to the union iff its center is inside some ball.
  const double x0 = points.col(0).minCoeff() - epsilon;
  const double x1 = points.col(0).maxCoeff() + epsilon;
  const double y0 = points.col(1).minCoeff() - epsilon;
  const double y1 = points.col(1).maxCoeff() + epsilon;
  double h = epsilon / 20.0;
  // Cap the grid so adversarially spread inputs stay tractable.
  while ((x1 - x0) / h * ((y1 - y0) / h) > 16e6) h *= 2.0;
  const int nx = std::max(1, static_cast<int>(std::ceil((x1 - x0) / h)));
  const int ny = std::max(1, static_cast<int>(std::ceil((y1 - y0) / h)));

  auto inside_union = [&](double x, double y) {
    for (int i = 0; i < n; ++i) {
      const double dx = x - points(i, 0);
      const double dy = y - points(i, 1);
      if (dx * dx + dy * dy <= epsilon * epsilon) return true;
    }
    return false;
  };

  std::vector<int> cell_label(static_cast<std::size_t>(nx) * ny, -1);
  auto cell_index = [&](int cx, int cy) {
    return static_cast<std::size_t>(cy) * nx + cx;
  };
  auto cell_center = [&](int cx, int cy) {
    return std::pair<double, double>{x0 + (cx + 0.5) * h, y0 + (cy + 0.5) * h};
  };
  int union_components = 0;
  std::vector<std::pair<int, int>> stack;
  for (int cy = 0; cy < ny; ++cy) {
    for (int cx = 0; cx < nx; ++cx) {
      if (cell_label[cell_index(cx, cy)] != -1) continue;
      const auto [x, y] = cell_center(cx, cy);
      if (!inside_union(x, y)) continue;
      const int label = union_components++;
      stack.assign(1, {cx, cy});
      cell_label[cell_index(cx, cy)] = label;
      while (!stack.empty()) {
        const auto [ux, uy] = stack.back();
        stack.pop_back();
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dy[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const int vx = ux + dx[d];
          const int vy = uy + dy[d];
          if (vx < 0 || vx >= nx || vy < 0 || vy >= ny) continue;
          if (cell_label[cell_index(vx, vy)] != -1) continue;
          const auto [wx, wy] = cell_center(vx, vy);
          if (!inside_union(wx, wy)) continue;
          cell_label[cell_index(vx, vy)] = label;
          stack.push_back({vx, vy});
        }
      }
    }
  }

  // Sample the union by rejection from the bounding box. Each sample is
  // classified two ways: by the grid component of the first ball covering
  // it (a point of that ball's center cell), and by the complex component
  // of its nearest center.
  Rng rng(seed);
  std::map<std::pair<int, int>, long long> joint_counts;
  std::map<int, long long> union_counts;
  std::map<int, long long> complex_counts;
  int accepted = 0;
  long long attempts = 0;
  const long long max_attempts =
      static_cast<long long>(trials) * 10000 + 1000000;
  while (accepted < trials && attempts < max_attempts) {
    ++attempts;
    const double x = rng.uniform(x0, x1);
    const double y = rng.uniform(y0, y1);

    int covering = -1;
    int nearest = 0;
    double nearest_d2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double dx = x - points(i, 0);
      const double dy = y - points(i, 1);
      const double d2 = dx * dx + dy * dy;
      if (d2 <= epsilon * epsilon && covering == -1) covering = i;
      if (d2 < nearest_d2) {
        nearest_d2 = d2;
        nearest = i;
      }
    }
    if (covering == -1) continue;
    ++accepted;

    const int ccx = std::clamp(
        static_cast<int>((points(covering, 0) - x0) / h), 0, nx - 1);
    const int ccy = std::clamp(
        static_cast<int>((points(covering, 1) - y0) / h), 0, ny - 1);
    const int union_comp = cell_label[cell_index(ccx, ccy)];
    const int complex_comp = complex_uf.find(nearest);
    ++joint_counts[{union_comp, complex_comp}];
    ++union_counts[union_comp];
    ++complex_counts[complex_comp];
  }

  auto pairs_within = [](const auto& counts) {
    long long total = 0;
    for (const auto& [key, c] : counts) total += c * (c - 1) / 2;
    return total;
  };
  const long long same_union = pairs_within(union_counts);
  const long long same_complex = pairs_within(complex_counts);
  const long long same_both = pairs_within(joint_counts);

  NerveReport report;
  report.samples = accepted;
  report.union_components = union_components;
  std::set<int> complex_roots;
  for (int i = 0; i < n; ++i) complex_roots.insert(complex_uf.find(i));
  report.complex_components = static_cast<int>(complex_roots.size());
  report.mismatch_pairs = (same_union - same_both) + (same_complex - same_both);
  return report;
}

}  // namespace riemstats
