#include "fgac/granular.hpp"

#include <stdexcept>

namespace fgac {

namespace {

void check_aligned(const FuzzySet& set, const RelationMatrix& matrix) {
  if (matrix.degrees.rows() != matrix.degrees.cols())
    throw std::invalid_argument("approximation requires a square relation matrix");
  if (set.size() != matrix.degrees.rows())
    throw std::invalid_argument("fuzzy set and relation matrix are not aligned");
}

}  // namespace

Granule granule(const RelationMatrix& matrix, const TripletSpec& spec, int u, double lambda,
                GranuleDirection direction) {
  const Eigen::Index n = matrix.degrees.rows();
  if (u < 0 || u >= n) throw std::out_of_range("granule center index out of range");
  Granule g;
  g.center = u;
  g.weight = lambda;
  g.direction = direction;
  g.membership.resize(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const double r =
        direction == GranuleDirection::forward ? matrix.degrees(v, u) : matrix.degrees(u, v);
    g.membership[v] = t_norm(spec, r, lambda);
  }
  return g;
}

GranularityReport is_granularly_representable(const FuzzySet& set, const RelationMatrix& matrix,
                                              const TripletSpec& spec, double tol) {
  check_aligned(set, matrix);
  const Eigen::Index n = set.size();
  GranularityReport report;
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v) {
      const double lhs = t_norm(spec, matrix.degrees(v, u), set[u]);
      if (lhs > set[v] + tol) report.violations.push_back({int(u), int(v), lhs, set[v]});
    }
  return report;
}

FuzzySet lower_approximation(const FuzzySet& set, const RelationMatrix& matrix,
                             const TripletSpec& spec, const OwaWeights* weights) {
  check_aligned(set, matrix);
  const Eigen::Index n = set.size();
  if (weights && weights->values.size() != n)
    throw std::invalid_argument("lower_approximation: weight length mismatch");
  FuzzySet out(n);
  VectorXd column(n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = 0; v < n; ++v)
      column[v] = implicator(spec, matrix.degrees(v, u), set[v]);
    out[u] = weights ? owa(*weights, column) : column.minCoeff();
  }
  return out;
}

FuzzySet upper_approximation(const FuzzySet& set, const RelationMatrix& matrix,
                             const TripletSpec& spec, const OwaWeights* weights) {
  check_aligned(set, matrix);
  const Eigen::Index n = set.size();
  if (weights && weights->values.size() != n)
    throw std::invalid_argument("upper_approximation: weight length mismatch");
  FuzzySet out(n);
  VectorXd column(n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = 0; v < n; ++v)
      column[v] = t_norm(spec, matrix.degrees(u, v), set[v]);
    out[u] = weights ? owa(*weights, column) : column.maxCoeff();
  }
  return out;
}

}  // namespace fgac
