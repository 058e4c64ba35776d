#pragma once

#include <Eigen/Dense>
#include <vector>

namespace fgac {

using Eigen::VectorXd;

/// One linear inequality ci*x[i] + cj*x[j] >= rhs; set j < 0 for a single term.
struct SparseRow {
  int i = 0;
  int j = -1;
  double ci = 0.0;
  double cj = 0.0;
  double rhs = 0.0;
};

/// Dense inequality a'x >= rhs.
struct DenseRow {
  VectorXd a;
  double rhs = 0.0;
};

struct ProjectionParams {
  double lo = 0.0;  // box lo <= x_k <= hi on every variable
  double hi = 1.0;
  double violation_tol = 1e-12;
  int max_iterations = 0;  // 0 picks a size-dependent default
};

struct ProjectionResult {
  VectorXd x;
  int iterations = 0;
  int active_count = 0;
  bool converged = false;
};

/// Euclidean projection of `target` onto the polytope
///   { x : rows hold, dense rows hold, lo <= x <= hi },
/// by a dual active-set method: starting from the unconstrained optimum,
/// repeatedly admit the most violated constraint, taking partial dual steps
/// and dropping blocking constraints as required. Deterministic.
ProjectionResult project_onto_polytope(const VectorXd& target, const std::vector<SparseRow>& rows,
                                       const std::vector<DenseRow>& dense_rows,
                                       const ProjectionParams& params = {});

/// Largest violation max(0, rhs - a'x) over all rows and the box.
double max_violation(const VectorXd& x, const std::vector<SparseRow>& rows,
                     const std::vector<DenseRow>& dense_rows, double lo, double hi);

}  // namespace fgac
