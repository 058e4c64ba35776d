#pragma once

#include <vector>

#include "fgac/connectives.hpp"
#include "fgac/relations.hpp"

namespace fgac {

/// A fuzzy set over an instance index set: one membership degree per instance.
using FuzzySet = Eigen::VectorXd;

enum class GranuleDirection { forward, inverse };

/// Parametric fuzzy set centered at an instance: membership(v) = T(R(v,u), lambda)
/// for the forward direction, T(R(u,v), lambda) for the inverse one.
struct Granule {
  int center = 0;
  double weight = 0.0;
  GranuleDirection direction = GranuleDirection::forward;
  FuzzySet membership;
};

Granule granule(const RelationMatrix& matrix, const TripletSpec& spec, int u, double lambda,
                GranuleDirection direction);

struct GranularityReport {
  struct Violation {
    int u, v;
    double lhs, rhs;  // T(R(v,u), A(u)) vs A(v)
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the consistency property T(R(v,u), A(u)) <= A(v) for every pair.
GranularityReport is_granularly_representable(const FuzzySet& set, const RelationMatrix& matrix,
                                              const TripletSpec& spec, double tol);

/// Strict form min_v I(R(v,u), A(v)); with weights, the ordered weighted
/// average (lower-direction weights) over the same value multiset.
FuzzySet lower_approximation(const FuzzySet& set, const RelationMatrix& matrix,
                             const TripletSpec& spec, const OwaWeights* weights = nullptr);

/// Strict form max_v T(R(u,v), A(v)); with weights, the OWA (upper-direction
/// weights) over the same value multiset.
FuzzySet upper_approximation(const FuzzySet& set, const RelationMatrix& matrix,
                             const TripletSpec& spec, const OwaWeights* weights = nullptr);

}  // namespace fgac
