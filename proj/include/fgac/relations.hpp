#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "fgac/connectives.hpp"

namespace fgac {

using Eigen::MatrixXd;
using Eigen::MatrixXi;

/// Attribute table after preprocessing: min-max scaled numeric columns plus
/// integer category codes for the original nominal columns. Each nominal
/// column contributes a single 0/1 coordinate to distances.
struct InstanceTable {
  MatrixXd numeric;  // rows x numeric attributes
  MatrixXi nominal;  // rows x nominal attributes

  Eigen::Index rows() const { return numeric.rows() > 0 ? numeric.rows() : nominal.rows(); }
};

enum class SimilarityKind { supremum, euclidean, dominance };

struct SimilarityConfig {
  double gamma = 1.0;
  SimilarityKind kind = SimilarityKind::euclidean;
  VectorXd attribute_ranges;              // per numeric column, frozen at fit time
  int attribute_count_for_averaging = 0;  // |Q| used by the sqrt(|Q|) averaging factor
};

/// Pairwise fuzzy relation degrees; rows index queries, columns references.
struct RelationMatrix {
  MatrixXd degrees;
  bool reflexive = false;
  bool symmetric = false;
  bool t_transitive = false;
};

/// Per-attribute similarity max(1 - gamma |a-b| / range, 0).
double attribute_similarity(const SimilarityConfig& config, double a, double b, double range);

/// Per-attribute dominance max(min(1 - gamma (b-a) / range, 1), 0); not symmetric.
double attribute_dominance(const SimilarityConfig& config, double a, double b, double range);

/// Full pairwise relation over one table. Supremum and euclidean kinds yield
/// a Lukasiewicz-equivalence (reflexive, symmetric, T_L-transitive).
RelationMatrix relation_matrix(const InstanceTable& data, const SimilarityConfig& config);

/// Relation degrees between two tables preprocessed with the same frozen
/// statistics; |queries| x |references|.
RelationMatrix cross_relation(const InstanceTable& queries, const InstanceTable& references,
                              const SimilarityConfig& config);

struct TEquivalenceReport {
  struct TransitivityViolation {
    int u, v, w;
    double lhs, rhs;  // T(R(u,v), R(v,w)) vs R(u,w)
  };
  std::vector<TransitivityViolation> transitivity;
  std::vector<std::pair<int, int>> symmetry;
  std::vector<int> reflexivity;

  bool ok() const { return transitivity.empty() && symmetry.empty() && reflexivity.empty(); }
};

/// Brute-force check of reflexivity, symmetry and T-transitivity over all
/// pairs/triples; empty report means the matrix is a T-equivalence within tol.
TEquivalenceReport verify_t_equivalence(const RelationMatrix& matrix, const TripletSpec& spec,
                                        double tol);

const char* to_string(SimilarityKind k);

}  // namespace fgac
