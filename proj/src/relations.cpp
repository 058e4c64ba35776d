#include "fgac/relations.hpp"

#include <cmath>
#include <stdexcept>

namespace fgac {

namespace {

void check_config(const SimilarityConfig& config) {
  if (!(config.gamma > 0.0)) throw std::invalid_argument("similarity gamma must be positive");
  for (Eigen::Index q = 0; q < config.attribute_ranges.size(); ++q)
    if (!(config.attribute_ranges[q] > 0.0))
      throw std::domain_error("constant attribute: zero range in similarity config");
}

void check_schema(const InstanceTable& a, const InstanceTable& b, const SimilarityConfig& config) {
  if (a.numeric.cols() != b.numeric.cols() || a.nominal.cols() != b.nominal.cols())
    throw std::invalid_argument("cross_relation: schema mismatch between tables");
  if (config.attribute_ranges.size() != a.numeric.cols())
    throw std::invalid_argument("similarity config does not match table schema");
}

// Relation degree between row i of `a` and row j of `b`.
double pair_degree(const InstanceTable& a, Eigen::Index i, const InstanceTable& b,
                   Eigen::Index j, const SimilarityConfig& config) {
  const Eigen::Index p = a.numeric.cols();
  const Eigen::Index m = a.nominal.cols();
  switch (config.kind) {
    case SimilarityKind::supremum: {
      double degree = 1.0;
      for (Eigen::Index q = 0; q < p; ++q) {
        const double d = std::abs(a.numeric(i, q) - b.numeric(j, q)) / config.attribute_ranges[q];
        degree = std::min(degree, 1.0 - config.gamma * d);
      }
      for (Eigen::Index q = 0; q < m; ++q)
        if (a.nominal(i, q) != b.nominal(j, q)) degree = std::min(degree, 1.0 - config.gamma);
      return std::max(degree, 0.0);
    }
    case SimilarityKind::euclidean: {
      if (config.attribute_count_for_averaging < 1)
        throw std::invalid_argument("euclidean similarity requires attribute_count_for_averaging >= 1");
      double sq = 0.0;
      for (Eigen::Index q = 0; q < p; ++q) {
        const double d = (a.numeric(i, q) - b.numeric(j, q)) / config.attribute_ranges[q];
        sq += d * d;
      }
      for (Eigen::Index q = 0; q < m; ++q)
        if (a.nominal(i, q) != b.nominal(j, q)) sq += 1.0;
      const double d = std::sqrt(sq) / std::sqrt(double(config.attribute_count_for_averaging));
      return std::max(1.0 - config.gamma * d, 0.0);
    }
    case SimilarityKind::dominance: {
      if (m > 0) throw std::invalid_argument("dominance relation requires numeric attributes only");
      double degree = 1.0;
      for (Eigen::Index q = 0; q < p; ++q)
        degree = std::min(degree, attribute_dominance(config, a.numeric(i, q), b.numeric(j, q),
                                                      config.attribute_ranges[q]));
      return std::max(degree, 0.0);
    }
  }
  return 0.0;
}

}  // namespace

double attribute_similarity(const SimilarityConfig& config, double a, double b, double range) {
  if (!(config.gamma > 0.0)) throw std::invalid_argument("similarity gamma must be positive");
  if (!(range > 0.0)) throw std::domain_error("constant attribute: range must be positive");
  return std::max(1.0 - config.gamma * std::abs(a - b) / range, 0.0);
}

double attribute_dominance(const SimilarityConfig& config, double a, double b, double range) {
  if (!(config.gamma > 0.0)) throw std::invalid_argument("similarity gamma must be positive");
  if (!(range > 0.0)) throw std::domain_error("constant attribute: range must be positive");
  return std::max(std::min(1.0 - config.gamma * (b - a) / range, 1.0), 0.0);
}

RelationMatrix relation_matrix(const InstanceTable& data, const SimilarityConfig& config) {
  check_config(config);
  if (config.attribute_ranges.size() != data.numeric.cols())
    throw std::invalid_argument("similarity config does not match table schema");
  const Eigen::Index n = data.rows();
  if (n < 1) throw std::invalid_argument("relation_matrix: empty dataset");

  RelationMatrix rel;
  rel.degrees.resize(n, n);
  rel.reflexive = true;
  rel.t_transitive = true;
  if (config.kind == SimilarityKind::dominance) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        rel.degrees(i, j) = i == j ? 1.0 : pair_degree(data, i, data, j, config);
    rel.symmetric = false;
  } else {
    rel.symmetric = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      rel.degrees(i, i) = 1.0;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double d = pair_degree(data, i, data, j, config);
        rel.degrees(i, j) = d;
        rel.degrees(j, i) = d;
      }
    }
  }
  return rel;
}

RelationMatrix cross_relation(const InstanceTable& queries, const InstanceTable& references,
                              const SimilarityConfig& config) {
  check_config(config);
  check_schema(queries, references, config);
  RelationMatrix rel;
  rel.degrees.resize(queries.rows(), references.rows());
  for (Eigen::Index i = 0; i < queries.rows(); ++i)
    for (Eigen::Index j = 0; j < references.rows(); ++j)
      rel.degrees(i, j) = pair_degree(queries, i, references, j, config);
  return rel;
}

TEquivalenceReport verify_t_equivalence(const RelationMatrix& matrix, const TripletSpec& spec,
                                        double tol) {
  const MatrixXd& r = matrix.degrees;
  if (r.rows() != r.cols()) throw std::invalid_argument("verify_t_equivalence: matrix not square");
  const Eigen::Index n = r.rows();
  TEquivalenceReport report;
  for (Eigen::Index u = 0; u < n; ++u)
    if (std::abs(r(u, u) - 1.0) > tol) report.reflexivity.push_back(int(u));
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = u + 1; v < n; ++v)
      if (std::abs(r(u, v) - r(v, u)) > tol) report.symmetry.emplace_back(int(u), int(v));
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v)
      for (Eigen::Index w = 0; w < n; ++w) {
        const double lhs = t_norm(spec, r(u, v), r(v, w));
        if (lhs > r(u, w) + tol)
          report.transitivity.push_back({int(u), int(v), int(w), lhs, r(u, w)});
      }
  return report;
}

const char* to_string(SimilarityKind k) {
  switch (k) {
    case SimilarityKind::supremum: return "supremum";
    case SimilarityKind::euclidean: return "euclidean";
    case SimilarityKind::dominance: return "dominance";
  }
  return "?";
}

}  // namespace fgac
