#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gmv/partition.hpp"

namespace gmv {

// Enrolled templates: unit-norm columns of a d x N matrix plus one opaque
// identity label per column.
struct TemplateMatrix {
  Eigen::MatrixXd x;           // d x N
  std::vector<std::uint32_t> ids;  // N

  Eigen::Index dim() const { return x.rows(); }
  Eigen::Index count() const { return x.cols(); }

  /// Unit columns (within 1e-6), finite entries, one id per column.
  void validate() const;

  /// Columns of group g gathered in member order.
  Eigen::MatrixXd group_columns(const GroupPartition& partition, int g) const;
};

enum class Difficulty : std::uint8_t { unsplit = 0, easy = 1, hard = 2 };

// Query batch. A query is either genuine (labelled with the enrolled identity
// it is a noisy version of) or an impostor.
struct QuerySet {
  Eigen::MatrixXd queries;  // d x Q, unit columns
  std::vector<std::optional<std::uint32_t>> identities;  // nullopt = impostor
  std::vector<Difficulty> difficulty;                    // per query

  Eigen::Index dim() const { return queries.rows(); }
  Eigen::Index count() const { return queries.cols(); }
  int genuine_count() const;
  int impostor_count() const;
  void validate() const;
};

struct SyntheticData {
  TemplateMatrix templates;
  QuerySet queries;
};

/// Synthetic instance: N unit-normalized gaussian templates, one genuine
/// query per identity built as (x + sigma*n)/|x + sigma*n|, and `impostors`
/// fresh normalized gaussian queries. Fully determined by the seed.
SyntheticData gen_synthetic(int d, int n, double sigma, int impostors, std::uint64_t seed);

struct SplitResult {
  QuerySet queries;
  int dropped = 0;  // genuine queries below the hard threshold
};

/// Tag genuine queries easy/hard by cosine to their enrolled template:
/// >= easy_threshold -> easy, in [hard_threshold, easy_threshold) -> hard,
/// below -> dropped. Impostors pass through unsplit.
SplitResult split_queries(const QuerySet& queries, const TemplateMatrix& enrolled,
                          double easy_threshold, double hard_threshold);

/// Subset of a QuerySet: impostors plus genuine queries of one difficulty
/// (or all queries when `keep` is unsplit).
QuerySet filter_queries(const QuerySet& queries, Difficulty keep);

}  // namespace gmv
