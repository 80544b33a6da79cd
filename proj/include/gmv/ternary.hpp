#pragma once

#include <Eigen/Core>

#include "gmv/errors.hpp"

namespace gmv {

// Sparse ternary code over {-1, 0, +1} with at most `sparsity_budget`
// nonzero entries. This is both the embedding of a single template and
// the enrolled representation of a whole group.
struct TernaryCode {
  Eigen::VectorXi values;
  int sparsity_budget = 0;

  int length() const { return static_cast<int>(values.size()); }
  int nonzeros() const;

  /// Entries in the alphabet and nonzero count within budget.
  bool feasible() const;
};

/// Keep the `budget` largest-magnitude entries of `v` as their signs and
/// zero the rest. Ties in magnitude are resolved toward the lowest index;
/// exact zeros are never promoted to +-1, so the result can have fewer
/// than `budget` nonzeros.
TernaryCode ternarize(const Eigen::VectorXd& v, int budget);

/// Column-wise ternarization of a matrix (each column gets the same budget).
Eigen::MatrixXi ternarize_columns(const Eigen::MatrixXd& m, int budget);

/// Sparse ternary embedding of a template: ternarize(W^T x).
TernaryCode embed(const Eigen::VectorXd& x, const Eigen::MatrixXd& w, int budget);

/// Embeddings of all columns of `x` as an l x N integer matrix.
Eigen::MatrixXi embed_columns(const Eigen::MatrixXd& x, const Eigen::MatrixXd& w, int budget);

/// Unit-norm reconstruction W c / |W c|. Throws DegenerateCodeError on an
/// all-zero code (no direction information).
Eigen::VectorXd reconstruct_unit(const TernaryCode& code, const Eigen::MatrixXd& w);

/// Same, taking the code as a raw integer column.
Eigen::VectorXd reconstruct_unit(const Eigen::VectorXi& code, const Eigen::MatrixXd& w);

}  // namespace gmv
