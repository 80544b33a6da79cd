#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "gmv/partition.hpp"

namespace gmv {

enum class Method : std::uint8_t {
  aoe = 0,
  eoa = 1,
  baseline_aoe = 2,
  baseline_eoa = 3,
};

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct ModelParams {
  int l = 0;
  int s = 0;
  Method method = Method::aoe;
  double xi = 1.0;
  double gamma = 1e4;
  double eta = 1.0;
  std::uint64_t seed = 0;
};

// Learned enrollment artifact: projection W (d x l, column-orthonormal),
// group representations R (l x M, ternary columns with budget S), the group
// partition, and the hyperparameters it was produced with.
struct GroupModel {
  Eigen::MatrixXd w;   // d x l
  Eigen::MatrixXi r;   // l x M
  GroupPartition partition;
  ModelParams params;

  Eigen::Index dim() const { return w.rows(); }
  Eigen::Index code_length() const { return w.cols(); }
  Eigen::Index group_count() const { return r.cols(); }

  /// Orthonormal W, feasible ternary R columns, M matching the partition.
  void validate(double ortho_tol = 1e-8) const;
};

}  // namespace gmv
