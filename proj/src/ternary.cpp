#include "gmv/ternary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace gmv {

int TernaryCode::nonzeros() const {
  int n = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values[i] != 0) ++n;
  return n;
}

bool TernaryCode::feasible() const {
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values[i] < -1 || values[i] > 1) return false;
  return nonzeros() <= sparsity_budget;
}

namespace {

// Writes the ternarization of `v` into `out` (same length).
void ternarize_into(const Eigen::Ref<const Eigen::VectorXd>& v, int budget,
                    Eigen::Ref<Eigen::VectorXi> out) {
  const Eigen::Index l = v.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(l));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  // Sort by magnitude descending; equal magnitudes keep the lowest index first.
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return std::abs(v[a]) > std::abs(v[b]);
  });
  out.setZero();
  for (int k = 0; k < budget; ++k) {
    const Eigen::Index i = order[static_cast<std::size_t>(k)];
    if (v[i] > 0.0)
      out[i] = 1;
    else if (v[i] < 0.0)
      out[i] = -1;
    // exact zeros stay zero even when selected
  }
}

void check_budget(Eigen::Index l, int budget) {
  if (budget < 1 || budget > l)
    throw ParameterError("sparsity budget must satisfy 1 <= S <= l, got S=" +
                         std::to_string(budget) + " with l=" + std::to_string(l));
}

}  // namespace

TernaryCode ternarize(const Eigen::VectorXd& v, int budget) {
  check_budget(v.size(), budget);
  TernaryCode code;
  code.values.resize(v.size());
  code.sparsity_budget = budget;
  ternarize_into(v, budget, code.values);
  return code;
}

Eigen::MatrixXi ternarize_columns(const Eigen::MatrixXd& m, int budget) {
  check_budget(m.rows(), budget);
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) ternarize_into(m.col(j), budget, out.col(j));
  return out;
}

TernaryCode embed(const Eigen::VectorXd& x, const Eigen::MatrixXd& w, int budget) {
  if (x.size() != w.rows())
    throw ParameterError("embed: template length " + std::to_string(x.size()) +
                         " does not match projection rows " + std::to_string(w.rows()));
  return ternarize(w.transpose() * x, budget);
}

Eigen::MatrixXi embed_columns(const Eigen::MatrixXd& x, const Eigen::MatrixXd& w, int budget) {
  if (x.rows() != w.rows())
    throw ParameterError("embed: template dimension " + std::to_string(x.rows()) +
                         " does not match projection rows " + std::to_string(w.rows()));
  return ternarize_columns(w.transpose() * x, budget);
}

Eigen::VectorXd reconstruct_unit(const Eigen::VectorXi& code, const Eigen::MatrixXd& w) {
  if (code.size() != w.cols())
    throw ParameterError("reconstruct_unit: code length " + std::to_string(code.size()) +
                         " does not match projection columns " + std::to_string(w.cols()));
  if ((code.array() != 0).count() == 0)
    throw DegenerateCodeError("reconstruct_unit: all-zero code has no direction");
  Eigen::VectorXd y = w * code.cast<double>();
  const double norm = y.norm();
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw NumericalError("reconstruct_unit: projection of code has zero or non-finite norm");
  return y / norm;
}

Eigen::VectorXd reconstruct_unit(const TernaryCode& code, const Eigen::MatrixXd& w) {
  return reconstruct_unit(code.values, w);
}

}  // namespace gmv
