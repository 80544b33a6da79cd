#include "gmv/model.hpp"

#include "gmv/errors.hpp"
#include "gmv/procrustes.hpp"

namespace gmv {

const char* method_name(Method m) {
  switch (m) {
    case Method::aoe: return "aoe";
    case Method::eoa: return "eoa";
    case Method::baseline_aoe: return "baseline-aoe";
    case Method::baseline_eoa: return "baseline-eoa";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  if (name == "aoe") return Method::aoe;
  if (name == "eoa") return Method::eoa;
  if (name == "baseline-aoe") return Method::baseline_aoe;
  if (name == "baseline-eoa") return Method::baseline_eoa;
  throw ParameterError("unknown method '" + name +
                       "' (expected aoe, eoa, baseline-aoe or baseline-eoa)");
}

void GroupModel::validate(double ortho_tol) const {
  if (w.cols() > w.rows()) throw ParameterError("model: l exceeds d");
  if (r.rows() != w.cols()) throw ParameterError("model: R row count does not match l");
  if (params.s < 1 || params.s > static_cast<int>(w.cols()))
    throw ParameterError("model: sparsity budget out of range");
  partition.validate();
  if (r.cols() != static_cast<Eigen::Index>(partition.group_count()))
    throw ParameterError("model: R column count does not match partition group count");
  const double err = orthonormality_error(w);
  if (!(err <= ortho_tol))
    throw NumericalError("model: projection is not orthonormal (residual " +
                         std::to_string(err) + ")");
  for (Eigen::Index g = 0; g < r.cols(); ++g) {
    int nnz = 0;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      const int v = r(i, g);
      if (v < -1 || v > 1)
        throw ParameterError("model: representation entry outside {-1,0,1}");
      if (v != 0) ++nnz;
    }
    if (nnz > params.s)
      throw ParameterError("model: representation column " + std::to_string(g) +
                           " exceeds sparsity budget");
  }
}

}  // namespace gmv
