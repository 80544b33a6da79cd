#include "gmv/procrustes.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "gmv/errors.hpp"

namespace gmv {

double orthonormality_error(const Eigen::MatrixXd& w) {
  const Eigen::Index l = w.cols();
  return (w.transpose() * w - Eigen::MatrixXd::Identity(l, l)).norm();
}

Eigen::MatrixXd orthogonal_procrustes(const Eigen::MatrixXd& cross_matrix) {
  const Eigen::Index d = cross_matrix.rows();
  const Eigen::Index l = cross_matrix.cols();
  if (l > d)
    throw ParameterError("orthogonal_procrustes: cross matrix has more columns (" +
                         std::to_string(l) + ") than rows (" + std::to_string(d) + ")");
  if (!cross_matrix.allFinite())
    throw NumericalError("orthogonal_procrustes: cross matrix has non-finite entries");

  Eigen::BDCSVD<Eigen::MatrixXd> svd(cross_matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::MatrixXd u = svd.matrixU();
  Eigen::MatrixXd v = svd.matrixV();
  const Eigen::VectorXd& sigma = svd.singularValues();

  // Sign flips of a (u_k, v_k) pair cancel in u v^T when sigma_k > 0. For
  // zero singular values the pair is an arbitrary null-space basis, so pin
  // the sign: first nonzero coordinate of the left vector positive.
  const double tol = sigma.size() > 0 ? sigma[0] * 1e-14 : 0.0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma[k] > tol) continue;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (u(i, k) != 0.0) {
        if (u(i, k) < 0.0) {
          u.col(k) = -u.col(k);
          v.col(k) = -v.col(k);
        }
        break;
      }
    }
  }
  return u * v.transpose();
}

Eigen::MatrixXd random_orthonormal(Eigen::Index d, Eigen::Index l, SeededRng& rng) {
  if (l > d)
    throw ParameterError("random_orthonormal: need l <= d, got l=" + std::to_string(l) +
                         ", d=" + std::to_string(d));
  const Eigen::MatrixXd g = rng.gaussian_matrix(d, l);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, l);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(l).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < l; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace gmv
