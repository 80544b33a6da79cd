#pragma once

#include <Eigen/Core>

#include "gmv/rng.hpp"

namespace gmv {

/// Frobenius norm of W^T W - I, the orthonormality residual.
double orthonormality_error(const Eigen::MatrixXd& w);

/// Solves max_W trace(W^T S) over column-orthonormal d x l matrices W,
/// the orthogonality-constrained least-squares (Procrustes) problem shared
/// by both projection updates. Returns the polar factor U V^T of the d x l
/// cross matrix S. Deterministic for fixed input bits; reflections are
/// permitted (no det(W)=+1 restriction).
Eigen::MatrixXd orthogonal_procrustes(const Eigen::MatrixXd& cross_matrix);

/// Column-orthonormal d x l matrix from a seeded gaussian draw (QR with the
/// R diagonal forced positive, so the result is deterministic).
Eigen::MatrixXd random_orthonormal(Eigen::Index d, Eigen::Index l, SeededRng& rng);

}  // namespace gmv
