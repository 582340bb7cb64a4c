#pragma once

#include <Eigen/Dense>

#include "sivcm/errors.hpp"

namespace sivcm {

/// Symmetric eigendecomposition with eigenvalues sorted descending and
/// eigenvector columns matched to them.
struct SymEig {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Decomposes a symmetric matrix. Throws errc::non_finite on non-finite
/// entries and errc::not_symmetric when the relative asymmetry exceeds 1e-8.
SymEig sym_eig(const Eigen::Ref<const Eigen::MatrixXd>& m);

struct PseudoInverse {
  Eigen::MatrixXd matrix;
  Eigen::Index rank = 0;
};

/// Moore-Penrose pseudoinverse of a symmetric matrix: eigenvalues with
/// |lambda| > rel_tol * max|lambda| are inverted, the rest zeroed. A zero
/// matrix comes back with rank 0 rather than as an error.
PseudoInverse gen_inverse(const Eigen::Ref<const Eigen::MatrixXd>& m,
                          double rel_tol = 1e-10);

/// Pseudo inverse square root of a positive semidefinite matrix:
/// eigenvalues above the relative cutoff map to 1/sqrt(lambda), the rest
/// (including small negatives from roundoff) to 0.
Eigen::MatrixXd inv_sqrt_psd(const Eigen::Ref<const Eigen::MatrixXd>& m,
                             double rel_tol = 1e-10);

struct SpdSolve {
  Eigen::MatrixXd solution;
  bool ridged = false;
};

/// Solves M x = b for symmetric positive (semi)definite M. A numerically
/// singular system gets a single ridge of 1e-8 * tr(M)/d on the diagonal and
/// the result is flagged `ridged`; errc::singular_after_ridge if that still
/// fails the residual contract.
SpdSolve solve_spd(const Eigen::Ref<const Eigen::MatrixXd>& m,
                   const Eigen::Ref<const Eigen::MatrixXd>& b);

}  // namespace sivcm
