#pragma once

#include <Eigen/Dense>
#include <limits>

#include "sivcm/errors.hpp"

namespace sivcm {

enum class ElStatus { converged, hull_violation, max_iter };

/// Sentinel for the log EL ratio when zero is outside the convex hull of the
/// auxiliary vectors (the profile likelihood is zero there).
inline constexpr double kElInfinity = std::numeric_limits<double>::infinity();

struct ELSolution {
  Eigen::VectorXd lambda;
  double neg2_log_ratio = 0.0;
  Eigen::VectorXd weights;
  ElStatus status = ElStatus::converged;
};

/// Solves the empirical-likelihood dual for the moment constraint
/// sum_i p_i eta_i = 0: lambda satisfies (1/n) sum_i eta_i/(1+lambda^T eta_i) = 0
/// and the implied weights are p_i = 1/(n(1+lambda^T eta_i)).
/// Exact-zero rows impose no constraint and receive weight 1/n. When zero is
/// not interior to the hull of the nonzero rows the status is hull_violation
/// and the ratio is the infinity sentinel.
ELSolution el_solve(const Eigen::Ref<const Eigen::MatrixXd>& eta);

/// -2 log EL ratio; infinity sentinel on hull violation.
double neg2_log_el(const Eigen::Ref<const Eigen::MatrixXd>& eta);

}  // namespace sivcm
