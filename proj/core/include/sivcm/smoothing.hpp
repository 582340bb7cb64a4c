#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sivcm/data.hpp"
#include "sivcm/kernels.hpp"

namespace sivcm {

/// One local linear solve at a point: a = curve level, b = curve derivative.
struct LocalFit {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  bool ridged = false;
};

/// Local linear estimate of (g(u), g'(u)) at bandwidth h, minimizing
///   sum_i [Y_i - {a + b (u_i - u)}^T Z_i]^2 K_h(u_i - u)
/// over the scalar index u_i = beta^T X_i.
LocalFit local_linear_fit(const Dataset& data, const IndexParam& beta,
                          double u, double h, const Kernel& k);

/// Same solve given precomputed index values (used by the bandwidth folds,
/// where the index is treated as known).
LocalFit local_linear_fit_at(const Eigen::VectorXd& index_values,
                             const Eigen::VectorXd& y,
                             const Eigen::MatrixXd& z, double u, double h,
                             const Kernel& k);

/// Coefficient curves and derivatives over a set of evaluation points.
/// g_hat rows come from the level block at bandwidth h, g_dot_hat rows from
/// the derivative block of a separate solve at bandwidth h1.
struct CurveFit {
  IndexParam beta;
  double h = 0.0;
  double h1 = 0.0;
  Eigen::VectorXd eval_points;
  Eigen::MatrixXd g_hat;
  Eigen::MatrixXd g_dot_hat;
  std::vector<bool> ridged_flags;

  Eigen::Index size() const { return eval_points.size(); }
};

CurveFit fit_curves(const Dataset& data, const IndexParam& beta,
                    Eigen::VectorXd eval_points, double h, double h1,
                    const Kernel& k);

/// Nadaraya-Watson weights W_ni(u) = K1((u_i-u)/b_n) / sum_k K1((u_k-u)/b_n).
Eigen::VectorXd nw_weights(const Eigen::VectorXd& index_values, double u,
                           double b_n, const Kernel& k1);

/// Kernel-weighted conditional mean of per-observation responses at u.
Eigen::VectorXd cond_moment(const Eigen::VectorXd& index_values,
                            const Eigen::MatrixXd& responses, double u,
                            double b_n, const Kernel& k1);

}  // namespace sivcm
