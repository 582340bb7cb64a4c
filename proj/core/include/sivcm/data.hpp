#pragma once

#include <Eigen/Dense>
#include <utility>

#include "sivcm/errors.hpp"

namespace sivcm {

/// Unit-norm index direction with the sign fixed so the first component
/// larger than 1e-12 in magnitude is positive. Construction normalizes.
class IndexParam {
 public:
  explicit IndexParam(Eigen::VectorXd v) : beta_(std::move(v)) {
    if (beta_.size() == 0 || !beta_.allFinite()) {
      raise(errc::invalid_argument, "index vector must be finite and nonempty");
    }
    const double norm = beta_.norm();
    if (norm == 0.0) {
      raise(errc::invalid_argument, "index vector must be nonzero");
    }
    beta_ /= norm;
    for (Eigen::Index j = 0; j < beta_.size(); ++j) {
      if (std::abs(beta_(j)) > 1e-12) {
        if (beta_(j) < 0.0) beta_ = -beta_;
        break;
      }
    }
  }

  const Eigen::VectorXd& coeffs() const { return beta_; }
  Eigen::Index dim() const { return beta_.size(); }
  double operator()(Eigen::Index j) const { return beta_(j); }

 private:
  Eigen::VectorXd beta_;
};

/// Observations (Y_i, X_i, Z_i), i = 1..n. X drives the scalar index, Z the
/// varying coefficients.
struct Dataset {
  Eigen::VectorXd y;
  Eigen::MatrixXd x;
  Eigen::MatrixXd z;

  Dataset(Eigen::VectorXd y_in, Eigen::MatrixXd x_in, Eigen::MatrixXd z_in)
      : y(std::move(y_in)), x(std::move(x_in)), z(std::move(z_in)) {
    const Eigen::Index count = y.size();
    if (x.rows() != count || z.rows() != count) {
      raise(errc::invalid_argument, "Y, X, Z row counts disagree");
    }
    if (x.cols() < 1 || z.cols() < 1) {
      raise(errc::invalid_argument, "X and Z need at least one column");
    }
    if (!y.allFinite() || !x.allFinite() || !z.allFinite()) {
      raise(errc::non_finite, "dataset has non-finite entries");
    }
    const Eigen::Index min_n = std::max<Eigen::Index>(2 * z.cols(), x.cols() + 1);
    if (count < min_n) {
      raise(errc::too_few_observations,
            "need at least max(2q, p+1) observations");
    }
  }

  Eigen::Index n() const { return y.size(); }
  Eigen::Index p() const { return x.cols(); }
  Eigen::Index q() const { return z.cols(); }

  /// Index values beta^T X_i for all observations.
  Eigen::VectorXd index_values(const IndexParam& beta) const {
    return x * beta.coeffs();
  }
};

}  // namespace sivcm
