#include "sivcm/el.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sivcm/linalg.hpp"

namespace sivcm {

namespace {

constexpr int kMaxNewtonIter = 100;
constexpr int kMaxHalvings = 60;

// Interior test for the origin against the hull of the projected rows.
// Exact in one and two dimensions; rank >= 3 is left to the solver, whose
// stalled line search classifies the boundary case.
bool origin_interior_low_dim(const Eigen::MatrixXd& pts, bool* decided) {
  *decided = true;
  const Eigen::Index r = pts.cols();
  if (r == 1) {
    return pts.col(0).minCoeff() < 0.0 && pts.col(0).maxCoeff() > 0.0;
  }
  if (r == 2) {
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(pts.rows()));
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      angles.push_back(std::atan2(pts(i, 1), pts(i, 0)));
    }
    std::sort(angles.begin(), angles.end());
    double max_gap = 2.0 * M_PI - (angles.back() - angles.front());
    for (std::size_t i = 1; i < angles.size(); ++i) {
      max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    }
    return max_gap < M_PI - 1e-12;
  }
  *decided = false;
  return false;
}

ELSolution hull_violation(Eigen::Index p, Eigen::Index n) {
  ELSolution out;
  out.lambda = Eigen::VectorXd::Zero(p);
  out.neg2_log_ratio = kElInfinity;
  out.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  out.status = ElStatus::hull_violation;
  return out;
}

}  // namespace

ELSolution el_solve(const Eigen::Ref<const Eigen::MatrixXd>& eta) {
  const Eigen::Index n = eta.rows();
  const Eigen::Index p = eta.cols();
  if (!eta.allFinite()) {
    raise(errc::non_finite, "auxiliary vectors have non-finite entries");
  }
  if (n <= p) {
    raise(errc::degenerate_input, "need more observations than dimensions");
  }

  std::vector<Eigen::Index> active;
  active.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!eta.row(i).isZero(0.0)) active.push_back(i);
  }
  const Eigen::Index n_act = static_cast<Eigen::Index>(active.size());
  const double inv_n = 1.0 / static_cast<double>(n);

  ELSolution out;
  out.lambda = Eigen::VectorXd::Zero(p);
  out.weights = Eigen::VectorXd::Constant(n, inv_n);
  if (n_act == 0) {
    return out;  // unconstrained: lambda = 0, ratio 0
  }

  Eigen::MatrixXd act(n_act, p);
  for (Eigen::Index i = 0; i < n_act; ++i) {
    act.row(i) = eta.row(active[static_cast<std::size_t>(i)]);
  }
  bool all_same = true;
  for (Eigen::Index i = 1; i < n_act && all_same; ++i) {
    all_same = (act.row(i) == act.row(0));
  }
  if (all_same && n_act > 1) {
    raise(errc::degenerate_input, "all auxiliary vectors are identical");
  }

  // Work in the column space of the rows so rank-deficient eta (collinear
  // moment coordinates) still yields a well-posed dual.
  const Eigen::MatrixXd second_moment =
      act.transpose() * act / static_cast<double>(n_act);
  const SymEig eig = sym_eig(second_moment);
  const double lmax = eig.values.cwiseAbs().maxCoeff();
  Eigen::Index rank = 0;
  for (Eigen::Index j = 0; j < p; ++j) {
    if (eig.values(j) > 1e-12 * lmax) ++rank;
  }
  if (rank == 0) return out;
  const Eigen::MatrixXd basis = eig.vectors.leftCols(rank);
  const Eigen::MatrixXd proj = act * basis;  // n_act x rank

  bool decided = false;
  if (!origin_interior_low_dim(proj, &decided) && decided) {
    return hull_violation(p, n);
  }

  const double grad_tol =
      1e-10 * (1.0 + act.rowwise().norm().maxCoeff());
  const double floor = inv_n;  // keep 1 + lambda^T eta_i >= 1/n

  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(rank);
  Eigen::VectorXd denom = Eigen::VectorXd::Ones(n_act);
  auto objective = [&](const Eigen::VectorXd& lam, Eigen::VectorXd* d) {
    *d = (proj * lam).array() + 1.0;
    if (d->minCoeff() < floor) return -kElInfinity;
    return d->array().log().sum();
  };
  double fval = 0.0;  // objective at lambda = 0

  bool stalled = false;
  bool converged = false;
  for (int iter = 0; iter < kMaxNewtonIter; ++iter) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(rank);
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(rank, rank);
    Eigen::VectorXd row(rank);
    for (Eigen::Index i = 0; i < n_act; ++i) {
      row = proj.row(i);
      const double d = denom(i);
      grad.noalias() += row / d;
      hess.noalias() += row * row.transpose() / (d * d);
    }
    if (inv_n * grad.norm() <= grad_tol) {
      converged = true;
      break;
    }
    const Eigen::VectorXd step = solve_spd(hess, grad).solution;

    double t = 1.0;
    bool accepted = false;
    for (int half = 0; half < kMaxHalvings; ++half) {
      Eigen::VectorXd trial_denom;
      const Eigen::VectorXd trial = lambda + t * step;
      const double trial_f = objective(trial, &trial_denom);
      if (trial_f > fval) {
        lambda = trial;
        denom = trial_denom;
        fval = trial_f;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      stalled = true;
      break;
    }
  }

  if (!converged) {
    // Final gradient check: a stalled solve with mass still pushing outward
    // means the optimum sits on the weight floor, i.e. the hull boundary.
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(rank);
    for (Eigen::Index i = 0; i < n_act; ++i) {
      grad.noalias() += proj.row(i).transpose() / denom(i);
    }
    if (inv_n * grad.norm() <= grad_tol) {
      converged = true;
    } else if (stalled) {
      return hull_violation(p, n);
    }
  }

  out.lambda = basis * lambda;
  out.neg2_log_ratio = 2.0 * fval;
  out.status = converged ? ElStatus::converged : ElStatus::max_iter;
  for (Eigen::Index i = 0; i < n_act; ++i) {
    out.weights(active[static_cast<std::size_t>(i)]) = inv_n / denom(i);
  }
  return out;
}

double neg2_log_el(const Eigen::Ref<const Eigen::MatrixXd>& eta) {
  return el_solve(eta).neg2_log_ratio;
}

}  // namespace sivcm
