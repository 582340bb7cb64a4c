#include "sivcm/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sivcm/linalg.hpp"

namespace sivcm {

namespace {

struct SortedView {
  Eigen::VectorXd u;               // ascending index values
  std::vector<Eigen::Index> rows;  // original observation of each entry
};

SortedView sort_by_index(const Eigen::VectorXd& index_values) {
  SortedView view;
  const Eigen::Index n = index_values.size();
  view.rows.resize(static_cast<std::size_t>(n));
  std::iota(view.rows.begin(), view.rows.end(), Eigen::Index{0});
  std::sort(view.rows.begin(), view.rows.end(),
            [&](Eigen::Index a, Eigen::Index b) {
              return index_values(a) < index_values(b);
            });
  view.u.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) view.u(i) = index_values(view.rows[i]);
  return view;
}

// Weighted normal equations of the local linear problem in the scaled
// regressor t = (u_i - u)/h; the derivative block comes back scaled by h.
LocalFit solve_window(const SortedView& view, const Eigen::VectorXd& y,
                      const Eigen::MatrixXd& z, double u, double h,
                      const Kernel& k) {
  const Eigen::Index q = z.cols();
  const double radius = h * Kernel::support_radius;

  const double* begin = view.u.data();
  const double* end = begin + view.u.size();
  const auto lo = std::lower_bound(begin, end, u - radius) - begin;
  const auto hi = std::upper_bound(begin, end, u + radius) - begin;

  Eigen::MatrixXd s0 = Eigen::MatrixXd::Zero(q, q);
  Eigen::MatrixXd s1 = Eigen::MatrixXd::Zero(q, q);
  Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(q, q);
  Eigen::VectorXd xi0 = Eigen::VectorXd::Zero(q);
  Eigen::VectorXd xi1 = Eigen::VectorXd::Zero(q);

  Eigen::Index support = 0;
  Eigen::VectorXd zi(q);
  Eigen::MatrixXd zz(q, q);
  for (auto s = lo; s < hi; ++s) {
    const double t = (view.u(s) - u) / h;
    const double w = k(t) / h;
    if (w <= 0.0) continue;
    ++support;
    const Eigen::Index row = view.rows[static_cast<std::size_t>(s)];
    zi = z.row(row);
    zz.noalias() = zi * zi.transpose();
    s0.noalias() += w * zz;
    s1.noalias() += (w * t) * zz;
    s2.noalias() += (w * t * t) * zz;
    xi0.noalias() += (w * y(row)) * zi;
    xi1.noalias() += (w * t * y(row)) * zi;
  }
  if (support == 0) {
    raise(errc::empty_window,
          "no kernel mass at u=" + std::to_string(u) + " with h=" +
              std::to_string(h));
  }

  Eigen::MatrixXd lhs(2 * q, 2 * q);
  lhs.topLeftCorner(q, q) = s0;
  lhs.topRightCorner(q, q) = s1;
  lhs.bottomLeftCorner(q, q) = s1;
  lhs.bottomRightCorner(q, q) = s2;
  Eigen::VectorXd rhs(2 * q);
  rhs.head(q) = xi0;
  rhs.tail(q) = xi1;

  const SpdSolve solved = solve_spd(lhs, rhs);
  LocalFit fit;
  fit.a = solved.solution.col(0).head(q);
  fit.b = solved.solution.col(0).tail(q) / h;
  fit.ridged = solved.ridged;
  return fit;
}

void check_bandwidth(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    raise(errc::invalid_argument, "bandwidth must be positive and finite");
  }
}

}  // namespace

LocalFit local_linear_fit_at(const Eigen::VectorXd& index_values,
                             const Eigen::VectorXd& y,
                             const Eigen::MatrixXd& z, double u, double h,
                             const Kernel& k) {
  check_bandwidth(h);
  if (index_values.size() != y.size() || z.rows() != y.size()) {
    raise(errc::invalid_argument, "local fit inputs disagree in length");
  }
  if (y.size() < 2 * z.cols()) {
    raise(errc::too_few_observations, "need n >= 2q for a local linear fit");
  }
  const SortedView view = sort_by_index(index_values);
  return solve_window(view, y, z, u, h, k);
}

LocalFit local_linear_fit(const Dataset& data, const IndexParam& beta,
                          double u, double h, const Kernel& k) {
  return local_linear_fit_at(data.index_values(beta), data.y, data.z, u, h, k);
}

CurveFit fit_curves(const Dataset& data, const IndexParam& beta,
                    Eigen::VectorXd eval_points, double h, double h1,
                    const Kernel& k) {
  check_bandwidth(h);
  check_bandwidth(h1);
  const Eigen::Index m = eval_points.size();
  const Eigen::Index q = data.q();
  CurveFit fit{beta, h, h1, std::move(eval_points),
               Eigen::MatrixXd(m, q), Eigen::MatrixXd(m, q),
               std::vector<bool>(static_cast<std::size_t>(m), false)};

  const Eigen::VectorXd index_values = data.index_values(beta);
  const SortedView view = sort_by_index(index_values);
  const bool same_bandwidth = (h == h1);

  for (Eigen::Index j = 0; j < m; ++j) {
    const double u = fit.eval_points(j);
    const LocalFit level = solve_window(view, data.y, data.z, u, h, k);
    fit.g_hat.row(j) = level.a.transpose();
    bool ridged = level.ridged;
    if (same_bandwidth) {
      fit.g_dot_hat.row(j) = level.b.transpose();
    } else {
      const LocalFit slope = solve_window(view, data.y, data.z, u, h1, k);
      fit.g_dot_hat.row(j) = slope.b.transpose();
      ridged = ridged || slope.ridged;
    }
    fit.ridged_flags[static_cast<std::size_t>(j)] = ridged;
  }
  return fit;
}

Eigen::VectorXd nw_weights(const Eigen::VectorXd& index_values, double u,
                           double b_n, const Kernel& k1) {
  check_bandwidth(b_n);
  const Eigen::Index n = index_values.size();
  Eigen::VectorXd w(n);
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i) = k1((index_values(i) - u) / b_n);
    total += w(i);
  }
  if (total <= 0.0) {
    raise(errc::empty_window,
          "no kernel mass at u=" + std::to_string(u) + " with b_n=" +
              std::to_string(b_n));
  }
  return w / total;
}

Eigen::VectorXd cond_moment(const Eigen::VectorXd& index_values,
                            const Eigen::MatrixXd& responses, double u,
                            double b_n, const Kernel& k1) {
  if (responses.rows() != index_values.size()) {
    raise(errc::invalid_argument, "responses row count mismatch");
  }
  const Eigen::VectorXd w = nw_weights(index_values, u, b_n, k1);
  return responses.transpose() * w;
}

}  // namespace sivcm
