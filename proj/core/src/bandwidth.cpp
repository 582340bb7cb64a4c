#include "sivcm/bandwidth.hpp"

#include <cmath>
#include <limits>

#include "sivcm/smoothing.hpp"

namespace sivcm {

BandwidthPlan plan_from_hopt(double h_opt, Eigen::Index n, int m,
                             int q_folds) {
  if (!(h_opt > 0.0)) {
    raise(errc::invalid_argument, "h_opt must be positive");
  }
  const double dn = static_cast<double>(n);
  BandwidthPlan plan;
  plan.h_opt = h_opt;
  plan.h = h_opt * std::pow(dn, -0.05) / std::sqrt(std::log(dn));
  plan.h1 = h_opt;
  plan.b_n = h_opt;
  plan.m = m;
  plan.q_folds = q_folds;
  return plan;
}

std::vector<Eigen::Index> mmcv_train_sizes(Eigen::Index n, int m,
                                           int q_folds) {
  std::vector<Eigen::Index> sizes;
  sizes.reserve(static_cast<std::size_t>(q_folds));
  for (int k = 1; k <= q_folds; ++k) {
    sizes.push_back(n - static_cast<Eigen::Index>(k) * m);
  }
  return sizes;
}

double ams(const Dataset& data, const IndexParam& beta_pilot, double h, int m,
           int q_folds, const Kernel& k) {
  const Eigen::Index n = data.n();
  if (m < 1 || q_folds < 1 ||
      n <= static_cast<Eigen::Index>(m) * q_folds) {
    raise(errc::too_few_observations, "need n > m * Q for the MMCV split");
  }
  if (!(h > 0.0)) {
    raise(errc::invalid_argument, "bandwidth must be positive");
  }

  const Eigen::VectorXd index_values = data.index_values(beta_pilot);
  double total = 0.0;
  for (int fold = 1; fold <= q_folds; ++fold) {
    const Eigen::Index train_n = n - static_cast<Eigen::Index>(fold) * m;
    const double h_fold =
        h * std::pow(static_cast<double>(n) / static_cast<double>(train_n),
                     0.2);
    const Eigen::VectorXd train_u = index_values.head(train_n);
    const Eigen::VectorXd train_y = data.y.head(train_n);
    const Eigen::MatrixXd train_z = data.z.topRows(train_n);

    double sse = 0.0;
    for (Eigen::Index i = train_n; i < train_n + m; ++i) {
      const LocalFit fit = local_linear_fit_at(train_u, train_y, train_z,
                                               index_values(i), h_fold, k);
      const double pred = fit.a.dot(data.z.row(i));
      const double err = data.y(i) - pred;
      sse += err * err;
    }
    total += sse / static_cast<double>(m);
  }
  return total;
}

std::vector<double> default_bandwidth_grid(const Dataset& data,
                                           const IndexParam& beta_pilot) {
  const Eigen::VectorXd u = data.index_values(beta_pilot);
  const double mean = u.mean();
  const double sd = std::sqrt((u.array() - mean).square().sum() /
                              static_cast<double>(u.size() - 1));
  const double rate = std::pow(static_cast<double>(data.n()), -0.2);
  const double lo = 0.1 * sd * rate;
  const double hi = 2.0 * sd * rate;
  constexpr int kGridSize = 20;
  std::vector<double> grid(kGridSize);
  const double step = std::log(hi / lo) / (kGridSize - 1);
  for (int i = 0; i < kGridSize; ++i) {
    grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  }
  return grid;
}

BandwidthPlan select_bandwidths(
    const Dataset& data, const IndexParam& beta_pilot, const Kernel& k,
    const std::optional<std::vector<double>>& grid) {
  const Eigen::Index n = data.n();
  const int m = static_cast<int>(n / 10);
  constexpr int kFolds = 4;
  if (m < 1 || n <= static_cast<Eigen::Index>(m) * kFolds) {
    raise(errc::too_few_observations,
          "bandwidth selection needs n > floor(0.1 n) * 4 and n >= 10");
  }

  const std::vector<double> hs =
      grid ? *grid : default_bandwidth_grid(data, beta_pilot);
  if (hs.empty()) {
    raise(errc::invalid_argument, "bandwidth grid is empty");
  }

  double best_h = 0.0;
  double best_score = std::numeric_limits<double>::infinity();
  for (double h : hs) {
    double score;
    try {
      score = ams(data, beta_pilot, h, m, kFolds, k);
    } catch (const Error& e) {
      if (e.code() == errc::empty_window ||
          e.code() == errc::singular_after_ridge) {
        continue;  // this h cannot cover some validation point
      }
      throw;
    }
    if (score < best_score) {
      best_score = score;
      best_h = h;
    }
  }
  if (!(best_h > 0.0)) {
    raise(errc::all_infinite, "every grid bandwidth failed the MMCV folds");
  }
  return plan_from_hopt(best_h, n, m, kFolds);
}

}  // namespace sivcm
