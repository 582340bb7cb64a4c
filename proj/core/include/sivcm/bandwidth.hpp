#pragma once

#include <optional>
#include <vector>

#include "sivcm/data.hpp"
#include "sivcm/kernels.hpp"

namespace sivcm {

/// Bandwidths used across the pipeline. h_opt is the MMCV minimizer at the
/// curve-optimal rate; h undersmooths it for the EL/estimation steps,
/// h1 drives the derivative solve and b_n the plug-in moments.
struct BandwidthPlan {
  double h_opt = 0.0;
  double h = 0.0;
  double h1 = 0.0;
  double b_n = 0.0;
  int m = 0;        // validation block length
  int q_folds = 0;  // number of folds
};

/// Derives (h, h1, b_n) from h_opt by the undersmoothing rule
/// h = h_opt n^{-1/20} (log n)^{-1/2}, h1 = b_n = h_opt.
BandwidthPlan plan_from_hopt(double h_opt, Eigen::Index n, int m, int q_folds);

/// Training-set sizes of the multi-fold split: n - k m for k = 1..Q.
std::vector<Eigen::Index> mmcv_train_sizes(Eigen::Index n, int m, int q_folds);

/// Multi-fold cross-validation score: sum over folds of the mean squared
/// one-step prediction error on the next block of m observations, with the
/// per-fold bandwidth rescaled by (n / train_n)^{1/5}.
double ams(const Dataset& data, const IndexParam& beta_pilot, double h, int m,
           int q_folds, const Kernel& k);

/// Log-spaced default grid bracketing the n^{-1/5} rate around the scale of
/// the pilot index values.
std::vector<double> default_bandwidth_grid(const Dataset& data,
                                           const IndexParam& beta_pilot);

/// Minimizes ams over the grid (m = floor(0.1 n), Q = 4) and derives the
/// full plan. Grid points where every fold fails are skipped; if all fail,
/// errc::all_infinite.
BandwidthPlan select_bandwidths(
    const Dataset& data, const IndexParam& beta_pilot, const Kernel& k,
    const std::optional<std::vector<double>>& grid = std::nullopt);

}  // namespace sivcm
