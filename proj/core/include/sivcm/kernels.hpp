#pragma once

#include "sivcm/errors.hpp"

namespace sivcm {

enum class KernelId { epanechnikov, uniform, triangular };

/// Symmetric probability-density kernels on [-1, 1].
struct Kernel {
  KernelId id = KernelId::epanechnikov;
  static constexpr double support_radius = 1.0;

  double operator()(double u) const;
};

double kernel_eval(const Kernel& k, double u);

/// Indicator truncation weight of the interval [lower, upper].
struct WeightFn {
  double lower;
  double upper;

  WeightFn(double lo, double hi) : lower(lo), upper(hi) {
    if (!(lo < hi)) {
      raise(errc::invalid_argument, "weight interval requires lower < upper");
    }
  }

  double operator()(double u) const {
    return (u >= lower && u <= upper) ? 1.0 : 0.0;
  }
};

}  // namespace sivcm
