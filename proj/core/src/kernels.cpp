#include "sivcm/kernels.hpp"

#include <cmath>

namespace sivcm {

double Kernel::operator()(double u) const {
  const double a = std::abs(u);
  if (a >= 1.0) return 0.0;
  switch (id) {
    case KernelId::epanechnikov:
      return 0.75 * (1.0 - u * u);
    case KernelId::uniform:
      return 0.5;
    case KernelId::triangular:
      return 1.0 - a;
  }
  return 0.0;
}

double kernel_eval(const Kernel& k, double u) { return k(u); }

}  // namespace sivcm
