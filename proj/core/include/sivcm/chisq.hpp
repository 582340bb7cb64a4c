#pragma once

namespace sivcm {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Chi-square CDF and density with p degrees of freedom.
double chisq_cdf(double x, int p);
double chisq_pdf(double x, int p);

/// Upper-alpha quantile of chi-square with p degrees of freedom, found by
/// bisection on the CDF to 1e-10.
double chisq_quantile(int p, double alpha);

}  // namespace sivcm
