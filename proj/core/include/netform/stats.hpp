#ifndef NETFORM_STATS_HPP
#define NETFORM_STATS_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace netform {

struct KsResult {
  double d = 0.0;        // sup-distance between empirical and target CDF
  double p_value = 1.0;  // asymptotic Kolmogorov tail probability
};

// One-sample Kolmogorov-Smirnov test of samples in [0,1] against
// Uniform(0,1). The p-value uses the asymptotic Kolmogorov distribution
// with the usual small-sample correction of the effective sqrt(n).
// Throws on an empty sample.
KsResult ks_uniformity_test(const std::vector<double>& samples);

// Survival function of the Kolmogorov distribution,
// Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_tail(double lambda);

// Regularized incomplete beta function I_x(a, b), the Beta(a, b) CDF.
double beta_cdf(double x, double a, double b);

// KS test after mapping the samples through the Beta(a, b) CDF; Beta(1, 1)
// reduces to the plain uniformity test.
KsResult beta_marginal_test(const std::vector<double>& samples, double a,
                            double b);

// Pearson correlation of two equal-length samples.
double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y);

double mean(const std::vector<double>& x);
double median(std::vector<double> x);

}  // namespace netform

#endif  // NETFORM_STATS_HPP
